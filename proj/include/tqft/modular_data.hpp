#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "tqft/fusion_ring.hpp"
#include "tqft/scalar.hpp"

namespace tqft {

class ModularData {
public:
    ModularData() = default;
    // Validates every invariant; throws ValidationError on the first failure.
    ModularData(std::vector<std::string> labels, Eigen::MatrixXcd S, Eigen::VectorXcd T, double tol);
    ModularData(std::vector<std::string> labels, Eigen::MatrixXcd S, Eigen::VectorXcd T);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const Eigen::MatrixXcd& S() const { return S_; }
    const Eigen::VectorXcd& T() const { return T_; }
    cplx theta(int i) const { return T_(i); }
    double d(int i) const { return d_[i]; }
    const std::vector<double>& dims() const { return d_; }
    double D() const { return D_; }
    cplx p_plus() const { return p_plus_; }
    cplx p_minus() const { return p_minus_; }
    // Charge conjugation read off S^2.
    int dual(int i) const { return dual_[i]; }
    int N(int i, int j, int k) const { return N_[(static_cast<size_t>(i) * rank() + j) * rank() + k]; }
    FusionRing fusion_ring() const;
    // p_plus / D; equal to 1 for anomaly-free data.
    cplx anomaly() const { return p_plus_ / D_; }

private:
    std::vector<std::string> labels_;
    Eigen::MatrixXcd S_;
    Eigen::VectorXcd T_;
    std::vector<double> d_;
    double D_ = 1.0;
    cplx p_plus_, p_minus_;
    std::vector<int> dual_;
    std::vector<int> N_;
};

ModularData parse_modular_data(const std::string& text);
ModularData modular_data_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const ModularData& md);

// Simultaneous relabeling perm with a.S[perm[i]][perm[j]] ~ b.S[i][j] and
// a.T[perm[i]] ~ b.T[i]; empty if none exists.
std::vector<int> match_modular_data(const ModularData& a, const ModularData& b, double tol);

} // namespace tqft
