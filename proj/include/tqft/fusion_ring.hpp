#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

namespace tqft {

// Based ring with structure constants N[i][j][k] = N_{ij}^k. Index 0 is the unit.
class FusionRing {
public:
    FusionRing() = default;
    FusionRing(std::vector<std::string> labels, std::vector<int> dual, std::vector<int> coeffs);

    int rank() const { return rank_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    int dual(int i) const { return dual_[i]; }
    const std::vector<int>& duals() const { return dual_; }

    int N(int i, int j, int k) const { return coeffs_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k]; }
    const std::vector<int>& coefficients() const { return coeffs_; }

    // Left-multiplication matrix: entry [m][n] = N_{i n}^m.
    Eigen::MatrixXd fusion_matrix(int i) const;
    bool multiplicity_free() const;
    bool commutative() const;
    int index_of(const std::string& label) const;
    // Resolves a label or a decimal index.
    int resolve(const std::string& token) const;

    // Throws ValidationError naming the first violated invariant.
    void validate() const;

    bool operator==(const FusionRing& o) const
    {
        return labels_ == o.labels_ && dual_ == o.dual_ && coeffs_ == o.coeffs_;
    }

private:
    int rank_ = 0;
    std::vector<std::string> labels_;
    std::vector<int> dual_;
    std::vector<int> coeffs_;
};

struct DimensionData {
    std::vector<double> d;
    double mu = 0.0;
    int iterations = 0;
};

FusionRing parse_fusion_ring(const std::string& text);
FusionRing fusion_ring_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const FusionRing& ring);

DimensionData frobenius_perron_data(const FusionRing& ring);

// Multiplicity of the unit in the ordered product of the given labels.
long long hom_from_unit(const FusionRing& ring, const std::vector<int>& factors);

// Frobenius-Perron weights of a family of commuting nonnegative matrices via
// power iteration on their sum, normalized so that the first entry is 1.
std::vector<double> perron_vector(const Eigen::MatrixXd& sum, int max_iter, int* iterations = nullptr);

} // namespace tqft
