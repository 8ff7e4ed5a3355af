#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqft/modular_data.hpp"
#include "tqft/tube_algebra.hpp"

namespace tqft {

struct CenterOptions {
    std::uint64_t seed = 20240611;
    int max_attempts = 6;
    double tol = 1e-9;
};

struct CenterData {
    int rank_z = 0;
    std::vector<std::string> labels_z;
    std::vector<double> dims_z;
    Eigen::VectorXcd T_z;
    // Absent when the fitted S matrix fails the modular-data checks; only rank
    // and twists are reported then.
    std::optional<ModularData> modular;
    std::string modular_failure;
    // induction(V, X) = dim Hom(X, I(V)).
    Eigen::MatrixXi induction;
    // Matrix-block size of each simple summand of the tube algebra.
    std::vector<int> block_sizes;
    // Minimal central idempotents, in label order.
    std::vector<TubeAlgebra::Element> idempotents;
    std::uint64_t seed = 0;
    int attempts = 0;
    // Input category data.
    FusionRing ring_c;
    std::vector<double> dims_c;
    double mu_c = 0.0;
    double s_fit_residual = 0.0;
    // True when T is the conjugate of the central twist values; chosen so that
    // (S T)^3 is proportional to S^2.
    bool twist_conjugated = false;

    bool has_modular() const { return modular.has_value(); }
    // Throws ValidationError when S could not be produced.
    const ModularData& md() const;
};

CenterData decompose_center(const TubeAlgebra& tube, const FSymbolSet& fs,
                            const CenterOptions& opt = CenterOptions());

// chi_X(t) = tr(L_t L_{P_X}) / n_X: the character of the simple module X.
cplx tube_character(const TubeAlgebra& tube, const CenterData& cd, int x, const TubeAlgebra::Element& t);

// S (x) conj(S), T (x) conj(T); label (i, j) sits at index i * rank + j.
ModularData center_from_square(const ModularData& md);

struct CenterCheck {
    double induction_residual = 0.0;
    double total_dimension_residual = 0.0;
    double anomaly_residual = 0.0;
    bool pass = false;
};

CenterCheck check_center(const CenterData& cd, const FSymbolSet& fs, double tol = 1e-6);

} // namespace tqft
