#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqft/fusion_ring.hpp"
#include "tqft/nimrep.hpp"

namespace tqft {

struct CriterionReport {
    int n = 0;
    long long matrix_dim = 0;
    double min_eigenvalue = 0.0;
    bool pass = false;
    // "dense" (full symmetric eigendecomposition) or "spectral" (joint
    // eigenvalues of the commuting fusion matrices).
    std::string method;
};

struct CriteriaOptions {
    long long size_cap = 4096;
    // Largest matrix handled by dense eigendecomposition; larger sizes use the
    // joint spectrum when the matrices commute.
    long long dense_limit = 512;
    double tol = 1e-9;
};

// Sum_j w[j] * mats[j]^{(x) n}, upper triangle computed and mirrored.
Eigen::MatrixXd weighted_kronecker_power(const std::vector<Eigen::MatrixXd>& mats, const std::vector<double>& w,
                                         int n, long long size_cap = 4096);

Eigen::MatrixXd criterion_matrix(const FusionRing& ring, const DimensionData& dims, int n,
                                 long long size_cap = 4096);

std::vector<CriterionReport> check_positivity(const FusionRing& ring, int n_max,
                                              const CriteriaOptions& opt = CriteriaOptions());
std::vector<CriterionReport> check_module_positivity(const FusionRing& ring, const NimRep& nim, int n_max,
                                                     const CriteriaOptions& opt = CriteriaOptions());

// Largest n with rank^n <= cap.
int max_criterion_order(long long rank, long long cap);

// Minimum eigenvalue of Sum_j w[j] * mats[j]^{(x) n} from the joint spectrum of
// commuting normal matrices; size rank^n is never materialized.
double spectral_min_eigenvalue(const std::vector<Eigen::MatrixXd>& mats, const std::vector<double>& w, int n);

struct OmegaReport {
    bool holds = false;
    double residual = 0.0;
};

OmegaReport omega_rank_one(const FusionRing& ring, const NimRep& nim, double tol = 1e-9);

} // namespace tqft
