#pragma once

#include <string>

#include <Eigen/Dense>

#include "tqft/center.hpp"
#include "tqft/rt.hpp"
#include "tqft/tube_algebra.hpp"

namespace tqft {

struct TorusCurve {
    long long m = 1;
    long long r = 0;

    TorusCurve() = default;
    TorusCurve(long long m_, long long r_);
    long long d() const;
    TorusCurve primitive() const { return {m / d(), r / d()}; }
    TorusCurve transformed(const Mat2& f) const;
};

// Determinant-one matrix with first column (m, r) for a primitive curve:
// the completing column is the smallest nonnegative choice.
Mat2 curve_completion(const TorusCurve& primitive);

struct IndicatorResult {
    cplx value;
    // Factorization of the completion used (primitive curve).
    SL2ZWord word;
    // Global normalization constant applied to the pairing; 1 unless an oracle
    // discrepancy forced a change.
    double normalization = 1.0;
};

// Multiplicities of simple W in V^{(x) n}.
Eigen::VectorXd tensor_power_multiplicities(const FusionRing& ring, int v, long long n);

IndicatorResult genus1_indicator(const CenterData& cd, const TorusCurve& curve, const Eigen::VectorXcd& v,
                                 const Eigen::VectorXcd& z);

// Indicator of the simple V at curve (n, k) against z (default: the vacuum).
cplx fs_indicator(const CenterData& cd, long long n, long long k, int v);
cplx fs_indicator(const CenterData& cd, long long n, long long k, int v, const Eigen::VectorXcd& z);

struct EquivarianceReport {
    bool holds = false;
    double residual = 0.0;
    cplx moved_curve;   // indicator at f(curve) against z
    cplx moved_vector;  // indicator at curve against f~(z)
};

// f~ acts on the center vector through rho(J f^T J).
Mat2 equivariance_conjugate(const Mat2& f);

EquivarianceReport check_equivariance(const CenterData& cd, const Mat2& f, const TorusCurve& curve,
                                      const Eigen::VectorXcd& v, const Eigen::VectorXcd& z, double tol = 1e-6);

// Tube-algebra evaluation: the closed tube of the (cabled) V-colored curve is
// moved by quarter turns and Dehn twists acting inside the tube algebra and
// read off with the character of block X.
cplx indicator_reference_oracle(const TubeAlgebra& tube, const CenterData& cd, const TorusCurve& curve, int v, int x);

} // namespace tqft
