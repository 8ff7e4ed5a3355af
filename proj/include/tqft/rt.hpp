#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "tqft/modular_data.hpp"
#include "tqft/plumbing.hpp"
#include "tqft/scalar.hpp"

namespace tqft {

using Mat2 = std::array<std::array<long long, 2>, 2>;

inline constexpr Mat2 kIdentity2{{{1, 0}, {0, 1}}};
inline constexpr Mat2 kGenS{{{0, -1}, {1, 0}}};
inline constexpr Mat2 kGenT{{{1, 1}, {0, 1}}};

Mat2 mat_mul(const Mat2& a, const Mat2& b);
long long mat_det(const Mat2& a);
Mat2 mat_transpose(const Mat2& a);
// J a J with J = diag(1, -1).
Mat2 mat_reflect(const Mat2& a);
Mat2 mat_inverse(const Mat2& a);

// A run of one generator: S^exp (exp in 1..3) or T^exp (exp != 0).
struct Syllable {
    char gen = 'T';
    long long exp = 0;
    bool operator==(const Syllable& o) const { return gen == o.gen && exp == o.exp; }
};

struct SL2ZWord {
    Mat2 target = kIdentity2;
    std::vector<Syllable> word;

    Mat2 product() const;
    // Run-length text such as "T^2 S T^-1"; empty word is "1".
    std::string str() const;
};

SL2ZWord sl2z_factor(const Mat2& target);
SL2ZWord parse_word(const std::string& text);

// rho(S) = S, rho(T) = diag(theta), applied right to left along the word.
Eigen::MatrixXcd torus_rep_matrix(const ModularData& md, const SL2ZWord& w);
Eigen::VectorXcd torus_rep_apply(const ModularData& md, const Mat2& f, const Eigen::VectorXcd& vec,
                                 bool strict = true);

cplx rt_invariant(const ModularData& md, const PlumbingTree& tree);
double verlinde_dimension(const ModularData& md, int genus);

} // namespace tqft
