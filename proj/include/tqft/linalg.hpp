#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace tqft {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

double min_symmetric_eigenvalue(const Eigen::MatrixXd& m);

struct SmithForm {
    // Nonzero diagonal entries, each dividing the next.
    std::vector<std::int64_t> diagonal;
    int rank = 0;
};

// Smith normal form over the integers; throws on 64-bit overflow.
SmithForm smith_normal_form(IntMatrix m);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

// Exact inertia of a symmetric integer matrix by rational congruence diagonalization.
Inertia rational_inertia(const IntMatrix& m);

// Orthonormal basis (columns) of the null space of a complex matrix.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& m, double tol);

} // namespace tqft
