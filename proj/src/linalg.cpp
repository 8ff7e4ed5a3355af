#include "tqft/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include <boost/rational.hpp>

#include "tqft/error.hpp"

namespace tqft {

double min_symmetric_eigenvalue(const Eigen::MatrixXd& m)
{
    if (m.rows() == 0) return 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("symmetric eigensolver failed");
    return es.eigenvalues().minCoeff();
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw NumericalError("integer overflow in Smith normal form");
    return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) throw NumericalError("integer overflow in Smith normal form");
    return out;
}

} // namespace

SmithForm smith_normal_form(IntMatrix a)
{
    SmithForm out;
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    size_t t = 0;
    while (t < rows && t < cols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        size_t pr = rows, pc = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || std::llabs(a[i][j]) < std::llabs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows) break;
        std::swap(a[t], a[pr]);
        for (auto& row : a) std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                std::int64_t q = a[i][t] / a[t][t];
                for (size_t j = t; j < cols; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                std::int64_t q = a[t][j] / a[t][t];
                for (size_t i = t; i < rows; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
                if (a[t][j] != 0) {
                    for (auto& row : a) std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // Divisibility: fold any entry not divisible by the pivot into row t.
                for (size_t i = t + 1; i < rows && clean; ++i)
                    for (size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
                            clean = false;
                        }
            }
        }
        out.diagonal.push_back(std::llabs(a[t][t]));
        ++t;
    }
    out.rank = static_cast<int>(out.diagonal.size());
    return out;
}

Inertia rational_inertia(const IntMatrix& m)
{
    // Mixed rational/integer comparisons recurse forever in boost 1.74 under
    // C++20 rewritten operators, so signs are read off the numerator.
    using Q = boost::rational<long long>;
    const size_t n = m.size();
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw ValidationError("inertia: matrix is not square");
        for (size_t j = 0; j < n; ++j) {
            if (m[i][j] != m[j][i]) throw ValidationError("inertia: matrix is not symmetric");
            a[i][j] = Q(static_cast<long long>(m[i][j]));
        }
    }
    Inertia out;
    std::vector<bool> done(n, false);
    for (size_t step = 0; step < n; ++step) {
        size_t p = n;
        for (size_t i = 0; i < n; ++i)
            if (!done[i] && a[i][i].numerator() != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // No diagonal pivot: a nonzero off-diagonal a[i][j] lets row/column j be added to i.
            size_t pi = n, pj = n;
            for (size_t i = 0; i < n && pi == n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && a[i][j].numerator() != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) break;
            for (size_t k = 0; k < n; ++k) a[pi][k] += a[pj][k];
            for (size_t k = 0; k < n; ++k) a[k][pi] += a[k][pj];
            p = pi;
            if (a[p][p].numerator() == 0) throw NumericalError("inertia: pivot construction failed");
        }
        Q piv = a[p][p];
        if (piv.numerator() > 0)
            ++out.positive;
        else
            ++out.negative;
        done[p] = true;
        for (size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p].numerator() == 0) continue;
            Q f = a[i][p] / piv;
            for (size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
            for (size_t k = 0; k < n; ++k) a[k][i] -= f * a[k][p];
        }
    }
    out.zero = static_cast<int>(n) - out.positive - out.negative;
    return out;
}

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& m, double tol)
{
    const Eigen::Index n = m.cols();
    if (m.rows() == 0) return Eigen::MatrixXcd::Identity(n, n);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    double scale = sv.size() ? std::max(1.0, sv(0)) : 1.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * scale) ++rank;
    return svd.matrixV().rightCols(n - rank);
}

} // namespace tqft
