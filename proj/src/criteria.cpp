#include "tqft/criteria.hpp"

#include <cmath>
#include <random>

#include "tqft/error.hpp"
#include "tqft/linalg.hpp"
#include "tqft/scalar.hpp"

namespace tqft {

int max_criterion_order(long long rank, long long cap)
{
    if (rank <= 1) return 1 << 20;
    int n = 0;
    long long size = 1;
    while (size <= cap / rank) {
        size *= rank;
        ++n;
    }
    return n;
}

Eigen::MatrixXd weighted_kronecker_power(const std::vector<Eigen::MatrixXd>& mats, const std::vector<double>& w,
                                         int n, long long size_cap)
{
    if (n < 1) throw ValidationError("criterion order n must be at least 1");
    const long long r = mats.at(0).rows();
    long long size = 1;
    for (int k = 0; k < n; ++k) {
        if (size > size_cap / std::max(1LL, r)) throw CapExceeded("criterion matrix exceeds the size cap");
        size *= r;
    }
    if (size > size_cap) throw CapExceeded("criterion matrix exceeds the size cap");
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size, size);
    std::vector<int> row_digits(n), col_digits(n);
    for (long long I = 0; I < size; ++I) {
        long long t = I;
        for (int k = n - 1; k >= 0; --k) {
            row_digits[k] = static_cast<int>(t % r);
            t /= r;
        }
        for (long long J = I; J < size; ++J) {
            long long u = J;
            for (int k = n - 1; k >= 0; --k) {
                col_digits[k] = static_cast<int>(u % r);
                u /= r;
            }
            double acc = 0.0;
            for (size_t j = 0; j < mats.size(); ++j) {
                double prod = w[j];
                for (int k = 0; k < n && prod != 0.0; ++k) prod *= mats[j](row_digits[k], col_digits[k]);
                acc += prod;
            }
            out(I, J) = acc;
            out(J, I) = acc;
        }
    }
    return out;
}

Eigen::MatrixXd criterion_matrix(const FusionRing& ring, const DimensionData& dims, int n, long long size_cap)
{
    std::vector<Eigen::MatrixXd> mats;
    std::vector<double> w;
    for (int j = 0; j < ring.rank(); ++j) {
        mats.push_back(ring.fusion_matrix(j));
        w.push_back(std::pow(dims.d[j], 2.0 - n));
    }
    return weighted_kronecker_power(mats, w, n, size_cap);
}

double spectral_min_eigenvalue(const std::vector<Eigen::MatrixXd>& mats, const std::vector<double>& w, int n)
{
    const Eigen::Index m = mats.at(0).rows();
    // A generic combination of commuting normal matrices separates their joint eigenspaces.
    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> unif(0.5, 1.5);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
    for (const auto& a : mats) h += cplx(unif(rng), unif(rng)) * a.cast<cplx>();
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) throw NumericalError("joint diagonalization failed");
    // lambda[j][alpha] = eigenvalue of mats[j] on joint eigenvector alpha.
    std::vector<std::vector<cplx>> lambda(mats.size(), std::vector<cplx>(m));
    for (Eigen::Index a = 0; a < m; ++a) {
        Eigen::VectorXcd v = es.eigenvectors().col(a);
        v /= v.norm();
        for (size_t j = 0; j < mats.size(); ++j) {
            Eigen::VectorXcd av = mats[j].cast<cplx>() * v;
            lambda[j][a] = v.dot(av);
            if ((av - lambda[j][a] * v).norm() > 1e-8 * std::max(1.0, mats[j].norm()))
                throw NumericalError("fusion matrices are not simultaneously diagonalizable");
        }
    }
    // Each multiset of eigenvector indices gives one eigenvalue; enumerate with
    // multiplicities irrelevant to the minimum.
    double best = INFINITY;
    std::vector<int> idx(n, 0);
    while (true) {
        cplx acc = 0.0;
        for (size_t j = 0; j < mats.size(); ++j) {
            cplx prod = w[j];
            for (int k = 0; k < n; ++k) prod *= lambda[j][idx[k]];
            acc += prod;
        }
        best = std::min(best, acc.real());
        int k = n - 1;
        while (k >= 0 && idx[k] == m - 1) --k;
        if (k < 0) break;
        ++idx[k];
        for (int q = k + 1; q < n; ++q) idx[q] = idx[k];
    }
    return best;
}

namespace {

bool commuting(const std::vector<Eigen::MatrixXd>& mats)
{
    for (size_t i = 0; i < mats.size(); ++i)
        for (size_t j = i + 1; j < mats.size(); ++j)
            if ((mats[i] * mats[j] - mats[j] * mats[i]).cwiseAbs().maxCoeff() > 0.5) return false;
    return true;
}

std::vector<CriterionReport> run_criteria(const std::vector<Eigen::MatrixXd>& mats, const std::vector<double>& d,
                                          int n_max, const CriteriaOptions& opt)
{
    std::vector<CriterionReport> out;
    const long long r = mats.at(0).rows();
    const bool can_spectral = commuting(mats);
    int n_top = std::min(n_max, max_criterion_order(r, opt.size_cap));
    for (int n = 1; n <= n_top; ++n) {
        CriterionReport rep;
        rep.n = n;
        rep.matrix_dim = 1;
        for (int k = 0; k < n; ++k) rep.matrix_dim *= r;
        std::vector<double> w;
        for (double dj : d) w.push_back(std::pow(dj, 2.0 - n));
        if (rep.matrix_dim > opt.dense_limit && can_spectral) {
            rep.method = "spectral";
            rep.min_eigenvalue = spectral_min_eigenvalue(mats, w, n);
        } else {
            rep.method = "dense";
            rep.min_eigenvalue = min_symmetric_eigenvalue(weighted_kronecker_power(mats, w, n, opt.size_cap));
        }
        rep.pass = rep.min_eigenvalue >= -opt.tol;
        out.push_back(rep);
    }
    return out;
}

} // namespace

std::vector<CriterionReport> check_positivity(const FusionRing& ring, int n_max, const CriteriaOptions& opt)
{
    DimensionData dims = frobenius_perron_data(ring);
    std::vector<Eigen::MatrixXd> mats;
    for (int j = 0; j < ring.rank(); ++j) mats.push_back(ring.fusion_matrix(j));
    return run_criteria(mats, dims.d, n_max, opt);
}

std::vector<CriterionReport> check_module_positivity(const FusionRing& ring, const NimRep& nim, int n_max,
                                                     const CriteriaOptions& opt)
{
    DimensionData dims = frobenius_perron_data(ring);
    std::vector<Eigen::MatrixXd> mats;
    for (int j = 0; j < ring.rank(); ++j) mats.push_back(nim.matrix(j));
    return run_criteria(mats, dims.d, n_max, opt);
}

OmegaReport omega_rank_one(const FusionRing& ring, const NimRep& nim, double tol)
{
    DimensionData dims = frobenius_perron_data(ring);
    const int m = nim.module_rank;
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < ring.rank(); ++i) sum += dims.d[i] * nim.matrix(i);
    Eigen::Map<const Eigen::VectorXd> dm(nim.dM.data(), m);
    OmegaReport rep;
    rep.residual = (sum - dm * dm.transpose()).cwiseAbs().maxCoeff();
    rep.holds = rep.residual <= tol;
    return rep;
}

} // namespace tqft
