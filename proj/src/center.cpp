#include "tqft/center.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "tqft/error.hpp"
#include "tqft/linalg.hpp"

namespace tqft {

const ModularData& CenterData::md() const
{
    if (!modular) throw ValidationError("center: modular data unavailable (" + modular_failure + ")");
    return *modular;
}

namespace {

using Element = TubeAlgebra::Element;

struct Blocks {
    std::vector<Element> idempotents;
    double min_gap = 0.0;
};

// Minimal central idempotents from the spectrum of a random central element.
Blocks split_center(const TubeAlgebra& tube, const Eigen::MatrixXcd& zb, std::uint64_t seed, double tol)
{
    const Eigen::Index k = zb.cols();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd w(k);
    for (Eigen::Index i = 0; i < k; ++i) w(i) = cplx(gauss(rng), 0.0);
    Element z = zb * w;
    Eigen::MatrixXcd m(k, k);
    for (Eigen::Index j = 0; j < k; ++j) m.col(j) = zb.adjoint() * tube.multiply(z, zb.col(j));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
    if (es.info() != Eigen::Success) throw NumericalError("center: eigensolver failed");
    Blocks out;
    const auto& lam = es.eigenvalues();
    double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
    out.min_gap = INFINITY;
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = i + 1; j < k; ++j) out.min_gap = std::min(out.min_gap, std::abs(lam(i) - lam(j)) / scale);
    if (k == 1) out.min_gap = 1.0;
    if (out.min_gap < 1e-6) return out;
    for (Eigen::Index i = 0; i < k; ++i) {
        Element p = zb * es.eigenvectors().col(i);
        Element p2 = tube.multiply(p, p);
        Eigen::Index at;
        p.cwiseAbs().maxCoeff(&at);
        cplx alpha = p2(at) / p(at);
        if (std::abs(alpha) < tol) throw NumericalError("center: nilpotent central element");
        p /= alpha;
        double res = (tube.multiply(p, p) - p).cwiseAbs().maxCoeff();
        if (res > 1e-7) throw NumericalError("center: spectral projection is not idempotent");
        out.idempotents.push_back(p);
    }
    return out;
}

double rounded(double v, double q) { return std::round(v / q) * q; }

} // namespace

cplx tube_character(const TubeAlgebra& tube, const CenterData& cd, int x, const Element& t)
{
    Eigen::MatrixXcd lp = tube.left_matrix(cd.idempotents.at(x));
    return (tube.left_matrix(t) * lp).trace() / static_cast<double>(cd.block_sizes.at(x));
}

CenterData decompose_center(const TubeAlgebra& tube, const FSymbolSet& fs, const CenterOptions& opt)
{
    const int dm = tube.dim();
    const int rc = fs.rank();
    // Center of the algebra: z with z x = x z for every basis x.
    Eigen::MatrixXcd eqs(static_cast<Eigen::Index>(dm) * dm, dm);
    for (int i = 0; i < dm; ++i) {
        Element x = tube.basis_element(i);
        eqs.block(static_cast<Eigen::Index>(i) * dm, 0, dm, dm) = tube.right_matrix(x) - tube.left_matrix(x);
    }
    Eigen::MatrixXcd zb = null_space(eqs, 1e-9);
    if (zb.cols() == 0) throw NumericalError("center: algebra has trivial center");

    CenterData cd;
    cd.ring_c = fs.ring();
    cd.dims_c = fs.dims().d;
    cd.mu_c = fs.mu();
    Blocks blocks;
    std::uint64_t seed = opt.seed;
    for (int attempt = 1;; ++attempt) {
        blocks = split_center(tube, zb, seed, opt.tol);
        cd.attempts = attempt;
        if (!blocks.idempotents.empty()) break;
        if (attempt >= opt.max_attempts)
            throw NumericalError("center: block detection unstable (degenerate random central element after " +
                                 std::to_string(attempt) + " seeds)");
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    }
    cd.seed = seed;
    const int rz = static_cast<int>(blocks.idempotents.size());

    std::vector<Eigen::MatrixXcd> lp(rz);
    std::vector<int> nx(rz);
    for (int x = 0; x < rz; ++x) {
        lp[x] = tube.left_matrix(blocks.idempotents[x]);
        double sq = lp[x].trace().real();
        long long n2 = to_integer(sq, 1e-6, "center: block dimension");
        long long n = std::llround(std::sqrt(static_cast<double>(n2)));
        if (n * n != n2 || n < 1) throw NumericalError("center: block dimension is not a perfect square");
        nx[x] = static_cast<int>(n);
    }
    std::vector<Eigen::MatrixXcd> lbasis(dm);
    for (int i = 0; i < dm; ++i) lbasis[i] = tube.left_matrix(tube.basis_element(i));
    // chi(x, i) = character of block x on basis tube i.
    Eigen::MatrixXcd chi(rz, dm);
    for (int x = 0; x < rz; ++x)
        for (int i = 0; i < dm; ++i) chi(x, i) = (lbasis[i] * lp[x]).trace() / static_cast<double>(nx[x]);

    Eigen::MatrixXi B(rc, rz);
    std::vector<double> dz(rz, 0.0);
    for (int a = 0; a < rc; ++a)
        for (int x = 0; x < rz; ++x) {
            cplx v = chi(x, tube.index(a, 0, a, a));
            B(a, x) = static_cast<int>(to_integer(v.real(), 1e-6, "center: induction multiplicity"));
            dz[x] += B(a, x) * fs.d(a);
        }
    Element r = tube.twist_element();
    std::vector<cplx> theta(rz);
    for (int x = 0; x < rz; ++x) theta[x] = (chi.row(x) * r)(0) / static_cast<double>(nx[x]);

    // Vacuum: the block on which each closed tube E(1, s, 1; s) acts by d_s.
    int vacuum = -1;
    for (int x = 0; x < rz && vacuum < 0; ++x) {
        bool ok = true;
        for (int s = 0; s < rc && ok; ++s) ok = std::abs(chi(x, tube.index(0, s, 0, s)) - fs.d(s)) < 1e-6;
        if (ok) vacuum = x;
    }
    if (vacuum < 0) throw NumericalError("center: no vacuum block found");

    // Canonical order.
    std::vector<int> order(rz);
    std::iota(order.begin(), order.end(), 0);
    auto key_less = [&](int x, int y) {
        if ((x == vacuum) != (y == vacuum)) return x == vacuum;
        double dx = rounded(dz[x], 1e-6), dy = rounded(dz[y], 1e-6);
        if (dx != dy) return dx < dy;
        double ax = rounded(std::arg(theta[x]), 1e-6), ay = rounded(std::arg(theta[y]), 1e-6);
        if (ax <= -M_PI + 1e-6) ax = M_PI;
        if (ay <= -M_PI + 1e-6) ay = M_PI;
        if (ax != ay) return ax < ay;
        for (int a = 0; a < rc; ++a)
            if (B(a, x) != B(a, y)) return B(a, x) > B(a, y);
        for (int i = 0; i < dm; ++i) {
            double px = rounded(chi(x, i).real(), 1e-6), py = rounded(chi(y, i).real(), 1e-6);
            if (px != py) return px < py;
            px = rounded(chi(x, i).imag(), 1e-6);
            py = rounded(chi(y, i).imag(), 1e-6);
            if (px != py) return px < py;
        }
        return x < y;
    };
    std::stable_sort(order.begin(), order.end(), key_less);

    cd.rank_z = rz;
    cd.induction.resize(rc, rz);
    cd.T_z.resize(rz);
    Eigen::MatrixXcd chi_sorted(rz, dm);
    for (int k = 0; k < rz; ++k) {
        int x = order[k];
        cd.labels_z.push_back("Z" + std::to_string(k));
        cd.dims_z.push_back(dz[x]);
        cd.block_sizes.push_back(nx[x]);
        cd.idempotents.push_back(blocks.idempotents[x]);
        cd.induction.col(k) = B.col(x);
        cd.T_z(k) = theta[x];
        chi_sorted.row(k) = chi.row(x);
    }

    // S from the quarter-turn: chi(rot t) = S chi(t) on closed tubes.
    std::vector<int> closed;
    for (int i = 0; i < dm; ++i)
        if (tube.is_closed(i)) closed.push_back(i);
    const Eigen::Index nc = static_cast<Eigen::Index>(closed.size());
    Eigen::MatrixXcd xc(rz, nc), k(rz, nc);
    for (Eigen::Index j = 0; j < nc; ++j) {
        xc.col(j) = chi_sorted.col(closed[j]);
        Element rt = tube.rotate(tube.basis_element(closed[j]));
        k.col(j) = chi_sorted * rt;
    }
    Eigen::MatrixXcd gram = xc * xc.adjoint();
    Eigen::MatrixXcd s_fit = k * xc.adjoint() * gram.inverse();
    cd.s_fit_residual = (s_fit * xc - k).cwiseAbs().maxCoeff();

    if (cd.s_fit_residual > 1e-6) {
        std::ostringstream os;
        os << "rotation is not diagonal in the character basis (residual " << cd.s_fit_residual << ")";
        cd.modular_failure = os.str();
        return cd;
    }
    std::string first_error;
    for (int conj = 0; conj < 2 && !cd.modular; ++conj) {
        Eigen::VectorXcd t = conj ? Eigen::VectorXcd(cd.T_z.conjugate()) : cd.T_z;
        try {
            cd.modular.emplace(cd.labels_z, s_fit, t, 1e-7);
            cd.twist_conjugated = conj == 1;
        } catch (const ValidationError& e) {
            if (first_error.empty()) first_error = e.what();
        }
    }
    if (!cd.modular) {
        cd.modular_failure = first_error;
        return cd;
    }
    if (cd.twist_conjugated) cd.T_z = cd.modular->T();
    return cd;
}

ModularData center_from_square(const ModularData& md)
{
    const int r = md.rank();
    Eigen::MatrixXcd s(r * r, r * r);
    Eigen::VectorXcd t(r * r);
    std::vector<std::string> labels;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            labels.push_back(md.labels()[i] + "." + md.labels()[j] + "*");
            t(i * r + j) = md.theta(i) * std::conj(md.theta(j));
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) s(i * r + j, k * r + l) = md.S()(i, k) * std::conj(md.S()(j, l));
        }
    return ModularData(std::move(labels), std::move(s), std::move(t));
}

CenterCheck check_center(const CenterData& cd, const FSymbolSet& fs, double tol)
{
    CenterCheck c;
    for (int v = 0; v < fs.rank(); ++v) {
        double sum = 0.0;
        for (int x = 0; x < cd.rank_z; ++x) sum += cd.dims_z[x] * cd.induction(v, x);
        c.induction_residual = std::max(c.induction_residual, std::abs(sum - fs.mu() * fs.d(v)));
    }
    if (cd.modular) {
        c.total_dimension_residual = std::abs(cd.modular->D() - fs.mu());
        c.anomaly_residual = std::max(std::abs(cd.modular->anomaly() - cplx(1.0, 0.0)),
                                      std::abs(cd.modular->p_minus() / cd.modular->D() - cplx(1.0, 0.0)));
    }
    c.pass = cd.modular && c.induction_residual < tol && c.total_dimension_residual < tol && c.anomaly_residual < tol;
    return c;
}

} // namespace tqft
