#include "tqft/indicators.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "tqft/error.hpp"

namespace tqft {

TorusCurve::TorusCurve(long long m_, long long r_) : m(m_), r(r_)
{
    if (m == 0 && r == 0) throw ValidationError("torus curve: (m, r) must not both be zero");
}

long long TorusCurve::d() const { return std::gcd(std::llabs(m), std::llabs(r)); }

TorusCurve TorusCurve::transformed(const Mat2& f) const
{
    return {f[0][0] * m + f[0][1] * r, f[1][0] * m + f[1][1] * r};
}

namespace {

// x with a*x = 1 (mod n), n > 1 and gcd(a, n) = 1.
long long inverse_mod(long long a, long long n)
{
    long long t = 0, nt = 1, rr = n, nr = ((a % n) + n) % n;
    while (nr != 0) {
        long long q = rr / nr;
        std::tie(t, nt) = std::make_pair(nt, t - q * nt);
        std::tie(rr, nr) = std::make_pair(nr, rr - q * nr);
    }
    if (rr != 1) throw ValidationError("torus curve is not primitive");
    return ((t % n) + n) % n;
}

cplx ipow(cplx x, long long e)
{
    cplx out = 1.0;
    while (e) {
        if (e & 1) out *= x;
        x *= x;
        e >>= 1;
    }
    return out;
}

} // namespace

Mat2 curve_completion(const TorusCurve& c)
{
    if (c.d() != 1) throw ValidationError("torus curve completion requires a primitive curve");
    const long long a = c.m, cc = c.r;
    if (a == 0) return Mat2{{{0, -cc}, {cc, 0}}};
    const long long n = std::llabs(a);
    long long b = 0;
    if (n > 1) {
        // a d - b c = 1 needs b c = -1 (mod a).
        long long cinv = inverse_mod(cc, n);
        b = ((-cinv) % n + n) % n;
    }
    long long num = 1 + b * cc;
    if (num % a != 0) throw Error("torus curve completion failed");
    Mat2 g{{{a, b}, {cc, num / a}}};
    if (mat_det(g) != 1) throw Error("torus curve completion failed");
    return g;
}

Eigen::VectorXd tensor_power_multiplicities(const FusionRing& ring, int v, long long n)
{
    const int r = ring.rank();
    Eigen::VectorXd w = Eigen::VectorXd::Zero(r);
    w(0) = 1.0;
    for (long long k = 0; k < n; ++k) {
        Eigen::VectorXd next = Eigen::VectorXd::Zero(r);
        for (int a = 0; a < r; ++a)
            for (int m = 0; m < r; ++m) next(m) += w(a) * ring.N(a, v, m);
        w = next;
    }
    return w;
}

namespace {

cplx coprime_indicator(const CenterData& cd, const Mat2& g, const Eigen::VectorXcd& v, const Eigen::VectorXcd& z)
{
    const ModularData& md = cd.md();
    Eigen::VectorXcd u = cd.induction.cast<cplx>().transpose() * v;
    Eigen::VectorXcd w = torus_rep_apply(md, mat_reflect(mat_transpose(g)), z, true);
    return (u.transpose() * w)(0);
}

} // namespace

IndicatorResult genus1_indicator(const CenterData& cd, const TorusCurve& curve, const Eigen::VectorXcd& v,
                                 const Eigen::VectorXcd& z)
{
    if (v.size() != cd.induction.rows()) throw ValidationError("indicator: v has the wrong length");
    if (z.size() != cd.rank_z) throw ValidationError("indicator: z has the wrong length");
    IndicatorResult res;
    const TorusCurve prim = curve.primitive();
    const Mat2 g = curve_completion(prim);
    res.word = sl2z_factor(g);
    const long long d = curve.d();
    if (d == 1) {
        res.value = coprime_indicator(cd, g, v, z);
        return res;
    }
    // Each of the d parallel components is colored by v; only monomials are allowed.
    int support = -1;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) <= default_tol()) continue;
        if (support >= 0) throw ValidationError("indicator: non-coprime curve requires a monomial object vector");
        support = static_cast<int>(i);
    }
    if (support < 0) {
        res.value = 0.0;
        return res;
    }
    const cplx lambda = v(support);
    Eigen::VectorXd mult = tensor_power_multiplicities(cd.ring_c, support, d);
    res.value = ipow(lambda, d) * coprime_indicator(cd, g, mult.cast<cplx>(), z);
    return res;
}

cplx fs_indicator(const CenterData& cd, long long n, long long k, int v, const Eigen::VectorXcd& z)
{
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(cd.induction.rows());
    e(v) = 1.0;
    return genus1_indicator(cd, TorusCurve(n, k), e, z).value;
}

cplx fs_indicator(const CenterData& cd, long long n, long long k, int v)
{
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(cd.rank_z);
    z(0) = 1.0;
    return fs_indicator(cd, n, k, v, z);
}

Mat2 equivariance_conjugate(const Mat2& f) { return mat_reflect(mat_transpose(f)); }

EquivarianceReport check_equivariance(const CenterData& cd, const Mat2& f, const TorusCurve& curve,
                                      const Eigen::VectorXcd& v, const Eigen::VectorXcd& z, double tol)
{
    if (mat_det(f) != 1) throw ValidationError("equivariance: f must have determinant 1");
    EquivarianceReport rep;
    rep.moved_curve = genus1_indicator(cd, curve.transformed(f), v, z).value;
    Eigen::VectorXcd fz = torus_rep_apply(cd.md(), equivariance_conjugate(f), z, true);
    rep.moved_vector = genus1_indicator(cd, curve, v, fz).value;
    rep.residual = std::abs(rep.moved_curve - rep.moved_vector);
    rep.holds = rep.residual < tol;
    return rep;
}

cplx indicator_reference_oracle(const TubeAlgebra& tube, const CenterData& cd, const TorusCurve& curve, int v, int x)
{
    const FusionRing& ring = tube.fsymbols().ring();
    if (v < 0 || v >= ring.rank()) throw ValidationError("oracle: object label out of range");
    if (x < 0 || x >= cd.rank_z) throw ValidationError("oracle: center label out of range");
    const TorusCurve prim = curve.primitive();
    const SL2ZWord word = sl2z_factor(curve_completion(prim));
    // Closed tube of the cabled curve: d parallel copies fuse to sum_W mult(W) 1_W.
    Eigen::VectorXd mult = tensor_power_multiplicities(ring, v, curve.d());
    TubeAlgebra::Element t = TubeAlgebra::Element::Zero(tube.dim());
    for (int w = 0; w < ring.rank(); ++w)
        if (mult(w) != 0.0) t += mult(w) * tube.boundary_unit(w);
    const TubeAlgebra::Element twist = tube.twist_element();
    const TubeAlgebra::Element twist_inv = tube.twist_element_inverse();
    auto quarter = [&](TubeAlgebra::Element e, long long k) {
        k = ((k % 4) + 4) % 4;
        for (long long i = 0; i < k; ++i) e = tube.rotate(e);
        return e;
    };
    for (auto it = word.word.rbegin(); it != word.word.rend(); ++it) {
        if (it->gen == 'S') {
            t = quarter(t, it->exp);
            continue;
        }
        const TubeAlgebra::Element& tw = it->exp > 0 ? twist : twist_inv;
        for (long long i = 0; i < std::llabs(it->exp); ++i) t = quarter(tube.multiply(tw, quarter(t, 3)), 1);
    }
    return tube_character(tube, cd, x, t);
}

} // namespace tqft
