#include "tqft/tube_algebra.hpp"

#include <cmath>
#include <sstream>

#include "tqft/error.hpp"

namespace tqft {

TubeAlgebra::TubeAlgebra(const FSymbolSet& fs) : TubeAlgebra(fs, default_tol()) {}

TubeAlgebra::TubeAlgebra(const FSymbolSet& fs, double tol) : fs_(fs)
{
    const FusionRing& n = fs_.ring();
    const int r = fs_.rank();
    for (int a = 0; a < r; ++a)
        for (int s = 0; s < r; ++s)
            for (int b = 0; b < r; ++b)
                for (int c = 0; c < r; ++c)
                    if (n.N(s, a, c) && n.N(b, s, c)) {
                        index_[{a, s, b, c}] = static_cast<int>(basis_.size());
                        basis_.push_back({a, s, b, c});
                    }
    const int dm = dim();
    auto d = [&](int i) { return fs_.d(i); };
    mult_.assign(static_cast<size_t>(dm) * dm, {});
    for (int iy = 0; iy < dm; ++iy) {
        const Tube& y = basis_[iy];
        for (int ix = 0; ix < dm; ++ix) {
            const Tube& x = basis_[ix];
            if (y.a != x.b) continue;
            const int a = x.a, s = x.s, b = x.b, c = x.c;
            const int t = y.s, dd = y.b, c1 = y.c;
            auto& out = mult_[static_cast<size_t>(iy) * dm + ix];
            for (int u = 0; u < r; ++u) {
                if (!n.N(t, s, u)) continue;
                for (int c2 = 0; c2 < r; ++c2) {
                    int target = index(a, u, dd, c2);
                    if (target < 0) continue;
                    cplx coef = fs_.F(t, s, a, c2, u, c) * std::conj(fs_.F(t, b, s, c2, c1, c)) *
                                fs_.F(dd, t, s, c2, c1, u) *
                                std::sqrt(d(s) * d(t) * d(b) * d(c2) / (d(c) * d(c1) * d(u)));
                    if (coef != cplx(0.0, 0.0)) out.emplace_back(target, coef);
                }
            }
        }
    }

    // Quarter-turn rotation on closed tubes.
    rot_.assign(dm, {});
    for (int i = 0; i < dm; ++i) {
        const Tube& x = basis_[i];
        if (x.a != x.b) continue;
        const int a = x.a, s = x.s, c = x.c, ad = n.dual(a);
        for (int c2 = 0; c2 < r; ++c2) {
            int target = index(s, ad, s, c2);
            if (target < 0) continue;
            cplx coef = std::conj(fs_.F(ad, c, ad, c2, s, s)) * std::sqrt(d(c) * d(c2)) / d(s);
            if (coef != cplx(0.0, 0.0)) rot_[i].emplace_back(target, coef);
        }
    }

    Element one = unit();
    for (int i = 0; i < dm; ++i) {
        Element e = basis_element(i);
        unit_residual_ = std::max({unit_residual_, (multiply(one, e) - e).cwiseAbs().maxCoeff(),
                                   (multiply(e, one) - e).cwiseAbs().maxCoeff()});
    }
    std::vector<Eigen::MatrixXcd> left(dm);
    for (int i = 0; i < dm; ++i) left[i] = left_matrix(basis_element(i));
    for (int k = 0; k < dm; ++k)
        for (int j = 0; j < dm; ++j) {
            // (e_k e_j) e_i versus e_k (e_j e_i) for all i at once.
            Eigen::MatrixXcd lhs = left_matrix(multiply(basis_element(k), basis_element(j)));
            Eigen::MatrixXcd rhs = left[k] * left[j];
            assoc_residual_ = std::max(assoc_residual_, (lhs - rhs).cwiseAbs().maxCoeff());
        }
    if (assoc_residual_ > tol || unit_residual_ > tol) {
        std::ostringstream os;
        os << "tube algebra: associativity residual " << assoc_residual_ << ", unit residual " << unit_residual_
           << " (F-symbol conventions are inconsistent)";
        throw ValidationError(os.str());
    }
}

int TubeAlgebra::index(int a, int s, int b, int c) const
{
    auto it = index_.find({a, s, b, c});
    return it == index_.end() ? -1 : it->second;
}

TubeAlgebra::Element TubeAlgebra::basis_element(int i) const
{
    Element e = Element::Zero(dim());
    e(i) = 1.0;
    return e;
}

TubeAlgebra::Element TubeAlgebra::multiply(const Element& y, const Element& x) const
{
    const int dm = dim();
    Element out = Element::Zero(dm);
    for (int iy = 0; iy < dm; ++iy) {
        if (y(iy) == cplx(0.0, 0.0)) continue;
        for (int ix = 0; ix < dm; ++ix) {
            if (x(ix) == cplx(0.0, 0.0)) continue;
            cplx w = y(iy) * x(ix);
            for (const Term& term : product(iy, ix)) out(term.first) += w * term.second;
        }
    }
    return out;
}

Eigen::MatrixXcd TubeAlgebra::left_matrix(const Element& y) const
{
    const int dm = dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dm, dm);
    for (int iy = 0; iy < dm; ++iy) {
        if (y(iy) == cplx(0.0, 0.0)) continue;
        for (int ix = 0; ix < dm; ++ix)
            for (const Term& term : product(iy, ix)) m(term.first, ix) += y(iy) * term.second;
    }
    return m;
}

Eigen::MatrixXcd TubeAlgebra::right_matrix(const Element& x) const
{
    const int dm = dim();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dm, dm);
    for (int ix = 0; ix < dm; ++ix) {
        if (x(ix) == cplx(0.0, 0.0)) continue;
        for (int iy = 0; iy < dm; ++iy)
            for (const Term& term : product(iy, ix)) m(term.first, iy) += x(ix) * term.second;
    }
    return m;
}

TubeAlgebra::Element TubeAlgebra::unit() const
{
    Element e = Element::Zero(dim());
    for (int a = 0; a < fs_.rank(); ++a) e(index(a, 0, a, a)) = 1.0;
    return e;
}

TubeAlgebra::Element TubeAlgebra::boundary_unit(int a) const { return basis_element(index(a, 0, a, a)); }

TubeAlgebra::Element TubeAlgebra::twist_element() const
{
    Element e = Element::Zero(dim());
    for (int a = 0; a < fs_.rank(); ++a)
        for (int c = 0; c < fs_.rank(); ++c) {
            int i = index(a, a, a, c);
            if (i >= 0) e(i) = std::sqrt(fs_.d(c)) / fs_.d(a);
        }
    return e;
}

TubeAlgebra::Element TubeAlgebra::twist_element_inverse() const
{
    // The twist is invertible and central; invert through its left action on the unit.
    Eigen::MatrixXcd l = left_matrix(twist_element());
    Element inv = l.fullPivLu().solve(unit());
    if ((l * inv - unit()).cwiseAbs().maxCoeff() > 1e-8) throw NumericalError("tube algebra: twist is not invertible");
    return inv;
}

TubeAlgebra::Element TubeAlgebra::rotate(const Element& x) const
{
    Element out = Element::Zero(dim());
    for (int i = 0; i < dim(); ++i) {
        if (x(i) == cplx(0.0, 0.0)) continue;
        for (const Term& term : rot_[i]) out(term.first) += x(i) * term.second;
    }
    return out;
}

bool TubeAlgebra::commutative(double tol) const
{
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            if ((multiply(basis_element(i), basis_element(j)) - multiply(basis_element(j), basis_element(i)))
                    .cwiseAbs()
                    .maxCoeff() > tol)
                return false;
    return true;
}

TubeAlgebra build_tube_algebra(const FSymbolSet& fs) { return TubeAlgebra(fs); }

} // namespace tqft
