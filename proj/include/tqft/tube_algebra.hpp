#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tqft/fsymbols.hpp"

namespace tqft {

// Basis tube E(a, s, b; c): inner boundary a, outer boundary b, strand s
// wrapping the annulus, fused through the channel c in s(x)a and b(x)s.
struct Tube {
    int a, s, b, c;
    bool operator<(const Tube& o) const
    {
        return std::tie(a, s, b, c) < std::tie(o.a, o.s, o.b, o.c);
    }
    bool operator==(const Tube& o) const { return a == o.a && s == o.s && b == o.b && c == o.c; }
};

class TubeAlgebra {
public:
    using Element = Eigen::VectorXcd;
    using Term = std::pair<int, cplx>;

    // Throws ValidationError when associativity or the unit fails beyond tol.
    TubeAlgebra(const FSymbolSet& fs, double tol);
    explicit TubeAlgebra(const FSymbolSet& fs);

    const FSymbolSet& fsymbols() const { return fs_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Tube>& basis() const { return basis_; }
    const Tube& tube(int i) const { return basis_[i]; }
    // -1 if not a basis tube.
    int index(int a, int s, int b, int c) const;

    // Structure constants of basis(y) * basis(x); y is applied after x.
    const std::vector<Term>& product(int y, int x) const { return mult_[static_cast<size_t>(y) * dim() + x]; }
    Element multiply(const Element& y, const Element& x) const;
    Eigen::MatrixXcd left_matrix(const Element& y) const;
    Eigen::MatrixXcd right_matrix(const Element& x) const;

    Element basis_element(int i) const;
    Element unit() const;
    // Identity tube on a: E(a, 1, a; a).
    Element boundary_unit(int a) const;
    // Central element whose value on each simple block is its twist.
    Element twist_element() const;
    Element twist_element_inverse() const;
    // Rotation of the annulus by a quarter turn on closed tubes (a == b),
    // zero on the rest.
    Element rotate(const Element& x) const;

    bool is_closed(int i) const { return basis_[i].a == basis_[i].b; }
    double associativity_residual() const { return assoc_residual_; }
    double unit_residual() const { return unit_residual_; }
    bool commutative(double tol) const;

private:
    FSymbolSet fs_;
    std::vector<Tube> basis_;
    std::map<Tube, int> index_;
    std::vector<std::vector<Term>> mult_;
    std::vector<std::vector<Term>> rot_;
    double assoc_residual_ = 0.0;
    double unit_residual_ = 0.0;
};

TubeAlgebra build_tube_algebra(const FSymbolSet& fs);

} // namespace tqft
