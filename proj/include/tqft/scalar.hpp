#pragma once

#include <complex>
#include <string>

namespace tqft {

using cplx = std::complex<double>;

double default_tol();
void set_default_tol(double tol);

// RAII override of the global tolerance.
class ToleranceScope {
public:
    explicit ToleranceScope(double tol);
    ~ToleranceScope();
    ToleranceScope(const ToleranceScope&) = delete;
    ToleranceScope& operator=(const ToleranceScope&) = delete;

private:
    double saved_;
};

struct Scalar {
    cplx value{0.0, 0.0};
    double tol = default_tol();

    Scalar() = default;
    Scalar(cplx v) : value(v) {}
    Scalar(cplx v, double t) : value(v), tol(t) {}

    bool approx(cplx other) const { return std::abs(value - other) <= tol; }
    bool is_zero() const { return std::abs(value) <= tol; }
    bool is_nonnegative() const { return std::abs(value.imag()) <= tol && value.real() >= -tol; }
    bool is_real() const { return std::abs(value.imag()) <= tol; }
};

inline bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }
inline bool near(cplx a, cplx b) { return near(a, b, default_tol()); }

// Nearest integer, or throws ValidationError when |x - round(x)| > tol.
long long to_integer(double x, double tol, const std::string& what);

} // namespace tqft
