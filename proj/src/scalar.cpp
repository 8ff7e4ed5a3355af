#include "tqft/scalar.hpp"

#include <atomic>
#include <cmath>
#include <sstream>

#include "tqft/error.hpp"

namespace tqft {

namespace {
std::atomic<double> g_tol{1e-9};
}

double default_tol() { return g_tol.load(std::memory_order_relaxed); }

void set_default_tol(double tol)
{
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw ValidationError("tolerance must be a nonnegative finite number");
    g_tol.store(tol, std::memory_order_relaxed);
}

ToleranceScope::ToleranceScope(double tol) : saved_(default_tol()) { set_default_tol(tol); }
ToleranceScope::~ToleranceScope() { g_tol.store(saved_, std::memory_order_relaxed); }

long long to_integer(double x, double tol, const std::string& what)
{
    double r = std::round(x);
    if (!std::isfinite(x) || std::abs(x - r) > tol) {
        std::ostringstream os;
        os.precision(17);
        os << what << ": value " << x << " is not an integer within " << tol;
        throw ValidationError(os.str());
    }
    return static_cast<long long>(r);
}

} // namespace tqft
