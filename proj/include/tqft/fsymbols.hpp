#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqft/fusion_ring.hpp"
#include "tqft/scalar.hpp"

namespace tqft {

// Multiplicity-free F-symbols F^{abc}_d[e][f] with e in a*b, f in b*c
// (splitting-tree convention). Inadmissible tuples read as zero.
class FSymbolSet {
public:
    enum class Gauge { RawF, Symmetrized6j };

    FSymbolSet() = default;
    FSymbolSet(FusionRing ring, std::vector<cplx> values, Gauge gauge);

    const FusionRing& ring() const { return ring_; }
    const DimensionData& dims() const { return dims_; }
    int rank() const { return ring_.rank(); }
    double d(int i) const { return dims_.d[i]; }
    double mu() const { return dims_.mu; }
    Gauge gauge() const { return gauge_; }

    bool admissible(int a, int b, int c, int dd, int e, int f) const;
    cplx F(int a, int b, int c, int dd, int e, int f) const { return values_[index(a, b, c, dd, e, f)]; }
    void set(int a, int b, int c, int dd, int e, int f, cplx v) { values_[index(a, b, c, dd, e, f)] = v; }

    // Enumerates admissible tuples in lexicographic order.
    std::vector<std::array<int, 6>> admissible_tuples() const;

private:
    size_t index(int a, int b, int c, int dd, int e, int f) const
    {
        size_t r = static_cast<size_t>(ring_.rank());
        return ((((static_cast<size_t>(a) * r + b) * r + c) * r + dd) * r + e) * r + f;
    }

    FusionRing ring_;
    DimensionData dims_;
    std::vector<cplx> values_;
    Gauge gauge_ = Gauge::RawF;
};

FSymbolSet parse_fsymbols(const std::string& text, const FusionRing& ring);
FSymbolSet fsymbols_from_json(const nlohmann::json& doc, const FusionRing& ring);
// Parses ring and F-symbols from one category document.
FSymbolSet parse_category(const std::string& text);
nlohmann::json to_json(const FSymbolSet& fs);

struct PentagonReport {
    double max_residual = 0.0;
    bool pass = true;
    long long instances = 0;
    // a, b, c, d, e, f, g, k, l of the worst instance.
    std::array<int, 9> worst{};
};

PentagonReport verify_pentagon(const FSymbolSet& fs, double tol);
PentagonReport verify_pentagon(const FSymbolSet& fs);

struct UnitarityReport {
    double max_residual = 0.0;
    bool pass = true;
};

// Each F^{abc}_d as a matrix in (e, f) is unitary.
UnitarityReport check_unitarity(const FSymbolSet& fs, double tol);

} // namespace tqft
