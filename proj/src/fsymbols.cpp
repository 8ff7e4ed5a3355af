#include "tqft/fsymbols.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "json_util.hpp"
#include "tqft/error.hpp"

namespace tqft {

using detail::json;

namespace {

std::string tuple_text(const FusionRing& ring, std::initializer_list<int> idx)
{
    std::string s = "(";
    bool first = true;
    for (int i : idx) {
        if (!first) s += ", ";
        s += ring.label(i);
        first = false;
    }
    return s + ")";
}

} // namespace

FSymbolSet::FSymbolSet(FusionRing ring, std::vector<cplx> values, Gauge gauge)
    : ring_(std::move(ring)), values_(std::move(values)), gauge_(gauge)
{
    if (!ring_.multiplicity_free())
        throw ValidationError("F-symbols require a multiplicity-free fusion ring");
    size_t r = static_cast<size_t>(ring_.rank());
    if (values_.size() != r * r * r * r * r * r) throw ValidationError("F-symbol table has wrong size");
    dims_ = frobenius_perron_data(ring_);
}

bool FSymbolSet::admissible(int a, int b, int c, int dd, int e, int f) const
{
    const FusionRing& n = ring_;
    return n.N(a, b, e) && n.N(e, c, dd) && n.N(b, c, f) && n.N(a, f, dd);
}

std::vector<std::array<int, 6>> FSymbolSet::admissible_tuples() const
{
    std::vector<std::array<int, 6>> out;
    const int r = rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int dd = 0; dd < r; ++dd)
                    for (int e = 0; e < r; ++e)
                        for (int f = 0; f < r; ++f)
                            if (admissible(a, b, c, dd, e, f)) out.push_back({a, b, c, dd, e, f});
    return out;
}

FSymbolSet fsymbols_from_json(const json& doc, const FusionRing& ring)
{
    const char* what = "F-symbol document";
    if (!ring.multiplicity_free()) throw ValidationError("F-symbols require a multiplicity-free fusion ring");
    if (!doc.contains("fsymbols")) throw ParseError("F-symbol document: missing field 'fsymbols'");
    FSymbolSet::Gauge gauge = FSymbolSet::Gauge::RawF;
    if (doc.contains("gauge")) {
        auto g = detail::get_as<std::string>(doc["gauge"], what);
        if (g == "6j")
            gauge = FSymbolSet::Gauge::Symmetrized6j;
        else if (g != "F")
            throw ParseError("F-symbol document: gauge must be \"F\" or \"6j\"");
    }
    const int r = ring.rank();
    size_t total = 1;
    for (int i = 0; i < 6; ++i) total *= static_cast<size_t>(r);
    std::vector<cplx> values(total, cplx(0.0, 0.0));
    std::vector<bool> seen(total, false);
    FSymbolSet probe(ring, values, gauge);
    for (const auto& entry : doc["fsymbols"]) {
        if (!entry.is_array() || entry.size() != 8) throw ParseError("F-symbol entries must be [a,b,c,d,e,f,re,im]");
        int t[6];
        for (int i = 0; i < 6; ++i) {
            t[i] = detail::get_as<int>(entry[i], what);
            if (t[i] < 0 || t[i] >= r) throw ParseError("F-symbol document: label index out of range");
        }
        double re = detail::get_as<double>(entry[6], what);
        double im = detail::get_as<double>(entry[7], what);
        if (!probe.admissible(t[0], t[1], t[2], t[3], t[4], t[5]))
            throw ValidationError("extra F-symbol tuple " +
                                  tuple_text(ring, {t[0], t[1], t[2], t[3], t[4], t[5]}) + " is not admissible");
        size_t idx = 0;
        for (int i = 0; i < 6; ++i) idx = idx * r + t[i];
        if (seen[idx])
            throw ValidationError("duplicate F-symbol tuple " + tuple_text(ring, {t[0], t[1], t[2], t[3], t[4], t[5]}));
        seen[idx] = true;
        values[idx] = cplx(re, im);
    }
    FSymbolSet fs(ring, std::move(values), gauge);
    if (gauge == FSymbolSet::Gauge::Symmetrized6j) {
        // Stored as F / sqrt(d_e d_f); convert back to raw F.
        for (const auto& t : fs.admissible_tuples()) {
            cplx v = fs.F(t[0], t[1], t[2], t[3], t[4], t[5]);
            fs.set(t[0], t[1], t[2], t[3], t[4], t[5], v * std::sqrt(fs.d(t[4]) * fs.d(t[5])));
        }
    }
    for (const auto& t : fs.admissible_tuples()) {
        size_t idx = 0;
        for (int i = 0; i < 6; ++i) idx = idx * r + t[i];
        if (!seen[idx])
            throw ValidationError("missing F-symbol tuple " + tuple_text(ring, {t[0], t[1], t[2], t[3], t[4], t[5]}));
        if ((t[0] == 0 || t[1] == 0 || t[2] == 0) &&
            std::abs(fs.F(t[0], t[1], t[2], t[3], t[4], t[5]) - cplx(1.0, 0.0)) > default_tol())
            throw ValidationError("unit normalization violation at " +
                                  tuple_text(ring, {t[0], t[1], t[2], t[3], t[4], t[5]}));
    }
    return fs;
}

FSymbolSet parse_fsymbols(const std::string& text, const FusionRing& ring)
{
    json doc = detail::parse_document(text, "F-symbol document");
    detail::check_fields(doc, {"fsymbols"}, {"rank", "labels", "dual", "fusion", "gauge", "name"}, "F-symbol document");
    return fsymbols_from_json(doc, ring);
}

FSymbolSet parse_category(const std::string& text)
{
    json doc = detail::parse_document(text, "category file");
    FusionRing ring = fusion_ring_from_json(doc);
    return fsymbols_from_json(doc, ring);
}

json to_json(const FSymbolSet& fs)
{
    json doc = to_json(fs.ring());
    json rows = json::array();
    for (const auto& t : fs.admissible_tuples()) {
        cplx v = fs.F(t[0], t[1], t[2], t[3], t[4], t[5]);
        rows.push_back({t[0], t[1], t[2], t[3], t[4], t[5], v.real(), v.imag()});
    }
    doc["fsymbols"] = rows;
    return doc;
}

PentagonReport verify_pentagon(const FSymbolSet& fs, double tol)
{
    const FusionRing& n = fs.ring();
    const int r = fs.rank();
    PentagonReport rep;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d)
                    for (int f = 0; f < r; ++f) {
                        if (!n.N(a, b, f)) continue;
                        for (int g = 0; g < r; ++g) {
                            if (!n.N(f, c, g)) continue;
                            for (int e = 0; e < r; ++e) {
                                if (!n.N(g, d, e)) continue;
                                for (int l = 0; l < r; ++l) {
                                    if (!n.N(c, d, l)) continue;
                                    for (int k = 0; k < r; ++k) {
                                        if (!n.N(b, l, k) || !n.N(a, k, e)) continue;
                                        cplx lhs = fs.F(f, c, d, e, g, l) * fs.F(a, b, l, e, f, k);
                                        cplx rhs = 0.0;
                                        for (int h = 0; h < r; ++h)
                                            rhs += fs.F(a, b, c, g, f, h) * fs.F(a, h, d, e, g, k) *
                                                   fs.F(b, c, d, k, h, l);
                                        double res = std::abs(lhs - rhs);
                                        ++rep.instances;
                                        if (res > rep.max_residual || rep.instances == 1) {
                                            rep.max_residual = res;
                                            rep.worst = {a, b, c, d, e, f, g, k, l};
                                        }
                                    }
                                }
                            }
                        }
                    }
    rep.pass = rep.max_residual < tol;
    return rep;
}

PentagonReport verify_pentagon(const FSymbolSet& fs) { return verify_pentagon(fs, default_tol()); }

UnitarityReport check_unitarity(const FSymbolSet& fs, double tol)
{
    const FusionRing& n = fs.ring();
    const int r = fs.rank();
    UnitarityReport rep;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    std::vector<int> es, fs_;
                    for (int e = 0; e < r; ++e)
                        if (n.N(a, b, e) && n.N(e, c, d)) es.push_back(e);
                    for (int f = 0; f < r; ++f)
                        if (n.N(b, c, f) && n.N(a, f, d)) fs_.push_back(f);
                    if (es.empty() && fs_.empty()) continue;
                    if (es.size() != fs_.size()) {
                        rep.pass = false;
                        rep.max_residual = INFINITY;
                        continue;
                    }
                    const Eigen::Index m = static_cast<Eigen::Index>(es.size());
                    Eigen::MatrixXcd mat(m, m);
                    for (Eigen::Index i = 0; i < m; ++i)
                        for (Eigen::Index j = 0; j < m; ++j) mat(i, j) = fs.F(a, b, c, d, es[i], fs_[j]);
                    double res = (mat * mat.adjoint() - Eigen::MatrixXcd::Identity(m, m)).cwiseAbs().maxCoeff();
                    rep.max_residual = std::max(rep.max_residual, res);
                }
    rep.pass = rep.pass && rep.max_residual < tol;
    return rep;
}

} // namespace tqft
