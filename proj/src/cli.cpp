#include "tqft/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tqft/center.hpp"
#include "tqft/criteria.hpp"
#include "tqft/error.hpp"
#include "tqft/fixtures.hpp"
#include "tqft/fsymbols.hpp"
#include "tqft/indicators.hpp"
#include "tqft/modular_data.hpp"
#include "tqft/nimrep.hpp"
#include "tqft/plumbing.hpp"
#include "tqft/rt.hpp"
#include "tqft/state_spaces.hpp"
#include "tqft/triangulation.hpp"
#include "tqft/tube_algebra.hpp"
#include "tqft/tv.hpp"

namespace tqft::cli {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

namespace {

// Bad invocation: unknown fixture, unreadable file, missing option.
struct UsageError : Error {
    using Error::Error;
};

// Pentagon residual allowed for bundled or user F-symbols before any pipeline runs.
constexpr double kPentagonGate = 1e-10;

struct Globals {
    double tol = 1e-6;
    std::uint64_t seed = 20240611;
    bool pretty = false;
    long long cap = 0;
    bool timings = false;
    int threads = 0;
};

json cjson(cplx z) { return json::array({z.real(), z.imag()}); }

class Report {
public:
    explicit Report(std::string command) { doc_["command"] = std::move(command); }

    // Reads the input once: the digest is taken over the exact bytes parsed.
    std::string input(const std::string& role, const std::string& kind, const std::string& token)
    {
        std::string path;
        try {
            path = resolve_input(kind, token);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        std::string text;
        try {
            text = read_file(path);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        doc_["inputs"][role] = {{"source", token}, {"fnv1a64", hex64(fnv1a64(text))}};
        return text;
    }
    void synthetic_input(const std::string& role, const json& value)
    {
        doc_["inputs"][role] = {{"generated", value}, {"fnv1a64", hex64(fnv1a64(value.dump()))}};
    }

    json& out() { return doc_["outputs"]; }
    void seed(std::uint64_t s) { doc_["seed"] = s; }
    void check(const std::string& name, bool ok)
    {
        doc_["checks"][name] = ok;
        ok_ = ok_ && ok;
    }
    void timing(const std::string& name, double ms) { timings_[name] = ms; }
    void error(const std::string& kind, const std::string& message)
    {
        doc_["error"] = {{"kind", kind}, {"message", message}};
        ok_ = false;
    }
    bool ok() const { return ok_; }
    std::string failure_summary() const
    {
        if (doc_.contains("error")) return doc_["error"]["message"].get<std::string>();
        std::string names;
        for (auto it = doc_["checks"].begin(); it != doc_["checks"].end(); ++it)
            if (!it->get<bool>()) names += (names.empty() ? "" : ", ") + it.key();
        return "failed checks: " + names;
    }

    json finish(bool with_timings)
    {
        if (with_timings && !timings_.empty()) doc_["timings_ms"] = timings_;
        doc_["status"] = ok_ ? "pass" : "fail";
        return doc_;
    }

private:
    json doc_ = json::object();
    json timings_ = json::object();
    bool ok_ = true;
};

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

void pretty_value(std::ostream& os, const json& v, int indent)
{
    const std::string pad(static_cast<size_t>(indent), ' ');
    if (v.is_object()) {
        size_t width = 0;
        for (auto it = v.begin(); it != v.end(); ++it) width = std::max(width, it.key().size());
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it->is_object()) {
                os << pad << it.key() << ":\n";
                pretty_value(os, *it, indent + 2);
            } else {
                os << pad << it.key() << std::string(width - it.key().size() + 2, ' ');
                os << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
            }
        }
        return;
    }
    os << pad << v.dump() << "\n";
}

void emit(std::ostream& out, const json& doc, bool pretty)
{
    if (pretty)
        pretty_value(out, doc, 0);
    else
        out << doc.dump(2) << "\n";
}

struct Category {
    FusionRing ring;
    std::optional<FSymbolSet> fs;
};

Category load_category(const std::string& text)
{
    json doc = json::parse(text, nullptr, false);
    if (!doc.is_discarded() && doc.is_object() && doc.contains("fsymbols")) {
        FSymbolSet fs = parse_category(text);
        return {fs.ring(), fs};
    }
    return {parse_fusion_ring(text), std::nullopt};
}

FSymbolSet require_fsymbols(Report& rep, const std::string& token)
{
    Category cat = load_category(rep.input("fsymbols", "categories", token));
    if (!cat.fs) throw ValidationError("category '" + token + "' carries no F-symbols");
    PentagonReport pr = verify_pentagon(*cat.fs, kPentagonGate);
    rep.out()["pentagon_residual"] = pr.max_residual;
    if (!pr.pass) {
        std::ostringstream os;
        os << "pentagon violated (residual " << pr.max_residual << " at a,b,c,d,e,f,g,k,l =";
        for (int x : pr.worst) os << ' ' << x;
        os << ")";
        throw ValidationError(os.str());
    }
    return *cat.fs;
}

json pentagon_json(const PentagonReport& pr)
{
    return {{"max_residual", pr.max_residual}, {"instances", pr.instances}, {"pass", pr.pass},
            {"worst", pr.worst}};
}

std::string lens_fixture(long long p)
{
    switch (p) {
    case 1: return "s3_1tet";
    case 2: return "rp3";
    case 3: return "l31";
    case 4: return "l41";
    case 5: return "l51";
    default: throw UsageError("no bundled triangulation of L(" + std::to_string(p) + ",1); pass --tri");
    }
}

CenterData center_of(const FSymbolSet& fs, const Globals& g, Report& rep)
{
    Stopwatch sw;
    TubeAlgebra tube(fs);
    CenterOptions opt;
    opt.seed = g.seed;
    CenterData cd = decompose_center(tube, fs, opt);
    rep.seed(g.seed);
    rep.timing("center", sw.ms());
    if (!cd.has_modular()) throw NumericalError("center: " + cd.modular_failure);
    return cd;
}

Eigen::VectorXcd parse_vector(const std::string& text, int expected, const std::string& what)
{
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError(what + ": invalid JSON");
    if (doc.is_object()) {
        if (!doc.contains("z")) throw ParseError(what + ": expected a list or an object with field z");
        doc = doc["z"];
    }
    if (!doc.is_array()) throw ParseError(what + ": expected a list");
    if (static_cast<int>(doc.size()) != expected)
        throw ValidationError(what + ": length " + std::to_string(doc.size()) + " does not match rank " +
                              std::to_string(expected));
    Eigen::VectorXcd v(expected);
    for (int i = 0; i < expected; ++i) {
        const json& e = doc[static_cast<size_t>(i)];
        if (e.is_number())
            v(i) = e.get<double>();
        else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
            v(i) = cplx(e[0].get<double>(), e[1].get<double>());
        else
            throw ParseError(what + ": entries are numbers or [re, im] pairs");
    }
    return v;
}

// Subcommands. Each fills the report and returns normally; checks decide the exit code.

struct ValidateArgs {
    std::string ring, fsymbols, modular, nimrep, tri, plumbing, surface, fixture;
};

void cmd_validate(const ValidateArgs& a, const Globals& g, Report& rep)
{
    if (a.ring.empty() && a.fsymbols.empty() && a.fixture.empty() && a.modular.empty() && a.tri.empty() &&
        a.plumbing.empty() && a.surface.empty())
        throw UsageError("validate: nothing to validate");
    std::optional<FusionRing> ring;
    auto category = [&](const std::string& role, const std::string& token) {
        Category cat = load_category(rep.input(role, "categories", token));
        ring = cat.ring;
        DimensionData dd = frobenius_perron_data(cat.ring);
        json& o = rep.out()["ring"];
        o = {{"rank", cat.ring.rank()}, {"labels", cat.ring.labels()}, {"dual", cat.ring.duals()},
             {"dims", dd.d}, {"mu", dd.mu}, {"multiplicity_free", cat.ring.multiplicity_free()},
             {"commutative", cat.ring.commutative()}};
        if (cat.fs) {
            PentagonReport pr = verify_pentagon(*cat.fs, kPentagonGate);
            UnitarityReport ur = check_unitarity(*cat.fs, g.tol);
            rep.out()["pentagon"] = pentagon_json(pr);
            rep.out()["unitarity"] = {{"max_residual", ur.max_residual}, {"pass", ur.pass}};
            rep.check("pentagon", pr.pass);
        }
    };
    if (!a.fixture.empty()) category("fixture", a.fixture);
    if (!a.fsymbols.empty()) category("fsymbols", a.fsymbols);
    if (!a.ring.empty()) {
        ring = parse_fusion_ring(rep.input("ring", "categories", a.ring));
        DimensionData dd = frobenius_perron_data(*ring);
        rep.out()["ring"] = {{"rank", ring->rank()}, {"labels", ring->labels()}, {"dual", ring->duals()},
                             {"dims", dd.d}, {"mu", dd.mu}, {"multiplicity_free", ring->multiplicity_free()},
                             {"commutative", ring->commutative()}};
    }
    if (!a.nimrep.empty()) {
        if (!ring) throw UsageError("validate: --nimrep needs --ring or --fsymbols");
        NimRep nim = parse_nimrep(rep.input("nimrep", "nimreps", a.nimrep), *ring);
        rep.out()["nimrep"] = {{"module_rank", nim.module_rank}, {"dims", nim.dM}};
    }
    if (!a.modular.empty()) {
        ModularData md = parse_modular_data(rep.input("modular", "modular", a.modular));
        rep.out()["modular"] = {{"rank", md.rank()},         {"labels", md.labels()},
                                {"dims", md.dims()},         {"D", md.D()},
                                {"p_plus", cjson(md.p_plus())}, {"anomaly", cjson(md.anomaly())}};
    }
    if (!a.tri.empty()) {
        Triangulation tri = parse_triangulation(rep.input("tri", "triangulations", a.tri));
        Homology h = first_homology(tri);
        rep.out()["triangulation"] = {{"tetrahedra", tri.n_tet()}, {"vertices", tri.n_vertices()},
                                      {"edges", tri.n_edges()},    {"faces", tri.n_faces()},
                                      {"homology", h.str()}};
    }
    if (!a.plumbing.empty()) {
        PlumbingTree tree = parse_plumbing(rep.input("plumbing", "plumbings", a.plumbing));
        rep.out()["plumbing"] = {{"vertices", tree.size()},
                                 {"b_plus", tree.b_plus()},
                                 {"b_minus", tree.b_minus()},
                                 {"b_zero", tree.b_zero()}};
    }
    if (!a.surface.empty()) {
        DecoratedSurface s = parse_surface(rep.input("surface", "surfaces", a.surface));
        rep.out()["surface"] = {{"polygons", s.polygons().size()},
                                {"euler_characteristic", s.euler_characteristic()},
                                {"genus", s.genus()},
                                {"boundary_components", s.boundary_components()},
                                {"marked_points", s.marked_point_count()}};
    }
}

struct CriteriaArgs {
    std::string ring, nimrep;
    int nmax = 0;
};

void cmd_criteria(const CriteriaArgs& a, const Globals& g, Report& rep)
{
    if (a.ring.empty()) throw UsageError("criteria: --ring is required");
    FusionRing ring = load_category(rep.input("ring", "categories", a.ring)).ring;
    CriteriaOptions opt;
    if (g.cap > 0) opt.size_cap = g.cap;
    int nmax = a.nmax > 0 ? a.nmax : std::min(max_criterion_order(ring.rank(), opt.size_cap), 64);
    DimensionData dd = frobenius_perron_data(ring);
    rep.out()["dims"] = dd.d;
    rep.out()["mu"] = dd.mu;
    auto dump = [&](const std::vector<CriterionReport>& reports, const std::string& key) {
        json arr = json::array();
        bool all = true;
        for (const auto& r : reports) {
            arr.push_back({{"n", r.n}, {"matrix_dim", r.matrix_dim}, {"min_eigenvalue", r.min_eigenvalue},
                           {"pass", r.pass}, {"method", r.method}});
            all = all && r.pass;
        }
        rep.out()[key] = arr;
        rep.check(key, all);
    };
    Stopwatch sw;
    dump(check_positivity(ring, nmax, opt), "positivity");
    if (!a.nimrep.empty()) {
        NimRep nim = parse_nimrep(rep.input("nimrep", "nimreps", a.nimrep), ring);
        dump(check_module_positivity(ring, nim, nmax, opt), "module_positivity");
        OmegaReport om = omega_rank_one(ring, nim, g.tol);
        rep.out()["omega"] = {{"holds", om.holds}, {"residual", om.residual}};
        rep.check("omega", om.holds);
    }
    rep.timing("criteria", sw.ms());
}

struct CenterArgs {
    std::string fsymbols, oracle, modular;
};

void cmd_center(const CenterArgs& a, const Globals& g, Report& rep)
{
    if (a.fsymbols.empty()) throw UsageError("center: --fsymbols is required");
    FSymbolSet fs = require_fsymbols(rep, a.fsymbols);
    CenterData cd = center_of(fs, g, rep);
    const ModularData& md = cd.md();
    json& o = rep.out();
    o["modular_data"] = to_json(md);
    o["dims"] = md.dims();
    o["block_sizes"] = cd.block_sizes;
    json ind = json::array();
    for (Eigen::Index i = 0; i < cd.induction.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < cd.induction.cols(); ++j) row.push_back(cd.induction(i, j));
        ind.push_back(row);
    }
    o["induction"] = ind;
    o["attempts"] = cd.attempts;
    o["s_fit_residual"] = cd.s_fit_residual;
    o["twist_conjugated"] = cd.twist_conjugated;
    o["anomaly"] = cjson(md.anomaly());
    CenterCheck cc = check_center(cd, fs, g.tol);
    o["center_check"] = {{"induction_residual", cc.induction_residual},
                         {"total_dimension_residual", cc.total_dimension_residual},
                         {"anomaly_residual", cc.anomaly_residual}};
    rep.check("center", cc.pass);
    rep.check("anomaly_free", std::abs(md.anomaly() - 1.0) < g.tol);
    if (!a.oracle.empty()) {
        if (a.oracle != "square") throw UsageError("center: unknown oracle '" + a.oracle + "'");
        if (a.modular.empty()) throw UsageError("center: --oracle square needs --modular");
        ModularData base = parse_modular_data(rep.input("modular", "modular", a.modular));
        ModularData sq = center_from_square(base);
        std::vector<int> perm = match_modular_data(md, sq, g.tol);
        json& r = o["oracle"];
        r["kind"] = "square";
        r["matched"] = !perm.empty();
        if (!perm.empty()) {
            double diff = 0.0;
            for (int i = 0; i < sq.rank(); ++i) {
                diff = std::max(diff, std::abs(md.T()(perm[i]) - sq.T()(i)));
                for (int j = 0; j < sq.rank(); ++j)
                    diff = std::max(diff, std::abs(md.S()(perm[i], perm[j]) - sq.S()(i, j)));
            }
            r["permutation"] = perm;
            r["max_entry_difference"] = diff;
        }
        rep.check("oracle_square", !perm.empty());
    }
}

struct TvArgs {
    std::string fsymbols, tri, oracle;
};

void cmd_tv(const TvArgs& a, const Globals& g, Report& rep)
{
    if (a.fsymbols.empty() || a.tri.empty()) throw UsageError("tv: --fsymbols and --tri are required");
    FSymbolSet fs = require_fsymbols(rep, a.fsymbols);
    Triangulation tri = parse_triangulation(rep.input("tri", "triangulations", a.tri));
    TVOptions opt;
    opt.threads = g.threads;
    if (g.cap > 0) opt.node_cap = g.cap;
    Stopwatch sw;
    TVResult r = tv_state_sum(fs, tri, opt);
    rep.timing("tv", sw.ms());
    json& o = rep.out();
    o["value"] = cjson(r.value);
    o["nodes"] = r.nodes;
    o["colorings"] = r.colorings;
    o["shards"] = r.shards;
    o["homology"] = first_homology(tri).str();
    if (!a.oracle.empty()) {
        std::string s = a.oracle;
        if (s.size() < 2 || (s[0] != 'z' && s[0] != 'Z'))
            throw UsageError("tv: oracle must look like z2, z3, ...");
        int n = 0;
        try {
            n = std::stoi(s.substr(1));
        } catch (const std::exception&) {
            throw UsageError("tv: oracle must look like z2, z3, ...");
        }
        if (n < 1) throw UsageError("tv: oracle order must be positive");
        Rational q = vec_g_oracle(n, tri);
        double diff = std::abs(r.value - cplx(q.value()));
        o["oracle"] = {{"kind", "vec_z" + std::to_string(n)},
                       {"value", q.value()},
                       {"fraction", std::to_string(q.num) + "/" + std::to_string(q.den)},
                       {"difference", diff}};
        rep.check("oracle", diff < g.tol);
    }
}

struct RtArgs {
    std::string modular, plumbing;
    long long lens = 0;
};

void cmd_rt(const RtArgs& a, const Globals&, Report& rep)
{
    if (a.modular.empty()) throw UsageError("rt: --modular is required");
    if (a.plumbing.empty() == (a.lens == 0)) throw UsageError("rt: give exactly one of --plumbing, --lens");
    ModularData md = parse_modular_data(rep.input("modular", "modular", a.modular));
    PlumbingTree tree = a.lens ? lens_plumbing(a.lens) : parse_plumbing(rep.input("plumbing", "plumbings", a.plumbing));
    if (a.lens) rep.synthetic_input("plumbing", to_json(tree));
    Stopwatch sw;
    cplx v = rt_invariant(md, tree);
    rep.timing("rt", sw.ms());
    rep.out()["value"] = cjson(v);
    rep.out()["b_plus"] = tree.b_plus();
    rep.out()["b_minus"] = tree.b_minus();
    rep.out()["anomaly"] = cjson(md.anomaly());
}

struct DimsArgs {
    std::string ring, surface, modular, method = "both";
    int genus = -1;
};

void cmd_dims(const DimsArgs& a, const Globals& g, Report& rep)
{
    const bool surf = !a.surface.empty();
    const bool closed = !a.modular.empty();
    if (surf == closed) throw UsageError("dims: give either --ring with --surface, or --modular with --genus");
    if (surf) {
        if (a.ring.empty()) throw UsageError("dims: --surface needs --ring");
        FusionRing ring = load_category(rep.input("ring", "categories", a.ring)).ring;
        DecoratedSurface s = parse_surface(rep.input("surface", "surfaces", a.surface));
        long long cap = g.cap > 0 ? g.cap : 100000000;
        rep.out()["dimension"] = dim_state_space(ring, s, cap);
        rep.out()["genus"] = s.genus();
        rep.out()["boundary_components"] = s.boundary_components();
        return;
    }
    if (a.genus < 0) throw UsageError("dims: --genus is required with --modular");
    if (a.method != "pants" && a.method != "verlinde" && a.method != "both")
        throw UsageError("dims: --method is pants, verlinde or both");
    ModularData md = parse_modular_data(rep.input("modular", "modular", a.modular));
    rep.out()["genus"] = a.genus;
    long long pants = -1, verl = -1;
    if (a.method != "verlinde") rep.out()["pants"] = pants = dim_closed_surface(md, a.genus);
    // verlinde_dimension already asserts integrality.
    if (a.method != "pants") rep.out()["verlinde"] = verl = std::llround(verlinde_dimension(md, a.genus));
    if (a.method == "both") rep.check("pants_equals_verlinde", pants == verl);
}

struct IndicatorArgs {
    std::string fsymbols, curve, object, center_vector;
    bool oracle = false;
};

TorusCurve parse_curve(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("indicators: --curve expects m,r");
    try {
        size_t p1 = 0, p2 = 0;
        std::string ms = s.substr(0, comma), rs = s.substr(comma + 1);
        long long m = std::stoll(ms, &p1), r = std::stoll(rs, &p2);
        if (p1 != ms.size() || p2 != rs.size()) throw std::invalid_argument("trailing");
        return TorusCurve(m, r);
    } catch (const std::logic_error&) {
        throw UsageError("indicators: --curve expects two integers m,r");
    }
}

void cmd_indicators(const IndicatorArgs& a, const Globals& g, Report& rep)
{
    if (a.fsymbols.empty() || a.curve.empty() || a.object.empty())
        throw UsageError("indicators: --fsymbols, --curve and --object are required");
    TorusCurve curve = parse_curve(a.curve);
    FSymbolSet fs = require_fsymbols(rep, a.fsymbols);
    int v = fs.ring().resolve(a.object);
    CenterData cd = center_of(fs, g, rep);
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(cd.rank_z);
    z(0) = 1.0;
    if (!a.center_vector.empty())
        z = parse_vector(rep.input("center_vector", "vectors", a.center_vector), cd.rank_z, "center vector");
    Eigen::VectorXcd ev = Eigen::VectorXcd::Zero(fs.rank());
    ev(v) = 1.0;
    IndicatorResult r = genus1_indicator(cd, curve, ev, z);
    json& o = rep.out();
    o["curve"] = {curve.m, curve.r};
    o["object"] = fs.ring().label(v);
    o["center_labels"] = cd.labels_z;
    o["value"] = cjson(r.value);
    o["word"] = r.word.str();
    o["normalization"] = r.normalization;
    if (a.oracle) {
        TubeAlgebra tube(fs);
        cplx ref = 0.0;
        for (int x = 0; x < cd.rank_z; ++x)
            if (z(x) != cplx(0.0)) ref += z(x) * indicator_reference_oracle(tube, cd, curve, v, x);
        double diff = std::abs(ref - r.value);
        o["oracle"] = {{"value", cjson(ref)}, {"difference", diff}};
        rep.check("oracle", diff < g.tol);
    }
}

struct CompareArgs {
    std::string fsymbols, plumbing, tri;
    long long lens = 0;
};

void cmd_compare(const CompareArgs& a, const Globals& g, Report& rep)
{
    if (a.fsymbols.empty()) throw UsageError("compare: --fsymbols is required");
    if ((a.lens != 0) == !a.plumbing.empty())
        throw UsageError("compare: give exactly one of --lens, --plumbing");
    if (a.lens == 0 && a.tri.empty()) throw UsageError("compare: --plumbing needs --tri");
    if (a.lens < 0) throw UsageError("compare: --lens must be positive");
    FSymbolSet fs = require_fsymbols(rep, a.fsymbols);
    PlumbingTree tree = a.lens ? lens_plumbing(a.lens) : parse_plumbing(rep.input("plumbing", "plumbings", a.plumbing));
    if (a.lens) rep.synthetic_input("plumbing", to_json(tree));
    std::string tri_token = !a.tri.empty() ? a.tri : lens_fixture(a.lens);
    Triangulation tri = parse_triangulation(rep.input("tri", "triangulations", tri_token));

    CenterData cd = center_of(fs, g, rep);
    Stopwatch sw;
    cplx rt = rt_invariant(cd.md(), tree);
    rep.timing("rt", sw.ms());
    Stopwatch sw2;
    TVOptions opt;
    opt.threads = g.threads;
    if (g.cap > 0) opt.node_cap = g.cap;
    cplx tv = tv_invariant(fs, tri, opt);
    rep.timing("tv", sw2.ms());
    double diff = std::abs(tv - rt);
    json& o = rep.out();
    o["center_rank"] = cd.rank_z;
    o["tv"] = cjson(tv);
    o["rt"] = cjson(rt);
    o["difference"] = diff;
    rep.check("tv_equals_rt", diff < g.tol);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Turaev-Viro / Reshetikhin-Turaev toolkit: state sums, centers, surgery, indicators", "tqft"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Globals g;
    app.add_option("--tol", g.tol, "Tolerance for numerical checks")->check(CLI::PositiveNumber);
    app.add_option("--seed", g.seed, "Seed for randomized steps");
    app.add_flag("--pretty", g.pretty, "Human-readable table instead of JSON");
    app.add_option("--cap", g.cap, "Size cap (matrix size, search nodes or basis size)")->check(CLI::NonNegativeNumber);
    app.add_flag("--timings", g.timings, "Include wall-clock timings (makes reports run-dependent)");
    app.add_option("--threads", g.threads, "Worker threads for state sums; 0 = auto")->check(CLI::NonNegativeNumber);

    std::function<void(Report&)> action;
    std::string command;

    ValidateArgs va;
    auto* sv = app.add_subcommand("validate", "Parse and check input files");
    sv->add_option("--ring", va.ring, "Fusion ring (category file)");
    sv->add_option("--fsymbols", va.fsymbols, "Category file with F-symbols");
    sv->add_option("--fixture", va.fixture, "Bundled category by name");
    sv->add_option("--modular", va.modular, "Modular data file");
    sv->add_option("--nimrep", va.nimrep, "NimRep file (needs a ring)");
    sv->add_option("--tri", va.tri, "Triangulation file");
    sv->add_option("--plumbing", va.plumbing, "Plumbing file");
    sv->add_option("--surface", va.surface, "Decorated surface file");
    sv->callback([&] { command = "validate"; action = [&](Report& r) { cmd_validate(va, g, r); }; });

    CriteriaArgs ca;
    auto* sc = app.add_subcommand("criteria", "Positivity criteria for a fusion ring");
    sc->add_option("--ring,--fixture", ca.ring, "Fusion ring (category file or bundled name)");
    sc->add_option("--nimrep", ca.nimrep, "NimRep file");
    sc->add_option("--nmax", ca.nmax, "Largest tensor power (default: cap-limited)")->check(CLI::PositiveNumber);
    sc->callback([&] { command = "criteria"; action = [&](Report& r) { cmd_criteria(ca, g, r); }; });

    CenterArgs cea;
    auto* sce = app.add_subcommand("center", "Drinfeld center through the tube algebra");
    sce->add_option("--fsymbols,--fixture", cea.fsymbols, "Category file with F-symbols");
    sce->add_option("--oracle", cea.oracle, "Cross-check: 'square' compares with the doubled modular data");
    sce->add_option("--modular", cea.modular, "Modular data of the category (for --oracle square)");
    sce->callback([&] { command = "center"; action = [&](Report& r) { cmd_center(cea, g, r); }; });

    TvArgs ta;
    auto* st = app.add_subcommand("tv", "Turaev-Viro state sum");
    st->add_option("--fsymbols,--fixture", ta.fsymbols, "Category file with F-symbols");
    st->add_option("--tri", ta.tri, "Triangulation file");
    st->add_option("--oracle", ta.oracle, "Compare with the Vec_{Z_N} homology count, e.g. z2");
    st->callback([&] { command = "tv"; action = [&](Report& r) { cmd_tv(ta, g, r); }; });

    RtArgs ra;
    auto* sr = app.add_subcommand("rt", "Surgery invariant of a plumbed manifold");
    sr->add_option("--modular", ra.modular, "Modular data file");
    sr->add_option("--plumbing", ra.plumbing, "Plumbing file");
    sr->add_option("--lens", ra.lens, "Use the one-vertex plumbing of L(p,1)")->check(CLI::PositiveNumber);
    sr->callback([&] { command = "rt"; action = [&](Report& r) { cmd_rt(ra, g, r); }; });

    DimsArgs da;
    auto* sd = app.add_subcommand("dims", "State-space dimensions");
    sd->add_option("--ring,--fixture", da.ring, "Fusion ring (for --surface)");
    sd->add_option("--surface", da.surface, "Decorated surface file");
    sd->add_option("--modular", da.modular, "Modular data file (closed surfaces)");
    sd->add_option("--genus", da.genus, "Genus of the closed surface")->check(CLI::NonNegativeNumber);
    sd->add_option("--method", da.method, "pants, verlinde or both");
    sd->callback([&] { command = "dims"; action = [&](Report& r) { cmd_dims(da, g, r); }; });

    IndicatorArgs ia;
    auto* si = app.add_subcommand("indicators", "Genus-one indicators");
    si->add_option("--fsymbols,--fixture", ia.fsymbols, "Category file with F-symbols");
    si->add_option("--curve", ia.curve, "Curve m,r on the torus");
    si->add_option("--object", ia.object, "Simple object (label or index)");
    si->add_option("--center-vector", ia.center_vector, "JSON list of center coefficients (default: vacuum)");
    si->add_flag("--oracle", ia.oracle, "Also evaluate through the tube algebra");
    si->callback([&] { command = "indicators"; action = [&](Report& r) { cmd_indicators(ia, g, r); }; });

    CompareArgs cpa;
    auto* sp = app.add_subcommand("compare", "TV of a triangulation against RT of the center on a plumbing");
    sp->add_option("--fsymbols,--fixture", cpa.fsymbols, "Category file with F-symbols");
    sp->add_option("--lens", cpa.lens, "Lens space L(p,1) from bundled data")->check(CLI::PositiveNumber);
    sp->add_option("--plumbing", cpa.plumbing, "Plumbing file");
    sp->add_option("--tri", cpa.tri, "Triangulation of the same manifold");
    sp->callback([&] { command = "compare"; action = [&](Report& r) { cmd_compare(cpa, g, r); }; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "tqft: " << e.what() << "\n";
        return kUsage;
    }

    Report rep(command);
    try {
        action(rep);
    } catch (const UsageError& e) {
        err << "tqft " << command << ": " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        rep.error("parse", e.what());
    } catch (const ValidationError& e) {
        rep.error("validation", e.what());
    } catch (const CapExceeded& e) {
        rep.error("cap_exceeded", e.what());
    } catch (const NumericalError& e) {
        rep.error("numerical", e.what());
    } catch (const Error& e) {
        rep.error("error", e.what());
    }
    emit(out, rep.finish(g.timings), g.pretty);
    if (!rep.ok()) {
        err << "tqft " << command << ": " << rep.failure_summary() << "\n";
        return kCheckFailed;
    }
    return kOk;
}

} // namespace tqft::cli
