#include "tqft/state_spaces.hpp"

#include <cmath>
#include <set>

#include "json_util.hpp"
#include "tqft/error.hpp"
#include "tqft/rt.hpp"

namespace tqft {

using detail::json;

DecoratedSurface::DecoratedSurface(std::vector<std::vector<Slot>> polygons, std::vector<GreenPairing> pairings)
    : polygons_(std::move(polygons)), pairings_(std::move(pairings))
{
    if (polygons_.empty()) throw ValidationError("surface: at least one polygon is required");
    // Where each green id lives.
    std::map<std::string, std::pair<int, int>> where;
    std::map<std::string, int> count;
    for (int p = 0; p < static_cast<int>(polygons_.size()); ++p) {
        const auto& poly = polygons_[p];
        if (poly.empty()) throw ValidationError("surface: empty polygon");
        const bool disk = poly.size() == 1 && !poly[0].green;
        if (!disk) {
            if (poly.size() % 2 != 0) throw ValidationError("surface: polygon " + std::to_string(p) + " does not alternate black arcs and green edges");
            for (size_t i = 0; i < poly.size(); ++i)
                if (poly[i].green == poly[(i + 1) % poly.size()].green)
                    throw ValidationError("surface: polygon " + std::to_string(p) +
                                          " does not alternate black arcs and green edges");
        }
        for (int i = 0; i < static_cast<int>(poly.size()); ++i) {
            if (!poly[i].green) continue;
            if (++count[poly[i].id] > 1) throw ValidationError("surface: green edge '" + poly[i].id + "' appears twice");
            where[poly[i].id] = {p, i};
        }
    }
    std::map<std::string, std::string> partner;
    for (const auto& pr : pairings_) {
        if (pr.first == pr.second) throw ValidationError("surface: green edge '" + pr.first + "' paired with itself");
        for (const auto* id : {&pr.first, &pr.second}) {
            if (!where.count(*id)) throw ValidationError("surface: pairing names unknown green edge '" + *id + "'");
            if (partner.count(*id)) throw ValidationError("surface: green edge '" + *id + "' is paired more than once");
        }
        partner[pr.first] = pr.second;
        partner[pr.second] = pr.first;
    }
    for (const auto& [id, pos] : where)
        if (!partner.count(id)) throw ValidationError("surface: unmatched green edge '" + id + "'");

    // Boundary circles: after black arc B comes green edge G; the boundary
    // continues with the black arc that follows partner(G).
    std::vector<std::vector<int>> arc_id(polygons_.size());
    std::vector<std::pair<int, int>> arcs;
    for (int p = 0; p < static_cast<int>(polygons_.size()); ++p) {
        arc_id[p].assign(polygons_[p].size(), -1);
        for (int i = 0; i < static_cast<int>(polygons_[p].size()); ++i)
            if (!polygons_[p][i].green) {
                arc_id[p][i] = static_cast<int>(arcs.size());
                arcs.emplace_back(p, i);
            }
    }
    std::vector<int> next(arcs.size());
    for (size_t k = 0; k < arcs.size(); ++k) {
        auto [p, i] = arcs[k];
        const auto& poly = polygons_[p];
        if (poly.size() == 1) {
            next[k] = static_cast<int>(k);
            continue;
        }
        const Slot& g = poly[(i + 1) % poly.size()];
        auto [q, j] = where.at(partner.at(g.id));
        next[k] = arc_id[q][(j + 1) % polygons_[q].size()];
    }
    std::vector<bool> seen(arcs.size(), false);
    for (size_t k = 0; k < arcs.size(); ++k) {
        if (seen[k]) continue;
        ++boundary_components_;
        for (size_t c = k; !seen[c]; c = next[c]) seen[c] = true;
    }
    // Connected components of the polygon gluing graph.
    std::vector<int> comp(polygons_.size(), -1);
    for (size_t s = 0; s < polygons_.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{static_cast<int>(s)};
        comp[s] = components_;
        while (!stack.empty()) {
            int p = stack.back();
            stack.pop_back();
            for (const Slot& sl : polygons_[p]) {
                if (!sl.green) continue;
                int q = where.at(partner.at(sl.id)).first;
                if (comp[q] < 0) {
                    comp[q] = components_;
                    stack.push_back(q);
                }
            }
        }
        ++components_;
    }
    int twice_genus = 2 * components_ - euler_characteristic() - boundary_components_;
    if (twice_genus < 0 || twice_genus % 2 != 0) throw ValidationError("surface: inconsistent Euler data");
    genus_ = twice_genus / 2;
}

int DecoratedSurface::marked_point_count() const
{
    int n = 0;
    for (const auto& poly : polygons_)
        for (const Slot& s : poly) n += static_cast<int>(s.points.size());
    return n;
}

DecoratedSurface DecoratedSurface::with_marked_labels(const std::vector<int>& labels) const
{
    if (static_cast<int>(labels.size()) != marked_point_count())
        throw ValidationError("surface: wrong number of marked-point labels");
    auto polys = polygons_;
    size_t k = 0;
    for (auto& poly : polys)
        for (Slot& s : poly)
            for (MarkedPoint& m : s.points) {
                m.index = labels[k++];
                m.name.clear();
            }
    return DecoratedSurface(std::move(polys), pairings_);
}

DecoratedSurface surface_from_json(const json& doc)
{
    const char* what = "surface file";
    detail::check_fields(doc, {"polygons"}, {"pairings", "name"}, what);
    std::vector<std::vector<Slot>> polys;
    for (const auto& pj : doc["polygons"]) {
        if (!pj.is_array()) throw ParseError("surface file: polygons are slot lists");
        std::vector<Slot> poly;
        for (const auto& sj : pj) {
            if (!sj.is_object() || sj.size() != 1) throw ParseError("surface file: a slot is {\"arc\": [...]} or {\"green\": id}");
            Slot s;
            if (sj.contains("green")) {
                s.green = true;
                s.id = detail::get_as<std::string>(sj["green"], what);
            } else if (sj.contains("arc")) {
                for (const auto& mp : sj["arc"]) {
                    if (!mp.is_array() || mp.size() != 2) throw ParseError("surface file: marked points are [label, sign]");
                    MarkedPoint m;
                    if (mp[0].is_number_integer())
                        m.index = mp[0].get<int>();
                    else
                        m.name = detail::get_as<std::string>(mp[0], what);
                    auto sign = detail::get_as<std::string>(mp[1], what);
                    if (sign != "+" && sign != "-") throw ParseError("surface file: marked-point sign must be + or -");
                    m.positive = sign == "+";
                    s.points.push_back(m);
                }
            } else {
                throw ParseError("surface file: a slot is {\"arc\": [...]} or {\"green\": id}");
            }
            poly.push_back(std::move(s));
        }
        polys.push_back(std::move(poly));
    }
    std::vector<GreenPairing> pairs;
    if (doc.contains("pairings")) {
        for (const auto& pj : doc["pairings"]) {
            auto items = detail::get_as<std::vector<std::string>>(pj, what);
            if (items.size() < 2 || items.size() > 3) throw ParseError("surface file: pairings are [id, id] or [id, id, orientation]");
            if (items.size() == 3) {
                if (items[2] == "preserving")
                    throw ValidationError("surface: inconsistent orientation (orientation-preserving pairing of '" +
                                          items[0] + "' and '" + items[1] + "')");
                if (items[2] != "reversing") throw ParseError("surface file: orientation must be reversing or preserving");
            }
            pairs.push_back({items[0], items[1]});
        }
    }
    return DecoratedSurface(std::move(polys), std::move(pairs));
}

DecoratedSurface parse_surface(const std::string& text)
{
    return surface_from_json(detail::parse_document(text, "surface file"));
}

json to_json(const DecoratedSurface& surf)
{
    json polys = json::array();
    for (const auto& poly : surf.polygons()) {
        json pj = json::array();
        for (const Slot& s : poly) {
            if (s.green) {
                pj.push_back({{"green", s.id}});
            } else {
                json arc = json::array();
                for (const MarkedPoint& m : s.points) {
                    json lab = m.index >= 0 ? json(m.index) : json(m.name);
                    arc.push_back({lab, m.positive ? "+" : "-"});
                }
                pj.push_back({{"arc", arc}});
            }
        }
        polys.push_back(pj);
    }
    json pairs = json::array();
    for (const auto& p : surf.pairings()) pairs.push_back({p.first, p.second});
    json doc = json::object();
    doc["polygons"] = polys;
    doc["pairings"] = pairs;
    return doc;
}

namespace {

// One factor of a polygon word: a fixed label or the color of a pairing.
struct Factor {
    int label = -1;
    int pairing = -1;
    bool dual = false;
};

std::vector<std::vector<Factor>> polygon_words(const FusionRing& ring, const DecoratedSurface& surf)
{
    std::map<std::string, std::pair<int, bool>> green;
    for (int k = 0; k < static_cast<int>(surf.pairings().size()); ++k) {
        green[surf.pairings()[k].first] = {k, false};
        green[surf.pairings()[k].second] = {k, true};
    }
    std::vector<std::vector<Factor>> words;
    for (const auto& poly : surf.polygons()) {
        std::vector<Factor> w;
        for (const Slot& s : poly) {
            if (s.green) {
                auto [k, d] = green.at(s.id);
                w.push_back({-1, k, d});
                continue;
            }
            for (const MarkedPoint& m : s.points) {
                int idx = m.index >= 0 ? m.index : ring.index_of(m.name);
                if (idx < 0 || idx >= ring.rank()) throw ValidationError("surface: marked-point label not in the ring");
                w.push_back({m.positive ? idx : ring.dual(idx), -1, false});
            }
        }
        words.push_back(std::move(w));
    }
    return words;
}

} // namespace

std::map<std::vector<int>, long long> state_space_basis_counts(const FusionRing& ring, const DecoratedSurface& surf,
                                                               long long cap)
{
    const auto words = polygon_words(ring, surf);
    const int np = static_cast<int>(surf.pairings().size());
    const int r = ring.rank();
    long long total = 1;
    for (int k = 0; k < np; ++k) {
        if (total > cap / r) throw CapExceeded("state space: too many green colorings");
        total *= r;
    }
    std::map<std::vector<int>, long long> out;
    std::vector<int> color(np, 0);
    std::vector<int> factors;
    for (long long it = 0; it < total; ++it) {
        long long prod = 1;
        for (const auto& w : words) {
            factors.clear();
            for (const Factor& f : w) factors.push_back(f.pairing < 0 ? f.label : (f.dual ? ring.dual(color[f.pairing]) : color[f.pairing]));
            prod *= hom_from_unit(ring, factors);
            if (prod == 0) break;
        }
        if (prod) out[color] = prod;
        for (int k = np - 1; k >= 0; --k) {
            if (++color[k] < r) break;
            color[k] = 0;
        }
    }
    return out;
}

long long dim_state_space(const FusionRing& ring, const DecoratedSurface& surf, long long cap)
{
    long long sum = 0;
    for (const auto& [c, n] : state_space_basis_counts(ring, surf, cap)) sum += n;
    return sum;
}

long long dim_closed_surface(const ModularData& md, int genus)
{
    if (genus < 0) throw ValidationError("genus must be nonnegative");
    long long result = 0;
    if (genus == 0) {
        result = 1;
    } else if (genus == 1) {
        result = md.rank();
    } else {
        // Trivalent graph with 2g-2 vertices and 3g-3 edges: loops at both
        // ends of a chain, interior vertices paired by double edges.
        const int nv = 2 * genus - 2;
        std::vector<std::pair<int, int>> edges;
        edges.emplace_back(0, 0);
        for (int v = 1; v + 1 <= nv - 2; v += 2) {
            edges.emplace_back(v, v + 1);
            edges.emplace_back(v, v + 1);
        }
        for (int v = 0; v + 1 < nv; v += 2) edges.emplace_back(v, v + 1);
        edges.emplace_back(nv - 1, nv - 1);
        if (static_cast<int>(edges.size()) != 3 * genus - 3) throw Error("pants graph construction failed");
        // Incident labels per vertex: the tail sees Y, the head sees Y*.
        std::vector<std::vector<std::pair<int, bool>>> incident(nv);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            incident[edges[e].first].emplace_back(e, false);
            incident[edges[e].second].emplace_back(e, true);
        }
        const int r = md.rank();
        const int ne = static_cast<int>(edges.size());
        long long total = 1;
        for (int e = 0; e < ne; ++e) {
            if (total > 100000000LL / r) throw CapExceeded("pants count: too many colorings");
            total *= r;
        }
        // Hom(1, x (x) y (x) z) = N_{xy}^{z*} in the Verlinde ring.
        std::vector<int> color(ne, 0);
        for (long long it = 0; it < total; ++it) {
            long long prod = 1;
            for (int v = 0; v < nv && prod; ++v) {
                int lab[3];
                for (int k = 0; k < 3; ++k) {
                    auto [e, head] = incident[v][k];
                    lab[k] = head ? md.dual(color[e]) : color[e];
                }
                prod *= md.N(lab[0], lab[1], md.dual(lab[2]));
            }
            result += prod;
            for (int e = ne - 1; e >= 0; --e) {
                if (++color[e] < r) break;
                color[e] = 0;
            }
        }
    }
    double v = verlinde_dimension(md, genus);
    if (std::llround(v) != result)
        throw ValidationError("pants count " + std::to_string(result) + " disagrees with the Verlinde formula (" +
                              std::to_string(v) + ")");
    return result;
}

} // namespace tqft
