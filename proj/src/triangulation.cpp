#include "tqft/triangulation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json_util.hpp"
#include "tqft/error.hpp"
#include "tqft/linalg.hpp"

namespace tqft {

using detail::json;

int local_edge_index(int u, int v)
{
    if (u > v) std::swap(u, v);
    for (int k = 0; k < 6; ++k)
        if (kTetEdges[k][0] == u && kTetEdges[k][1] == v) return k;
    throw Error("invalid local edge");
}

namespace {

int perm_sign(const std::array<int, 4>& p)
{
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

// Union-find carrying the parity of each node relative to its parent.
struct ParityUnionFind {
    std::vector<int> parent;
    std::vector<int> parity;

    explicit ParityUnionFind(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

    std::pair<int, int> find(int x)
    {
        int p = 0;
        int root = x;
        while (parent[root] != root) {
            p ^= parity[root];
            root = parent[root];
        }
        // Path compression with parity bookkeeping.
        int cur = x, acc = p;
        while (parent[cur] != cur) {
            int next = parent[cur];
            int next_acc = acc ^ parity[cur];
            parent[cur] = root;
            parity[cur] = acc;
            cur = next;
            acc = next_acc;
        }
        return {root, p};
    }

    // Returns false when the requested relation contradicts an existing one.
    bool unite(int a, int b, int rel)
    {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) return (pa ^ pb) == rel;
        if (ra < rb) {
            parent[rb] = ra;
            parity[rb] = pa ^ pb ^ rel;
        } else {
            parent[ra] = rb;
            parity[ra] = pa ^ pb ^ rel;
        }
        return true;
    }
};

} // namespace

Triangulation::Triangulation(std::vector<std::array<Gluing, 4>> gluings, std::string name)
    : name_(std::move(name)), gluings_(std::move(gluings))
{
    const int nt = n_tet();
    if (nt < 1) throw ValidationError("triangulation: at least one tetrahedron is required");
    for (int t = 0; t < nt; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluings_[t][f];
            std::array<int, 4> sorted = g.perm;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != std::array<int, 4>{0, 1, 2, 3})
                throw ValidationError("triangulation: gluing of tetrahedron " + std::to_string(t) + " face " +
                                      std::to_string(f) + " is not a permutation");
            if (g.tet < 0 || g.tet >= nt) throw ValidationError("triangulation: unglued face (target out of range)");
            if (g.face != g.perm[f]) throw ValidationError("triangulation: target face does not match the permutation");
            if (g.tet == t && g.face == f) throw ValidationError("triangulation: face glued to itself");
            const Gluing& back = gluings_[g.tet][g.face];
            bool inverse = back.tet == t && back.face == f;
            for (int i = 0; i < 4 && inverse; ++i) inverse = back.perm[g.perm[i]] == i;
            if (!inverse)
                throw ValidationError("triangulation: non-involutive gluing at tetrahedron " + std::to_string(t) +
                                      " face " + std::to_string(f));
        }

    // Orientation signs.
    orientation_.assign(nt, 0);
    orientation_[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluings_[t][f];
            int want = -orientation_[t] * perm_sign(g.perm);
            if (orientation_[g.tet] == 0) {
                orientation_[g.tet] = want;
                queue.push_back(g.tet);
            } else if (orientation_[g.tet] != want) {
                throw ValidationError("triangulation: non-orientable (gluing parity inconsistent at tetrahedron " +
                                      std::to_string(t) + " face " + std::to_string(f) + ")");
            }
        }
    }
    for (int t = 0; t < nt; ++t)
        if (orientation_[t] == 0) throw ValidationError("triangulation: not connected");

    // Edge and vertex orbits.
    ParityUnionFind edges(6 * nt), verts(4 * nt);
    for (int t = 0; t < nt; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluings_[t][f];
            for (int i = 0; i < 4; ++i)
                if (i != f) verts.unite(4 * t + i, 4 * g.tet + g.perm[i], 0);
            for (int k = 0; k < 6; ++k) {
                int u = kTetEdges[k][0], v = kTetEdges[k][1];
                if (u == f || v == f) continue;
                int pu = g.perm[u], pv = g.perm[v];
                if (!edges.unite(6 * t + k, 6 * g.tet + local_edge_index(pu, pv), pu > pv ? 1 : 0))
                    throw ValidationError("triangulation: an edge is identified with its own reverse");
            }
        }
    edge_.assign(nt, {});
    reversed_.assign(nt, {});
    vertex_.assign(nt, {});
    face_.assign(nt, {-1, -1, -1, -1});
    std::vector<int> edge_id(6 * nt, -1), edge_parity(6 * nt, 0), vert_id(4 * nt, -1);
    for (int t = 0; t < nt; ++t)
        for (int v = 0; v < 4; ++v) {
            int root = verts.find(4 * t + v).first;
            if (vert_id[root] < 0) vert_id[root] = n_vertices_++;
            vertex_[t][v] = vert_id[root];
        }
    for (int t = 0; t < nt; ++t)
        for (int k = 0; k < 6; ++k) {
            auto [root, par] = edges.find(6 * t + k);
            if (edge_id[root] < 0) {
                // The first slot met in scan order fixes the canonical orientation.
                edge_id[root] = n_edges_++;
                edge_parity[root] = par;
                endpoints_.push_back({vertex_[t][kTetEdges[k][0]], vertex_[t][kTetEdges[k][1]]});
                degree_.push_back(0);
            }
            edge_[t][k] = edge_id[root];
            reversed_[t][k] = (par ^ edge_parity[root]) != 0;
            ++degree_[edge_id[root]];
        }
    for (int t = 0; t < nt; ++t)
        for (int f = 0; f < 4; ++f) {
            if (face_[t][f] >= 0) continue;
            const Gluing& g = gluings_[t][f];
            face_[t][f] = n_faces_;
            face_[g.tet][g.face] = n_faces_;
            face_rep_.push_back({t, f});
            ++n_faces_;
        }
    if (euler_characteristic() != 0)
        throw ValidationError("triangulation: Euler characteristic is " + std::to_string(euler_characteristic()) +
                              ", not 0");
}

Triangulation triangulation_from_json(const json& doc)
{
    const char* what = "triangulation file";
    detail::check_fields(doc, {"tets"}, {"name"}, what);
    std::string name = doc.contains("name") ? detail::get_as<std::string>(doc["name"], what) : "";
    if (!doc["tets"].is_array()) throw ParseError("triangulation file: 'tets' must be a list");
    std::vector<std::array<Gluing, 4>> gl;
    for (const auto& tet : doc["tets"]) {
        if (!tet.is_array() || tet.size() != 4) throw ParseError("triangulation file: each tetrahedron needs 4 gluing records");
        std::array<Gluing, 4> rec;
        for (int f = 0; f < 4; ++f) {
            const json& r = tet[f];
            if (r.is_null()) throw ValidationError("triangulation: unglued face");
            if (!r.is_array() || r.size() != 3) throw ParseError("triangulation file: gluing records are [tet, face, perm4]");
            rec[f].tet = detail::get_as<int>(r[0], what);
            rec[f].face = detail::get_as<int>(r[1], what);
            auto p = detail::get_as<std::vector<int>>(r[2], what);
            if (p.size() != 4) throw ParseError("triangulation file: permutations have 4 entries");
            for (int i = 0; i < 4; ++i) rec[f].perm[i] = p[i];
            if (rec[f].face < 0 || rec[f].face > 3) throw ParseError("triangulation file: face index out of range");
        }
        gl.push_back(rec);
    }
    return Triangulation(std::move(gl), std::move(name));
}

Triangulation parse_triangulation(const std::string& text)
{
    return triangulation_from_json(detail::parse_document(text, "triangulation file"));
}

json to_json(const Triangulation& tri)
{
    json tets = json::array();
    for (int t = 0; t < tri.n_tet(); ++t) {
        json recs = json::array();
        for (const Gluing& g : tri.gluings(t))
            recs.push_back({g.tet, g.face, {g.perm[0], g.perm[1], g.perm[2], g.perm[3]}});
        tets.push_back(recs);
    }
    json doc = json::object();
    doc["name"] = tri.name();
    doc["tets"] = tets;
    return doc;
}

std::string Homology::str() const
{
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        if (betti > 1) os << betti;
        os << "Z";
        first = false;
    }
    for (auto t : torsion) {
        if (!first) os << " + ";
        os << "Z_" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Homology first_homology(const Triangulation& tri)
{
    const int ne = tri.n_edges(), nv = tri.n_vertices(), nf = tri.n_faces();
    IntMatrix d1(nv, std::vector<std::int64_t>(ne, 0));
    for (int e = 0; e < ne; ++e) {
        auto [tail, head] = tri.edge_endpoints(e);
        d1[head][e] += 1;
        d1[tail][e] -= 1;
    }
    IntMatrix d2(ne, std::vector<std::int64_t>(nf, 0));
    for (int f = 0; f < nf; ++f) {
        auto [t, opp] = tri.face_representative(f);
        int v[3], n = 0;
        for (int i = 0; i < 4; ++i)
            if (i != opp) v[n++] = i;
        const int pairs[3][2] = {{v[0], v[1]}, {v[0], v[2]}, {v[1], v[2]}};
        const int coeff[3] = {1, -1, 1};
        for (int s = 0; s < 3; ++s) {
            int k = local_edge_index(pairs[s][0], pairs[s][1]);
            d2[tri.edge(t, k)][f] += tri.edge_reversed(t, k) ? -coeff[s] : coeff[s];
        }
    }
    SmithForm s1 = smith_normal_form(d1);
    SmithForm s2 = smith_normal_form(d2);
    Homology h;
    h.betti = ne - s1.rank - s2.rank;
    for (auto v : s2.diagonal)
        if (v > 1) h.torsion.push_back(v);
    std::sort(h.torsion.begin(), h.torsion.end());
    return h;
}

Rational vec_g_oracle(int order, const Triangulation& tri)
{
    if (order < 1) throw ValidationError("group order must be positive");
    Homology h = first_homology(tri);
    std::int64_t count = 1;
    for (int i = 0; i < h.betti; ++i) count *= order;
    for (auto t : h.torsion) count *= std::gcd<std::int64_t>(t, order);
    std::int64_t g = std::gcd<std::int64_t>(count, order);
    return {count / g, order / g};
}

} // namespace tqft
