#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace tqft {

struct Gluing {
    int tet = 0;
    int face = 0;
    // Vertex i of the source tetrahedron goes to vertex perm[i] of the target.
    std::array<int, 4> perm{0, 1, 2, 3};
};

// Local edges of a tetrahedron, in this order, each oriented from the
// smaller to the larger local vertex.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

int local_edge_index(int u, int v);

class Triangulation {
public:
    explicit Triangulation(std::vector<std::array<Gluing, 4>> gluings, std::string name = "");

    int n_tet() const { return static_cast<int>(gluings_.size()); }
    int n_vertices() const { return n_vertices_; }
    int n_edges() const { return n_edges_; }
    int n_faces() const { return n_faces_; }
    int euler_characteristic() const { return n_vertices_ - n_edges_ + n_faces_ - n_tet(); }
    const std::string& name() const { return name_; }
    const std::array<Gluing, 4>& gluings(int t) const { return gluings_[t]; }

    // Edge orbit of local edge k of tetrahedron t.
    int edge(int t, int k) const { return edge_[t][k]; }
    // True if local edge k runs against the orbit's canonical orientation.
    bool edge_reversed(int t, int k) const { return reversed_[t][k]; }
    int vertex(int t, int v) const { return vertex_[t][v]; }
    int face(int t, int f) const { return face_[t][f]; }
    // +1 or -1, relative to tetrahedron 0.
    int orientation(int t) const { return orientation_[t]; }
    // Vertex orbits of the canonical tail and head of each edge.
    std::array<int, 2> edge_endpoints(int e) const { return endpoints_[e]; }
    // Number of (tetrahedron, local edge) slots in each edge orbit.
    int edge_degree(int e) const { return degree_[e]; }
    // A representative (tetrahedron, face) for each face class.
    std::array<int, 2> face_representative(int f) const { return face_rep_[f]; }

private:
    std::string name_;
    std::vector<std::array<Gluing, 4>> gluings_;
    int n_vertices_ = 0, n_edges_ = 0, n_faces_ = 0;
    std::vector<std::array<int, 6>> edge_;
    std::vector<std::array<bool, 6>> reversed_;
    std::vector<std::array<int, 4>> vertex_;
    std::vector<std::array<int, 4>> face_;
    std::vector<int> orientation_;
    std::vector<std::array<int, 2>> endpoints_;
    std::vector<int> degree_;
    std::vector<std::array<int, 2>> face_rep_;
};

Triangulation parse_triangulation(const std::string& text);
Triangulation triangulation_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Triangulation& tri);

struct Homology {
    int betti = 0;
    // Invariant factors > 1.
    std::vector<std::int64_t> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    std::string str() const;
};

Homology first_homology(const Triangulation& tri);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// |Hom(H_1(M), Z_order)| / order.
Rational vec_g_oracle(int order, const Triangulation& tri);

} // namespace tqft
