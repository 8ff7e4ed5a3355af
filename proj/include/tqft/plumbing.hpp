#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqft/linalg.hpp"

namespace tqft {

// Framed unknots linked along the edges of a forest.
class PlumbingTree {
public:
    PlumbingTree(std::vector<long long> framings, std::vector<std::pair<int, int>> edges);

    int size() const { return static_cast<int>(framings_.size()); }
    long long framing(int v) const { return framings_[v]; }
    const std::vector<long long>& framings() const { return framings_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& neighbours() const { return adj_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    const IntMatrix& linking_matrix() const { return linking_; }
    int b_plus() const { return inertia_.positive; }
    int b_minus() const { return inertia_.negative; }
    int b_zero() const { return inertia_.zero; }

private:
    std::vector<long long> framings_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    IntMatrix linking_;
    Inertia inertia_;
};

PlumbingTree parse_plumbing(const std::string& text);
PlumbingTree plumbing_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const PlumbingTree& tree);

// Single vertex with framing p: the lens space L(p, 1).
PlumbingTree lens_plumbing(long long p);

} // namespace tqft
