#include "tqft/plumbing.hpp"

#include <numeric>

#include "json_util.hpp"
#include "tqft/error.hpp"

namespace tqft {

using detail::json;

PlumbingTree::PlumbingTree(std::vector<long long> framings, std::vector<std::pair<int, int>> edges)
    : framings_(std::move(framings)), edges_(std::move(edges))
{
    const int n = size();
    adj_.assign(n, {});
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    linking_.assign(n, std::vector<std::int64_t>(n, 0));
    for (int v = 0; v < n; ++v) linking_[v][v] = framings_[v];
    for (auto [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw ValidationError("plumbing: edge endpoint out of range");
        if (u == v) throw ValidationError("plumbing: cycle detected (self-loop at vertex " + std::to_string(u) + ")");
        int ru = find(u), rv = find(v);
        if (ru == rv)
            throw ValidationError("plumbing: cycle detected at edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ")");
        root[ru] = rv;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        linking_[u][v] = linking_[v][u] = 1;
    }
    inertia_ = rational_inertia(linking_);
}

PlumbingTree plumbing_from_json(const json& doc)
{
    const char* what = "plumbing file";
    detail::check_fields(doc, {"vertices"}, {"edges", "name"}, what);
    auto framings = detail::get_as<std::vector<long long>>(doc["vertices"], what);
    std::vector<std::pair<int, int>> edges;
    if (doc.contains("edges")) {
        for (const auto& e : doc["edges"]) {
            auto pair = detail::get_as<std::vector<int>>(e, what);
            if (pair.size() != 2) throw ParseError("plumbing file: edges are [u, v] pairs");
            edges.emplace_back(pair[0], pair[1]);
        }
    }
    return PlumbingTree(std::move(framings), std::move(edges));
}

PlumbingTree parse_plumbing(const std::string& text)
{
    return plumbing_from_json(detail::parse_document(text, "plumbing file"));
}

json to_json(const PlumbingTree& tree)
{
    json edges = json::array();
    for (auto [u, v] : tree.edges()) edges.push_back({u, v});
    json doc = json::object();
    doc["vertices"] = tree.framings();
    doc["edges"] = edges;
    return doc;
}

PlumbingTree lens_plumbing(long long p) { return PlumbingTree({p}, {}); }

} // namespace tqft
