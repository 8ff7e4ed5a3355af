#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqft/fusion_ring.hpp"
#include "tqft/modular_data.hpp"

namespace tqft {

struct MarkedPoint {
    // Label index, or -1 when given by name.
    int index = -1;
    std::string name;
    // false for '-': the point carries the dual label.
    bool positive = true;
};

struct Slot {
    bool green = false;
    std::string id;                  // green edges
    std::vector<MarkedPoint> points; // black arcs, in boundary orientation order
};

struct GreenPairing {
    std::string first, second;
};

// Truncated-polygon decomposition: each polygon alternates black arcs (part of
// the surface boundary, possibly carrying marked points) and green edges,
// which are glued in pairs.
class DecoratedSurface {
public:
    DecoratedSurface(std::vector<std::vector<Slot>> polygons, std::vector<GreenPairing> pairings);

    const std::vector<std::vector<Slot>>& polygons() const { return polygons_; }
    const std::vector<GreenPairing>& pairings() const { return pairings_; }
    int euler_characteristic() const { return static_cast<int>(polygons_.size()) - static_cast<int>(pairings_.size()); }
    int boundary_components() const { return boundary_components_; }
    int genus() const { return genus_; }
    int connected_components() const { return components_; }

    // Copy with every marked point relabeled in reading order.
    DecoratedSurface with_marked_labels(const std::vector<int>& labels) const;
    int marked_point_count() const;

private:
    std::vector<std::vector<Slot>> polygons_;
    std::vector<GreenPairing> pairings_;
    int boundary_components_ = 0;
    int genus_ = 0;
    int components_ = 0;
};

DecoratedSurface parse_surface(const std::string& text);
DecoratedSurface surface_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const DecoratedSurface& surf);

// Sum over green colorings of the product over polygons of dim Hom(1, X(polygon)).
long long dim_state_space(const FusionRing& ring, const DecoratedSurface& surf, long long cap = 100000000);

// Number of basis vectors per green coloring (zero entries omitted), keyed by
// the coloring in pairing order.
std::map<std::vector<int>, long long> state_space_basis_counts(const FusionRing& ring, const DecoratedSurface& surf,
                                                               long long cap = 100000000);

// Pants-decomposition count of the genus-g closed surface in the given modular data.
long long dim_closed_surface(const ModularData& md, int genus);

} // namespace tqft
