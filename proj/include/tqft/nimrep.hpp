#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "tqft/fusion_ring.hpp"

namespace tqft {

// Nonnegative integer matrix representation: action[i][m][n] is the
// multiplicity of m in i (x) n.
struct NimRep {
    int module_rank = 0;
    std::vector<Eigen::MatrixXi> action;
    // Perron weights, normalized so that sum dM^2 = global dimension.
    std::vector<double> dM;

    Eigen::MatrixXd matrix(int i) const { return action[i].cast<double>(); }
};

NimRep parse_nimrep(const std::string& text, const FusionRing& ring);
NimRep nimrep_from_json(const nlohmann::json& doc, const FusionRing& ring);
NimRep regular_nimrep(const FusionRing& ring);
// Checks every invariant and fills dM; throws ValidationError.
NimRep make_nimrep(const FusionRing& ring, std::vector<Eigen::MatrixXi> action);
nlohmann::json to_json(const NimRep& nim);

} // namespace tqft
