#include "tqft/nimrep.hpp"

#include <cmath>

#include "json_util.hpp"
#include "tqft/error.hpp"

namespace tqft {

using detail::json;

NimRep make_nimrep(const FusionRing& ring, std::vector<Eigen::MatrixXi> action)
{
    const int r = ring.rank();
    if (static_cast<int>(action.size()) != r) throw ValidationError("NIM-rep: one action matrix per label is required");
    const int m = static_cast<int>(action[0].rows());
    if (m < 1) throw ValidationError("NIM-rep: module rank must be positive");
    for (const auto& a : action) {
        if (a.rows() != m || a.cols() != m) throw ValidationError("NIM-rep: action matrices must be module_rank square");
        if (a.minCoeff() < 0) throw ValidationError("NIM-rep: negative entry");
    }
    if (action[0] != Eigen::MatrixXi::Identity(m, m)) throw ValidationError("NIM-rep: the unit must act as the identity");
    for (int i = 0; i < r; ++i)
        if (action[ring.dual(i)] != action[i].transpose())
            throw ValidationError("NIM-rep: action of dual(" + ring.label(i) + ") is not the transpose");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Eigen::MatrixXi rhs = Eigen::MatrixXi::Zero(m, m);
            for (int k = 0; k < r; ++k) rhs += ring.N(i, j, k) * action[k];
            if (action[i] * action[j] != rhs)
                throw ValidationError("representation property violation at (" + ring.label(i) + ", " + ring.label(j) +
                                      ")");
        }
    NimRep nim;
    nim.module_rank = m;
    nim.action = std::move(action);
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(m, m);
    for (const auto& a : nim.action) sum += a.cast<double>();
    // The module is indecomposable iff the summed action is irreducible.
    Eigen::MatrixXd reach = sum + Eigen::MatrixXd::Identity(m, m);
    Eigen::MatrixXd closure = reach;
    for (int k = 0; k < m; ++k) closure = (closure * reach).unaryExpr([](double v) { return v > 0 ? 1.0 : 0.0; });
    if ((closure.array() <= 0).any()) throw ValidationError("NIM-rep: module is decomposable");
    std::vector<double> w = perron_vector(sum, 100000);
    DimensionData dims = frobenius_perron_data(ring);
    double norm2 = 0.0;
    for (double v : w) norm2 += v * v;
    double scale = std::sqrt(dims.mu / norm2);
    nim.dM.resize(m);
    for (int k = 0; k < m; ++k) nim.dM[k] = w[k] * scale;
    Eigen::Map<const Eigen::VectorXd> dm(nim.dM.data(), m);
    for (int i = 0; i < r; ++i) {
        double res = (nim.matrix(i) * dm - dims.d[i] * dm).cwiseAbs().maxCoeff();
        if (res > 1e-9 * std::max(1.0, dm.maxCoeff()))
            throw ValidationError("NIM-rep: module weights are not a common eigenvector at " + ring.label(i));
    }
    return nim;
}

NimRep nimrep_from_json(const json& doc, const FusionRing& ring)
{
    const char* what = "NIM-rep file";
    detail::check_fields(doc, {"module_rank", "action"}, {"name"}, what);
    int m = detail::get_as<int>(doc["module_rank"], what);
    if (m < 1) throw ParseError("NIM-rep file: module_rank must be positive");
    if (!doc["action"].is_array() || static_cast<int>(doc["action"].size()) != ring.rank())
        throw ParseError("NIM-rep file: one action matrix per label is required");
    std::vector<Eigen::MatrixXi> action;
    for (const auto& mat : doc["action"]) {
        auto rows = detail::get_as<std::vector<std::vector<int>>>(mat, what);
        if (static_cast<int>(rows.size()) != m) throw ParseError("NIM-rep file: action matrix has wrong size");
        Eigen::MatrixXi a(m, m);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != m) throw ParseError("NIM-rep file: action matrix has wrong size");
            for (int j = 0; j < m; ++j) a(i, j) = rows[i][j];
        }
        action.push_back(a);
    }
    return make_nimrep(ring, std::move(action));
}

NimRep parse_nimrep(const std::string& text, const FusionRing& ring)
{
    return nimrep_from_json(detail::parse_document(text, "NIM-rep file"), ring);
}

NimRep regular_nimrep(const FusionRing& ring)
{
    std::vector<Eigen::MatrixXi> action;
    for (int i = 0; i < ring.rank(); ++i) action.push_back(ring.fusion_matrix(i).cast<int>());
    return make_nimrep(ring, std::move(action));
}

json to_json(const NimRep& nim)
{
    json action = json::array();
    for (const auto& a : nim.action) {
        json rows = json::array();
        for (int i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (int j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
            rows.push_back(row);
        }
        action.push_back(rows);
    }
    json doc = json::object();
    doc["module_rank"] = nim.module_rank;
    doc["action"] = action;
    return doc;
}

} // namespace tqft
