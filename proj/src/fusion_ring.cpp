#include "tqft/fusion_ring.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "json_util.hpp"
#include "tqft/error.hpp"
#include "tqft/scalar.hpp"

namespace tqft {

using detail::json;

FusionRing::FusionRing(std::vector<std::string> labels, std::vector<int> dual, std::vector<int> coeffs)
    : rank_(static_cast<int>(labels.size())), labels_(std::move(labels)), dual_(std::move(dual)),
      coeffs_(std::move(coeffs))
{
    const size_t r = static_cast<size_t>(rank_);
    if (rank_ < 1) throw ValidationError("fusion ring: rank must be positive");
    if (dual_.size() != r) throw ValidationError("fusion ring: dual table has wrong length");
    if (coeffs_.size() != r * r * r) throw ValidationError("fusion ring: coefficient tensor has wrong size");
}

Eigen::MatrixXd FusionRing::fusion_matrix(int i) const
{
    Eigen::MatrixXd m(rank_, rank_);
    for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b) m(a, b) = N(i, b, a);
    return m;
}

bool FusionRing::multiplicity_free() const
{
    for (int v : coeffs_)
        if (v > 1) return false;
    return true;
}

bool FusionRing::commutative() const
{
    for (int i = 0; i < rank_; ++i)
        for (int j = i + 1; j < rank_; ++j)
            for (int k = 0; k < rank_; ++k)
                if (N(i, j, k) != N(j, i, k)) return false;
    return true;
}

int FusionRing::index_of(const std::string& label) const
{
    for (int i = 0; i < rank_; ++i)
        if (labels_[i] == label) return i;
    return -1;
}

int FusionRing::resolve(const std::string& token) const
{
    int idx = index_of(token);
    if (idx >= 0) return idx;
    try {
        size_t pos = 0;
        int v = std::stoi(token, &pos);
        if (pos == token.size() && v >= 0 && v < rank_) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError("unknown label '" + token + "'");
}

void FusionRing::validate() const
{
    const int r = rank_;
    auto name = [&](int i) { return labels_[i]; };
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != r) throw ValidationError("fusion ring: labels are not distinct");
    for (int v : coeffs_)
        if (v < 0) throw ValidationError("fusion ring: negative fusion coefficient");
    for (int i = 0; i < r; ++i) {
        if (dual_[i] < 0 || dual_[i] >= r) throw ValidationError("fusion ring: dual index out of range");
        if (dual_[dual_[i]] != i) throw ValidationError("duality violation: dual is not an involution at " + name(i));
    }
    if (dual_[0] != 0) throw ValidationError("duality violation: the unit is not self-dual");

    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            int delta = j == k ? 1 : 0;
            if (N(0, j, k) != delta || N(j, 0, k) != delta)
                throw ValidationError("unit violation at (" + name(j) + ", " + name(k) + ")");
        }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (N(i, j, 0) != (j == dual_[i] ? 1 : 0))
                throw ValidationError("duality violation: N[" + name(i) + "][" + name(j) + "][1] = " +
                                      std::to_string(N(i, j, 0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (N(i, j, k) != N(dual_[i], k, j) || N(i, j, k) != N(k, dual_[j], i))
                    throw ValidationError("Frobenius reciprocity violation at (" + name(i) + ", " + name(j) + ", " +
                                          name(k) + ")");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int l = 0; l < r; ++l) {
                    long long lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += static_cast<long long>(N(i, j, m)) * N(m, k, l);
                        rhs += static_cast<long long>(N(j, k, m)) * N(i, m, l);
                    }
                    if (lhs != rhs)
                        throw ValidationError("associativity violation at (" + name(i) + ", " + name(j) + ", " +
                                              name(k) + ", " + name(l) + "): " + std::to_string(lhs) +
                                              " != " + std::to_string(rhs));
                }
}

FusionRing fusion_ring_from_json(const json& doc)
{
    const char* what = "category file";
    detail::check_fields(doc, {"rank", "fusion"}, {"labels", "dual", "fsymbols", "gauge", "name"}, what);
    int rank = detail::get_as<int>(doc["rank"], what);
    if (rank < 1 || rank > 64) throw ParseError("category file: rank must be between 1 and 64");
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        labels = detail::get_as<std::vector<std::string>>(doc["labels"], what);
        if (static_cast<int>(labels.size()) != rank) throw ParseError("category file: labels length differs from rank");
    } else {
        for (int i = 0; i < rank; ++i) labels.push_back(std::to_string(i));
    }
    std::vector<int> dual;
    if (doc.contains("dual")) {
        dual = detail::get_as<std::vector<int>>(doc["dual"], what);
        if (static_cast<int>(dual.size()) != rank) throw ParseError("category file: dual length differs from rank");
    }
    const size_t r = static_cast<size_t>(rank);
    std::vector<int> coeffs(r * r * r, 0);
    std::vector<bool> given(coeffs.size(), false);
    for (const auto& entry : doc["fusion"]) {
        auto row = detail::get_as<std::vector<long long>>(entry, what);
        if (row.size() != 4) throw ParseError("category file: fusion entries must be [i, j, k, N]");
        for (int t = 0; t < 3; ++t)
            if (row[t] < 0 || row[t] >= rank) throw ParseError("category file: fusion index out of range");
        if (row[3] < 0 || row[3] > 1000000) throw ParseError("category file: fusion coefficient out of range");
        size_t idx = (static_cast<size_t>(row[0]) * r + row[1]) * r + row[2];
        if (given[idx]) throw ParseError("category file: duplicate fusion entry");
        given[idx] = true;
        coeffs[idx] = static_cast<int>(row[3]);
    }
    if (dual.empty()) {
        // Infer from N[i][j][0] when the table is not given.
        dual.assign(r, -1);
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (coeffs[(static_cast<size_t>(i) * r + j) * r] > 0 && dual[i] < 0) dual[i] = j;
        for (int& v : dual)
            if (v < 0) throw ValidationError("duality violation: some label has no dual");
    }
    FusionRing ring(std::move(labels), std::move(dual), std::move(coeffs));
    ring.validate();
    return ring;
}

FusionRing parse_fusion_ring(const std::string& text)
{
    return fusion_ring_from_json(detail::parse_document(text, "category file"));
}

json to_json(const FusionRing& ring)
{
    json fusion = json::array();
    const int r = ring.rank();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (ring.N(i, j, k) != 0) fusion.push_back({i, j, k, ring.N(i, j, k)});
    json doc = json::object();
    doc["rank"] = r;
    doc["labels"] = ring.labels();
    doc["dual"] = ring.duals();
    doc["fusion"] = fusion;
    return doc;
}

std::vector<double> perron_vector(const Eigen::MatrixXd& sum, int max_iter, int* iterations)
{
    const Eigen::Index n = sum.rows();
    // Shift by the identity so the iteration is aperiodic even for bipartite actions.
    Eigen::MatrixXd a = sum + Eigen::MatrixXd::Identity(n, n);
    Eigen::VectorXd x = Eigen::VectorXd::Ones(n) / std::sqrt(static_cast<double>(n));
    int it = 0;
    double change = 1.0;
    for (; it < max_iter; ++it) {
        Eigen::VectorXd y = a * x;
        y /= y.norm();
        change = (y - x).lpNorm<Eigen::Infinity>();
        x = y;
        if (change < 1e-15) break;
    }
    if (change > 1e-10) throw NumericalError("Frobenius-Perron iteration did not converge");
    // Rayleigh refinement: a few inverse-iteration steps at the Rayleigh quotient.
    double lambda = x.dot(a * x);
    for (int k = 0; k < 3; ++k) {
        Eigen::MatrixXd shifted = a - (lambda * (1 + 1e-13)) * Eigen::MatrixXd::Identity(n, n);
        Eigen::VectorXd y = shifted.fullPivLu().solve(x);
        if (!y.allFinite() || y.norm() == 0.0) break;
        y /= y.norm();
        if (y.sum() < 0) y = -y;
        x = y;
        lambda = x.dot(a * x);
    }
    if (iterations) *iterations = it;
    if (x(0) <= 0) throw NumericalError("Frobenius-Perron vector is not positive");
    std::vector<double> out(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out[i] = x(i) / x(0);
        if (!(out[i] > 0)) throw NumericalError("Frobenius-Perron vector is not positive");
    }
    return out;
}

DimensionData frobenius_perron_data(const FusionRing& ring)
{
    const int r = ring.rank();
    Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i) sum += ring.fusion_matrix(i);
    DimensionData out;
    out.d = perron_vector(sum, 100000, &out.iterations);
    for (int i = 0; i < r; ++i) {
        // Snap the dual pair to a common value; they agree up to rounding.
        if (ring.dual(i) > i) {
            double m = 0.5 * (out.d[i] + out.d[ring.dual(i)]);
            out.d[i] = out.d[ring.dual(i)] = m;
        }
    }
    out.mu = 0.0;
    for (double v : out.d) out.mu += v * v;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            double lhs = 0.0;
            for (int k = 0; k < r; ++k) lhs += ring.N(i, j, k) * out.d[k];
            if (std::abs(lhs - out.d[i] * out.d[j]) > 1e-9 * std::max(1.0, lhs))
                throw NumericalError("Frobenius-Perron vector fails the eigen-equation; malformed ring");
        }
    return out;
}

long long hom_from_unit(const FusionRing& ring, const std::vector<int>& factors)
{
    const int r = ring.rank();
    std::vector<long long> w(r, 0);
    w[0] = 1;
    for (int x : factors) {
        std::vector<long long> next(r, 0);
        for (int n = 0; n < r; ++n) {
            if (w[n] == 0) continue;
            for (int m = 0; m < r; ++m) next[m] += w[n] * ring.N(n, x, m);
        }
        w.swap(next);
    }
    return w[0];
}

} // namespace tqft
