#include "tqft/modular_data.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "json_util.hpp"
#include "tqft/error.hpp"

namespace tqft {

using detail::json;

namespace {

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

cplx read_complex(const json& v)
{
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (!v.is_array() || v.size() != 2) throw ParseError("modular-data file: complex entries must be [re, im]");
    return {detail::get_as<double>(v[0], "modular-data file"), detail::get_as<double>(v[1], "modular-data file")};
}

} // namespace

ModularData::ModularData(std::vector<std::string> labels, Eigen::MatrixXcd S, Eigen::VectorXcd T)
    : ModularData(std::move(labels), std::move(S), std::move(T), default_tol())
{
}

ModularData::ModularData(std::vector<std::string> labels, Eigen::MatrixXcd S, Eigen::VectorXcd T, double tol)
    : labels_(std::move(labels)), S_(std::move(S)), T_(std::move(T))
{
    const int r = rank();
    if (r < 1) throw ValidationError("modular data: rank must be positive");
    if (S_.rows() != r || S_.cols() != r || T_.size() != r)
        throw ValidationError("modular data: S and T sizes do not match the label count");

    double unit_res = (S_ * S_.adjoint() - Eigen::MatrixXcd::Identity(r, r)).cwiseAbs().maxCoeff();
    if (unit_res > tol) throw ValidationError("modular data: S is not unitary (residual " + fmt(unit_res) + ")");
    double sym_res = (S_ - S_.transpose()).cwiseAbs().maxCoeff();
    if (sym_res > tol) throw ValidationError("modular data: S is not symmetric (residual " + fmt(sym_res) + ")");
    if (std::abs(T_(0) - cplx(1.0, 0.0)) > tol) throw ValidationError("modular data: T[0] must be 1");
    for (int i = 0; i < r; ++i)
        if (std::abs(std::abs(T_(i)) - 1.0) > tol) throw ValidationError("modular data: |theta| != 1 at " + labels_[i]);

    cplx s00 = S_(0, 0);
    if (std::abs(s00.imag()) > tol || s00.real() <= tol) throw ValidationError("modular data: S[0][0] must be positive");
    D_ = 1.0 / s00.real();
    d_.resize(r);
    for (int i = 0; i < r; ++i) {
        cplx v = S_(0, i) / s00;
        if (std::abs(v.imag()) > tol) throw ValidationError("modular data: dimension of " + labels_[i] + " is not real");
        d_[i] = v.real();
    }
    p_plus_ = p_minus_ = 0.0;
    for (int i = 0; i < r; ++i) {
        p_plus_ += T_(i) * d_[i] * d_[i];
        p_minus_ += std::conj(T_(i)) * d_[i] * d_[i];
    }
    if (std::abs(p_plus_ * p_minus_ - D_ * D_) > tol * D_ * D_)
        throw ValidationError("modular data: p_plus * p_minus != D^2");

    Eigen::MatrixXcd S2 = S_ * S_;
    dual_.assign(r, -1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            cplx v = S2(i, j);
            if (std::abs(v - cplx(1.0, 0.0)) <= tol) {
                if (dual_[i] >= 0) throw ValidationError("modular data: S^2 is not a permutation");
                dual_[i] = j;
            } else if (std::abs(v) > tol) {
                throw ValidationError("modular data: S^2 is not a permutation");
            }
        }
    for (int i = 0; i < r; ++i)
        if (dual_[i] < 0 || dual_[dual_[i]] != i) throw ValidationError("modular data: S^2 is not an involution");

    Eigen::MatrixXcd ST = S_ * T_.asDiagonal();
    Eigen::MatrixXcd lhs = ST * ST * ST;
    Eigen::MatrixXcd rhs = (p_plus_ / D_) * S2;
    double mod_res = (lhs - rhs).cwiseAbs().maxCoeff();
    if (mod_res > tol) throw ValidationError("modular data: (ST)^3 != (p+/D) S^2 (residual " + fmt(mod_res) + ")");

    N_.assign(static_cast<size_t>(r) * r * r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                cplx v = 0.0;
                for (int m = 0; m < r; ++m) v += S_(i, m) * S_(j, m) * std::conj(S_(k, m)) / S_(0, m);
                double re = std::round(v.real());
                if (std::abs(v - cplx(re, 0.0)) > tol || re < 0)
                    throw ValidationError("modular data: Verlinde coefficient N[" + labels_[i] + "][" + labels_[j] +
                                          "][" + labels_[k] + "] = " + fmt(v.real()) +
                                          " is not a nonnegative integer");
                N_[(static_cast<size_t>(i) * r + j) * r + k] = static_cast<int>(re);
            }
}

FusionRing ModularData::fusion_ring() const
{
    FusionRing ring(labels_, dual_, N_);
    ring.validate();
    return ring;
}

ModularData modular_data_from_json(const json& doc)
{
    detail::check_fields(doc, {"S", "T"}, {"labels", "name"}, "modular-data file");
    const json& s = doc["S"];
    const json& t = doc["T"];
    if (!s.is_array() || !t.is_array()) throw ParseError("modular-data file: S and T must be arrays");
    const int r = static_cast<int>(t.size());
    if (static_cast<int>(s.size()) != r) throw ParseError("modular-data file: S and T sizes differ");
    Eigen::MatrixXcd S(r, r);
    Eigen::VectorXcd T(r);
    for (int i = 0; i < r; ++i) {
        if (!s[i].is_array() || static_cast<int>(s[i].size()) != r) throw ParseError("modular-data file: S is not square");
        for (int j = 0; j < r; ++j) S(i, j) = read_complex(s[i][j]);
        T(i) = read_complex(t[i]);
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        labels = detail::get_as<std::vector<std::string>>(doc["labels"], "modular-data file");
        if (static_cast<int>(labels.size()) != r) throw ParseError("modular-data file: labels length differs from rank");
    } else {
        for (int i = 0; i < r; ++i) labels.push_back(std::to_string(i));
    }
    return ModularData(std::move(labels), std::move(S), std::move(T));
}

ModularData parse_modular_data(const std::string& text)
{
    return modular_data_from_json(detail::parse_document(text, "modular-data file"));
}

json to_json(const ModularData& md)
{
    json s = json::array();
    json t = json::array();
    for (int i = 0; i < md.rank(); ++i) {
        json row = json::array();
        for (int j = 0; j < md.rank(); ++j) row.push_back({md.S()(i, j).real(), md.S()(i, j).imag()});
        s.push_back(row);
        t.push_back({md.T()(i).real(), md.T()(i).imag()});
    }
    json doc = json::object();
    doc["labels"] = md.labels();
    doc["S"] = s;
    doc["T"] = t;
    return doc;
}

std::vector<int> match_modular_data(const ModularData& a, const ModularData& b, double tol)
{
    const int r = a.rank();
    if (b.rank() != r) return {};
    std::vector<int> perm(r, -1);
    std::vector<bool> used(r, false);
    std::function<bool(int)> place = [&](int i) -> bool {
        if (i == r) return true;
        for (int c = 0; c < r; ++c) {
            if (used[c] || std::abs(a.T()(c) - b.T()(i)) > tol) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                ok = std::abs(a.S()(c, perm[j]) - b.S()(i, j)) <= tol;
            ok = ok && std::abs(a.S()(c, c) - b.S()(i, i)) <= tol;
            if (!ok) continue;
            perm[i] = c;
            used[c] = true;
            if (place(i + 1)) return true;
            used[c] = false;
        }
        perm[i] = -1;
        return false;
    };
    if (!place(0)) return {};
    return perm;
}

} // namespace tqft
