#include "tqft/rt.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "tqft/error.hpp"

namespace tqft {

namespace {

long long checked(long long a, long long b, bool add)
{
    long long out;
    bool bad = add ? __builtin_add_overflow(a, b, &out) : __builtin_mul_overflow(a, b, &out);
    if (bad) throw NumericalError("SL(2,Z) arithmetic overflow");
    return out;
}

Mat2 gen_power(char gen, long long exp)
{
    if (gen == 'S') {
        Mat2 m = kIdentity2;
        long long e = ((exp % 4) + 4) % 4;
        for (long long i = 0; i < e; ++i) m = mat_mul(m, kGenS);
        return m;
    }
    return Mat2{{{1, exp}, {0, 1}}};
}

// Nearest integer to a / c, ties toward zero.
long long nearest_quotient(long long a, long long c)
{
    long long q = a / c;
    long long r = a - q * c;
    if (2 * std::llabs(r) > std::llabs(c)) q += ((r < 0) == (c < 0)) ? 1 : -1;
    return q;
}

cplx ipow(cplx x, long long e)
{
    if (e < 0) return 1.0 / ipow(x, -e);
    cplx out = 1.0;
    while (e) {
        if (e & 1) out *= x;
        x *= x;
        e >>= 1;
    }
    return out;
}

} // namespace

Mat2 mat_mul(const Mat2& a, const Mat2& b)
{
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = checked(checked(a[i][0], b[0][j], false), checked(a[i][1], b[1][j], false), true);
    return c;
}

long long mat_det(const Mat2& a) { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

Mat2 mat_transpose(const Mat2& a) { return Mat2{{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }

Mat2 mat_reflect(const Mat2& a) { return Mat2{{{a[0][0], -a[0][1]}, {-a[1][0], a[1][1]}}}; }

Mat2 mat_inverse(const Mat2& a)
{
    if (mat_det(a) != 1) throw ValidationError("matrix does not have determinant 1");
    return Mat2{{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}};
}

Mat2 SL2ZWord::product() const
{
    Mat2 m = kIdentity2;
    for (const Syllable& s : word) m = mat_mul(m, gen_power(s.gen, s.exp));
    return m;
}

std::string SL2ZWord::str() const
{
    if (word.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) os << ' ';
        os << word[i].gen;
        if (word[i].exp != 1) os << '^' << word[i].exp;
    }
    return os.str();
}

SL2ZWord sl2z_factor(const Mat2& target)
{
    if (mat_det(target) != 1) throw ValidationError("SL(2,Z) factorization: determinant is not 1");
    SL2ZWord out;
    out.target = target;
    Mat2 a = target;
    // a = T^q S a' with a' having a smaller lower-left entry; ends at +-T^n.
    while (a[1][0] != 0) {
        long long q = nearest_quotient(a[0][0], a[1][0]);
        a = mat_mul(gen_power('T', -q), a);
        a = mat_mul(gen_power('S', 3), a);
        if (q != 0) out.word.push_back({'T', q});
        out.word.push_back({'S', 1});
    }
    if (a[0][0] == -1) out.word.push_back({'S', 2});
    long long n = a[0][0] * a[0][1];
    if (n != 0) out.word.push_back({'T', n});
    // Merge adjacent S runs.
    std::vector<Syllable> merged;
    for (const Syllable& s : out.word) {
        if (!merged.empty() && merged.back().gen == s.gen) {
            merged.back().exp += s.exp;
            if (s.gen == 'S') merged.back().exp %= 4;
            if (merged.back().exp == 0) merged.pop_back();
        } else {
            merged.push_back(s);
        }
    }
    out.word = std::move(merged);
    if (out.product() != target) throw Error("SL(2,Z) factorization failed to reassemble the target");
    return out;
}

SL2ZWord parse_word(const std::string& text)
{
    SL2ZWord w;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        if (tok == "1") continue;
        char g = tok[0];
        if (g != 'S' && g != 'T') throw ParseError("word letters must be S or T: '" + tok + "'");
        long long e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^') throw ParseError("malformed word token '" + tok + "'");
            try {
                e = std::stoll(tok.substr(2));
            } catch (const std::exception&) {
                throw ParseError("malformed word exponent '" + tok + "'");
            }
        }
        if (e != 0) w.word.push_back({g, e});
    }
    w.target = w.product();
    return w;
}

Eigen::MatrixXcd torus_rep_matrix(const ModularData& md, const SL2ZWord& w)
{
    const int r = md.rank();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(r, r);
    for (const Syllable& s : w.word) {
        if (s.gen == 'S') {
            long long e = ((s.exp % 4) + 4) % 4;
            for (long long i = 0; i < e; ++i) m = m * md.S();
        } else {
            Eigen::VectorXcd t(r);
            for (int i = 0; i < r; ++i) t(i) = ipow(md.theta(i), s.exp);
            m = m * t.asDiagonal();
        }
    }
    return m;
}

Eigen::VectorXcd torus_rep_apply(const ModularData& md, const Mat2& f, const Eigen::VectorXcd& vec, bool strict)
{
    if (vec.size() != md.rank()) throw ValidationError("torus representation: vector length differs from rank");
    if (strict && std::abs(md.anomaly() - cplx(1.0, 0.0)) > default_tol())
        throw ValidationError("torus representation: anomalous modular data (p+/D != 1)");
    return torus_rep_matrix(md, sl2z_factor(f)) * vec;
}

cplx rt_invariant(const ModularData& md, const PlumbingTree& tree)
{
    const int r = md.rank();
    const int n = tree.size();
    const cplx s00 = md.S()(0, 0);
    // Message passing on each component; message[v][c] sums the subtree below v.
    std::vector<std::vector<cplx>> message(n, std::vector<cplx>(r));
    std::vector<int> parent(n, -2), order;
    std::vector<int> roots;
    for (int s = 0; s < n; ++s) {
        if (parent[s] != -2) continue;
        roots.push_back(s);
        parent[s] = -1;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int w : tree.neighbours()[v])
                if (parent[w] == -2) {
                    parent[w] = v;
                    stack.push_back(w);
                }
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (int c = 0; c < r; ++c) {
            cplx val = ipow(md.d(c), 2 - tree.degree(v)) * ipow(md.theta(c), tree.framing(v));
            for (int w : tree.neighbours()[v]) {
                if (w == parent[v]) continue;
                cplx inner = 0.0;
                for (int c2 = 0; c2 < r; ++c2) inner += md.S()(c, c2) / s00 * message[w][c2];
                val *= inner;
            }
            message[v][c] = val;
        }
    }
    cplx total = 1.0;
    for (int root : roots) {
        cplx sum = 0.0;
        for (int c = 0; c < r; ++c) sum += message[root][c];
        total *= sum;
    }
    const double D = md.D();
    cplx pre = std::pow(D, -static_cast<double>(n) - 1.0) * ipow(md.p_plus() / D, -tree.b_plus()) *
               ipow(md.p_minus() / D, -tree.b_minus());
    return pre * total;
}

double verlinde_dimension(const ModularData& md, int genus)
{
    if (genus < 0) throw ValidationError("genus must be nonnegative");
    cplx sum = 0.0;
    for (int i = 0; i < md.rank(); ++i) sum += ipow(md.S()(0, i), 2 - 2 * static_cast<long long>(genus));
    double v = sum.real();
    if (std::abs(sum.imag()) > default_tol() * std::max(1.0, std::abs(v)) ||
        std::abs(v - std::round(v)) > default_tol() * std::max(1.0, std::abs(v)))
        throw ValidationError("Verlinde dimension is not an integer; modular data is invalid");
    return v;
}

} // namespace tqft
