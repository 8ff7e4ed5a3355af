#include <doctest.h>

#include <bit>
#include <random>

#include "test_support.hpp"
#include "tqft/error.hpp"
#include "tqft/rt.hpp"

using namespace tt;

namespace {

// Direct sum over all rank^|V| colorings.
cplx brute_force_rt(const ModularData& md, const PlumbingTree& tree)
{
    const int n = tree.size(), r = md.rank();
    const cplx s00 = md.S()(0, 0);
    std::vector<int> c(static_cast<size_t>(n), 0);
    cplx sum = 0.0;
    while (true) {
        cplx term = 1.0;
        for (int v = 0; v < n; ++v) {
            double d = md.d(c[v]);
            term *= d * std::pow(md.theta(c[v]), static_cast<double>(tree.framing(v))) *
                    std::pow(d, 1.0 - tree.degree(v));
        }
        for (auto [u, v] : tree.edges()) term *= md.S()(c[u], c[v]) / s00;
        sum += term;
        int k = 0;
        while (k < n && ++c[k] == r) c[k++] = 0;
        if (k == n) break;
    }
    const double D = md.D();
    return sum * std::pow(D, -n - 1.0) * std::pow(md.p_plus() / D, -tree.b_plus()) *
           std::pow(md.p_minus() / D, -tree.b_minus());
}

PlumbingTree random_tree(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> frame(-3, 3);
    std::vector<long long> fr;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        fr.push_back(frame(rng));
        if (v > 0) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    }
    return PlumbingTree(fr, edges);
}

Mat2 random_sl2z(std::mt19937_64& rng, int max_len)
{
    Mat2 m = kIdentity2;
    const Mat2 tinv = mat_inverse(kGenT);
    int len = std::uniform_int_distribution<int>(1, max_len)(rng);
    for (int i = 0; i < len; ++i) {
        int g = std::uniform_int_distribution<int>(0, 2)(rng);
        m = mat_mul(m, g == 0 ? kGenS : g == 1 ? kGenT : tinv);
    }
    return m;
}

} // namespace

TEST_SUITE("rt") {

TEST_CASE("plumbing documents")
{
    PlumbingTree s3 = plumbing("s3");
    CHECK(s3.size() == 0);
    CHECK(s3.b_plus() + s3.b_minus() + s3.b_zero() == 0);
    PlumbingTree s2s1 = plumbing("s2xs1");
    CHECK(s2s1.b_zero() == 1);
    PlumbingTree l3 = plumbing("lens3");
    CHECK(l3.b_plus() == 1);
    PlumbingTree e8 = plumbing("poincare_e8");
    CHECK(e8.b_minus() == 8);
    CHECK_THROWS_WITH_AS(parse_plumbing(R"({"vertices": [1, 1, 1], "edges": [[0,1],[1,2],[2,0]]})"),
                         doctest::Contains("cycle"), ValidationError);
    CHECK_THROWS_AS(parse_plumbing(R"({"vertices": [1], "edges": [[0,3]]})"), ValidationError);
    CHECK_THROWS_AS(parse_plumbing(R"({"edges": []})"), ParseError);
}

TEST_CASE("calibration: sphere and S2 x S1")
{
    for (const auto& name : kModular) {
        ModularData md = modular(name);
        INFO(name);
        CHECK(std::abs(rt_invariant(md, plumbing("s3")) - 1.0 / md.D()) < 1e-9);
        CHECK(std::abs(rt_invariant(md, plumbing("s2xs1")) - 1.0) < 1e-9);
    }
}

TEST_CASE("toric code on RP3 is 1")
{
    CHECK(std::abs(rt_invariant(modular("toric_code"), lens_plumbing(2)) - 1.0) < 1e-12);
}

TEST_CASE("tree message passing equals the brute-force coloring sum")
{
    std::mt19937_64 rng(7);
    for (const auto& name : kModular) {
        ModularData md = modular(name);
        for (int rep = 0; rep < 12; ++rep) {
            PlumbingTree t = random_tree(rng, 1 + rep % 6);
            INFO(name << " rep=" << rep);
            CHECK(std::abs(rt_invariant(md, t) - brute_force_rt(md, t)) < 1e-10);
        }
        CHECK(std::abs(rt_invariant(md, plumbing("poincare_e8")) - brute_force_rt(md, plumbing("poincare_e8"))) <
              1e-10);
    }
}

TEST_CASE("doubled data gives the squared modulus")
{
    std::mt19937_64 rng(11);
    for (const auto& name : {"fib", "semion", "ising"}) {
        ModularData md = modular(name);
        ModularData sq = center_from_square(md);
        for (int rep = 0; rep < 8; ++rep) {
            PlumbingTree t = random_tree(rng, 1 + rep % 4);
            cplx z = rt_invariant(md, t);
            CHECK(std::abs(rt_invariant(sq, t) - std::norm(z)) < 1e-9);
        }
    }
}

TEST_CASE("verlinde dimensions")
{
    for (const auto& name : kModular) {
        ModularData md = modular(name);
        CHECK(std::abs(verlinde_dimension(md, 0) - 1.0) < 1e-9);
        CHECK(std::abs(verlinde_dimension(md, 1) - md.rank()) < 1e-9);
    }
    CHECK(std::abs(verlinde_dimension(modular("toric_code"), 2) - 16.0) < 1e-9);
    CHECK(std::abs(verlinde_dimension(center_from_square(modular("fib")), 2) - 25.0) < 1e-9);
}

TEST_CASE("SL(2,Z) factorization")
{
    CHECK(sl2z_factor(kIdentity2).word.empty());
    SL2ZWord s = sl2z_factor(kGenS);
    CHECK(s.str() == "S");
    Mat2 m{{{2, 1}, {1, 1}}};
    CHECK(sl2z_factor(m).product() == m);
    CHECK_THROWS_AS(sl2z_factor(Mat2{{{2, 0}, {0, 1}}}), ValidationError);

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 500; ++rep) {
        Mat2 f = random_sl2z(rng, 12);
        SL2ZWord w = sl2z_factor(f);
        CHECK(w.product() == f);
        long long big = 1;
        for (auto& row : f)
            for (long long x : row) big = std::max(big, std::llabs(x));
        int bits = std::bit_width(static_cast<unsigned long long>(big));
        CHECK(static_cast<int>(w.word.size()) <= 3 * bits + 4);
        CHECK(parse_word(w.str()).product() == f);
    }
}

TEST_CASE("torus representation")
{
    ModularData tc = modular("toric_code");
    Eigen::VectorXcd v(4);
    v << 1.0, cplx(0, 2), 3.0, -1.0;
    CHECK((torus_rep_apply(tc, kIdentity2, v) - v).norm() == 0.0);
    Eigen::VectorXcd s2 = torus_rep_apply(tc, mat_mul(kGenS, kGenS), v);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(s2(tc.dual(i)) - v(i)) < 1e-12);
    Mat2 st = mat_mul(kGenS, kGenT);
    Mat2 st3 = mat_mul(st, mat_mul(st, st));
    CHECK((torus_rep_apply(tc, st3, v) - s2).norm() < 1e-12);

    std::mt19937_64 rng(5);
    for (const auto& md : {tc, center_from_square(modular("fib")), center_from_square(modular("ising"))}) {
        for (int rep = 0; rep < 20; ++rep) {
            Mat2 f = random_sl2z(rng, 6), g = random_sl2z(rng, 6);
            Eigen::VectorXcd x = Eigen::VectorXcd::Random(md.rank());
            Eigen::VectorXcd lhs = torus_rep_apply(md, mat_mul(f, g), x);
            Eigen::VectorXcd rhs = torus_rep_apply(md, f, torus_rep_apply(md, g, x));
            CHECK((lhs - rhs).norm() < 1e-9);
        }
    }
    CHECK_THROWS_AS(torus_rep_apply(modular("semion"), kGenS, Eigen::VectorXcd::Ones(2)), ValidationError);
    CHECK_NOTHROW(torus_rep_apply(modular("semion"), kGenS, Eigen::VectorXcd::Ones(2), false));
}

}
