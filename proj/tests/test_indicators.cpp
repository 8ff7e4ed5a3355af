#include <doctest.h>

#include <numeric>
#include <random>

#include "test_support.hpp"
#include "tqft/error.hpp"
#include "tqft/indicators.hpp"

using namespace tt;

namespace {

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

Eigen::VectorXcd random_vector(std::mt19937_64& rng, int n)
{
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i) v(i) = cplx(g(rng), g(rng));
    return v;
}

const std::vector<std::string> kCenters{"trivial", "vec_z2", "vec_z3", "fib", "ising"};

} // namespace

TEST_SUITE("indicators") {

TEST_CASE("curve completion")
{
    for (long long m = -6; m <= 6; ++m)
        for (long long r = -6; r <= 6; ++r) {
            if (std::gcd(m, r) != 1) continue;
            Mat2 g = curve_completion(TorusCurve(m, r));
            CHECK(mat_det(g) == 1);
            CHECK(g[0][0] == m);
            CHECK(g[1][0] == r);
            if (m != 0) {
                CHECK(g[0][1] >= 0);
                CHECK(g[0][1] < std::llabs(m));
            }
        }
    CHECK_THROWS_AS(TorusCurve(0, 0), ValidationError);
    CHECK_THROWS_AS(curve_completion(TorusCurve(2, 4)), ValidationError);
    CHECK(TorusCurve(4, -6).d() == 2);
    CHECK(TorusCurve(0, -3).d() == 3);
}

TEST_CASE("anchor: the meridian against a center simple is the induction multiplicity")
{
    for (const auto& name : kCenters) {
        Center c = center(name);
        for (int v = 0; v < c.fs.rank(); ++v)
            for (int x = 0; x < c.cd.rank_z; ++x) {
                cplx val = genus1_indicator(c.cd, TorusCurve(1, 0), basis(c.fs.rank(), v), basis(c.cd.rank_z, x)).value;
                CHECK(std::abs(val - static_cast<double>(c.cd.induction(v, x))) < 1e-9);
            }
    }
}

TEST_CASE("fibonacci examples")
{
    Center c = center("fib");
    auto at = [&](int v, int x) {
        return genus1_indicator(c.cd, TorusCurve(1, 0), basis(2, v), basis(4, x)).value;
    };
    CHECK(std::abs(at(1, 3) - 1.0) < 1e-9);
    CHECK(std::abs(at(0, 1)) < 1e-9);
    CHECK(std::abs(fs_indicator(c.cd, 2, 1, 1) - 1.0) < 1e-9);
    IndicatorResult r = genus1_indicator(c.cd, TorusCurve(1, 0), basis(2, 1), basis(4, 0));
    CHECK(r.normalization == 1.0);
    CHECK(r.word.word.empty());
}

TEST_CASE("meridian against the vacuum detects the unit")
{
    for (const auto& name : kCenters) {
        Center c = center(name);
        for (int v = 0; v < c.fs.rank(); ++v) CHECK(std::abs(fs_indicator(c.cd, 1, 0, v) - (v == 0 ? 1.0 : 0.0)) < 1e-9);
    }
}

TEST_CASE("group categories: classical indicators count n-th roots of the identity")
{
    for (int n : {2, 3}) {
        Center c = center(n == 2 ? "vec_z2" : "vec_z3");
        for (int k = 1; k <= 6; ++k)
            for (int g = 0; g < n; ++g) {
                double expect = (g * k) % n == 0 ? 1.0 : 0.0;
                INFO("Z" << n << " g=" << g << " k=" << k);
                CHECK(std::abs(fs_indicator(c.cd, k, 1, g) - expect) < 1e-9);
            }
    }
}

TEST_CASE("indicators along (n, 1) match the twist-sum formula")
{
    for (const auto& name : kCenters) {
        Center c = center(name);
        const ModularData& md = c.cd.md();
        for (int n = 1; n <= 6; ++n)
            for (int v = 0; v < c.fs.rank(); ++v) {
                cplx expect = 0.0;
                for (int x = 0; x < c.cd.rank_z; ++x)
                    expect += std::pow(md.theta(x), static_cast<double>(n)) * md.d(x) *
                              static_cast<double>(c.cd.induction(v, x));
                expect /= c.fs.mu();
                CHECK(std::abs(fs_indicator(c.cd, n, 1, v) - expect) < 1e-9);
            }
    }
}

TEST_CASE("tube-algebra oracle agrees on all small curves")
{
    for (const auto& name : kCenters) {
        Center c = center(name);
        double worst = 0.0;
        for (int m = -3; m <= 3; ++m)
            for (int r = -3; r <= 3; ++r) {
                if (m == 0 && r == 0) continue;
                for (int v = 0; v < c.fs.rank(); ++v)
                    for (int x = 0; x < c.cd.rank_z; ++x) {
                        cplx a = genus1_indicator(c.cd, TorusCurve(m, r), basis(c.fs.rank(), v), basis(c.cd.rank_z, x)).value;
                        cplx b = indicator_reference_oracle(c.tube, c.cd, TorusCurve(m, r), v, x);
                        worst = std::max(worst, std::abs(a - b));
                    }
            }
        INFO(name);
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("the value does not depend on the completing column")
{
    Center c = center("ising");
    const ModularData& md = c.cd.md();
    std::mt19937_64 rng(17);
    for (int m = -3; m <= 3; ++m)
        for (int r = -3; r <= 3; ++r) {
            if (std::gcd(m, r) != 1) continue;
            Mat2 g = curve_completion(TorusCurve(m, r));
            Eigen::VectorXcd v = random_vector(rng, c.fs.rank()), z = random_vector(rng, c.cd.rank_z);
            Eigen::VectorXcd u = c.cd.induction.cast<cplx>().transpose() * v;
            cplx base = genus1_indicator(c.cd, TorusCurve(m, r), v, z).value;
            for (long long k : {-2, -1, 1, 3}) {
                Mat2 tk{{{1, k}, {0, 1}}};
                Mat2 alt = mat_mul(g, tk);
                cplx other = (u.transpose() * torus_rep_apply(md, equivariance_conjugate(alt), z))(0);
                CHECK(std::abs(other - base) < 1e-9);
            }
        }
}

TEST_CASE("linearity")
{
    Center c = center("fib");
    std::mt19937_64 rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        TorusCurve curve(std::uniform_int_distribution<int>(-3, 3)(rng), 1);
        Eigen::VectorXcd v1 = random_vector(rng, 2), v2 = random_vector(rng, 2);
        Eigen::VectorXcd z1 = random_vector(rng, 4), z2 = random_vector(rng, 4);
        cplx a(0.3, -1.2);
        auto I = [&](const Eigen::VectorXcd& v, const Eigen::VectorXcd& z) { return genus1_indicator(c.cd, curve, v, z).value; };
        CHECK(std::abs(I(v1, z1 + a * z2) - (I(v1, z1) + a * I(v1, z2))) < 1e-9);
        CHECK(std::abs(I(v1 + a * v2, z1) - (I(v1, z1) + a * I(v2, z1))) < 1e-9);
    }
    // Non-coprime curves stay linear in z.
    Eigen::VectorXcd z1 = random_vector(rng, 4), z2 = random_vector(rng, 4);
    auto J = [&](const Eigen::VectorXcd& z) { return genus1_indicator(c.cd, TorusCurve(2, 2), basis(2, 1), z).value; };
    CHECK(std::abs(J(z1 + z2) - J(z1) - J(z2)) < 1e-9);
}

TEST_CASE("scaling law for cabled curves")
{
    for (const auto& name : {"vec_z3", "fib", "ising"}) {
        Center c = center(name);
        const int rc = c.fs.rank(), rz = c.cd.rank_z;
        std::mt19937_64 rng(29);
        for (cplx lambda : {cplx(2.0, 0.0), cplx(0.0, 1.0)})
            for (const TorusCurve& base : {TorusCurve(1, 2), TorusCurve(-1, 1), TorusCurve(2, 0), TorusCurve(2, -2)})
                for (int ell = 1; ell <= 3; ++ell)
                    for (int v = 0; v < rc; ++v) {
                        TorusCurve cable(base.m * ell, base.r * ell);
                        Eigen::VectorXcd z = random_vector(rng, rz);
                        cplx scaled = genus1_indicator(c.cd, cable, lambda * basis(rc, v), z).value;
                        cplx plain = genus1_indicator(c.cd, cable, basis(rc, v), z).value;
                        cplx factor = std::pow(lambda, static_cast<double>(base.d() * ell));
                        INFO(name << " lambda=" << lambda << " ell=" << ell << " v=" << v);
                        CHECK(std::abs(scaled - factor * plain) <= 1e-9 * std::max(1.0, std::abs(scaled)));
                        cplx oracle = 0.0;
                        for (int x = 0; x < rz; ++x)
                            oracle += z(x) * indicator_reference_oracle(c.tube, c.cd, cable, v, x);
                        CHECK(std::abs(plain - oracle) < 1e-6 * std::max(1.0, std::abs(oracle)));
                    }
    }
}

TEST_CASE("non-coprime curves need a single object class")
{
    Center c = center("fib");
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(2);
    CHECK_THROWS_WITH_AS(genus1_indicator(c.cd, TorusCurve(2, 0), v, basis(4, 0)), doctest::Contains("monomial"),
                         ValidationError);
    CHECK_NOTHROW(genus1_indicator(c.cd, TorusCurve(1, 0), v, basis(4, 0)));
    CHECK_THROWS_AS(genus1_indicator(c.cd, TorusCurve(1, 0), Eigen::VectorXcd::Ones(3), basis(4, 0)), ValidationError);
}

TEST_CASE("equivariance")
{
    Center tc = center("vec_z2");
    for (int x = 0; x < 4; ++x) {
        EquivarianceReport r = check_equivariance(tc.cd, kGenT, TorusCurve(1, 0), basis(2, 1), basis(4, x));
        CHECK(r.holds);
    }
    EquivarianceReport id = check_equivariance(tc.cd, kIdentity2, TorusCurve(2, 3), basis(2, 1), basis(4, 2));
    CHECK(id.holds);
    CHECK(id.residual == 0.0);
    CHECK_THROWS_AS(check_equivariance(tc.cd, Mat2{{{2, 0}, {0, 1}}}, TorusCurve(1, 0), basis(2, 1), basis(4, 0)),
                    ValidationError);

    for (const auto& name : kCenters) {
        Center c = center(name);
        std::mt19937_64 rng(31);
        double worst = 0.0;
        for (int rep = 0; rep < 20; ++rep) {
            Mat2 f = random_sl2z(rng, 6);
            int m = std::uniform_int_distribution<int>(-3, 3)(rng), r = std::uniform_int_distribution<int>(-3, 3)(rng);
            if (m == 0 && r == 0) m = 1;
            TorusCurve curve(m, r);
            Eigen::VectorXcd v = curve.d() == 1 ? random_vector(rng, c.fs.rank())
                                                : Eigen::VectorXcd(basis(c.fs.rank(), rep % c.fs.rank()));
            Eigen::VectorXcd z = random_vector(rng, c.cd.rank_z);
            worst = std::max(worst, check_equivariance(c.cd, f, curve, v, z).residual);
        }
        INFO(name);
        CHECK(worst < 1e-6);
    }
}

TEST_CASE("tensor power multiplicities")
{
    FusionRing fib = ring("fib");
    Eigen::VectorXd m = tensor_power_multiplicities(fib, 1, 3);
    CHECK(m(0) == 1.0);
    CHECK(m(1) == 2.0);
    CHECK(tensor_power_multiplicities(fib, 1, 0)(0) == 1.0);
}

}
