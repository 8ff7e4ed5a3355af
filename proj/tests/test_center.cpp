#include <doctest.h>

#include <complex>

#include "test_support.hpp"
#include "tqft/error.hpp"

using namespace tt;

TEST_SUITE("center") {

TEST_CASE("tube algebra sizes and associativity")
{
    const std::vector<std::pair<std::string, int>> expect{
        {"trivial", 1}, {"vec_z2", 4}, {"vec_z3", 9}, {"fib", 7}, {"ising", 12}};
    for (const auto& [name, dim] : expect) {
        FSymbolSet fs = category(name);
        TubeAlgebra tube(fs);
        INFO(name);
        CHECK(tube.dim() == dim);
        CHECK(tube.associativity_residual() < 1e-12);
        CHECK(tube.unit_residual() < 1e-12);
        // Unit and basis product.
        for (int i = 0; i < tube.dim(); ++i) {
            auto x = tube.basis_element(i);
            CHECK((tube.multiply(tube.unit(), x) - x).norm() < 1e-12);
            CHECK((tube.multiply(x, tube.unit()) - x).norm() < 1e-12);
        }
    }
    CHECK(TubeAlgebra(category("vec_z2")).commutative(1e-12));
}

TEST_CASE("admissible tube count equals the fusion-rule count")
{
    for (const auto& name : kCategories) {
        FSymbolSet fs = category(name);
        const FusionRing& r = fs.ring();
        int count = 0;
        for (int a = 0; a < r.rank(); ++a)
            for (int s = 0; s < r.rank(); ++s)
                for (int b = 0; b < r.rank(); ++b)
                    for (int c = 0; c < r.rank(); ++c) count += r.N(s, a, c) && r.N(b, s, c);
        CHECK(TubeAlgebra(fs).dim() == count);
    }
}

TEST_CASE("block sizes square-sum to the algebra dimension")
{
    for (const auto& name : kCategories) {
        Center c = center(name);
        int sum = 0;
        for (int n : c.cd.block_sizes) sum += n * n;
        CHECK(sum == c.tube.dim());
    }
}

TEST_CASE("fibonacci center")
{
    Center c = center("fib");
    const CenterData& cd = c.cd;
    REQUIRE(cd.rank_z == 4);
    const double dims[] = {1.0, kPhi, kPhi, kPhi * kPhi};
    for (int x = 0; x < 4; ++x) CHECK(std::abs(cd.dims_z[x] - dims[x]) < 1e-9);
    CHECK(std::abs(cd.T_z(0) - 1.0) < 1e-9);
    CHECK(std::abs(cd.T_z(1) - std::polar(1.0, -4 * M_PI / 5)) < 1e-9);
    CHECK(std::abs(cd.T_z(2) - std::polar(1.0, 4 * M_PI / 5)) < 1e-9);
    CHECK(std::abs(cd.T_z(3) - 1.0) < 1e-9);
    const int b1[] = {1, 0, 0, 1}, bt[] = {0, 1, 1, 1};
    for (int x = 0; x < 4; ++x) {
        CHECK(cd.induction(0, x) == b1[x]);
        CHECK(cd.induction(1, x) == bt[x]);
    }
    REQUIRE(cd.has_modular());
    CHECK(cd.s_fit_residual < 1e-9);
}

TEST_CASE("center invariants for every category")
{
    for (const auto& name : kCategories) {
        Center c = center(name);
        const CenterData& cd = c.cd;
        INFO(name);
        REQUIRE(cd.has_modular());
        const ModularData& md = cd.md();
        CHECK(std::abs(md.anomaly() - 1.0) < 1e-6);
        CHECK(std::abs(md.D() - c.fs.mu()) < 1e-9);
        for (int v = 0; v < c.fs.rank(); ++v) {
            double s = 0.0;
            for (int x = 0; x < cd.rank_z; ++x) s += cd.dims_z[x] * cd.induction(v, x);
            CHECK(std::abs(s - c.fs.mu() * c.fs.d(v)) < 1e-6);
        }
        CenterCheck chk = check_center(cd, c.fs);
        CHECK(chk.pass);
        // Vacuum first and the unit induces only vacuum-type content with multiplicity one.
        CHECK(cd.induction(0, 0) == 1);
        CHECK(std::abs(cd.dims_z[0] - 1.0) < 1e-9);
    }
}

TEST_CASE("centers of Z2 and fibonacci match the doubled modular data")
{
    Center z2 = center("vec_z2");
    CHECK_FALSE(match_modular_data(z2.cd.md(), modular("toric_code"), 1e-6).empty());
    for (const auto& [cat, mod] : std::vector<std::pair<std::string, std::string>>{{"fib", "fib"}, {"ising", "ising"}}) {
        Center c = center(cat);
        ModularData sq = center_from_square(modular(mod));
        auto perm = match_modular_data(c.cd.md(), sq, 1e-6);
        INFO(cat);
        REQUIRE_FALSE(perm.empty());
        for (int i = 0; i < sq.rank(); ++i) {
            CHECK(std::abs(c.cd.md().T()(perm[i]) - sq.T()(i)) < 1e-6);
            for (int j = 0; j < sq.rank(); ++j)
                CHECK(std::abs(c.cd.md().S()(perm[i], perm[j]) - sq.S()(i, j)) < 1e-6);
        }
    }
}

TEST_CASE("doubling of modular data")
{
    ModularData one = center_from_square(modular("trivial"));
    CHECK(one.rank() == 1);
    ModularData sem2 = center_from_square(modular("semion"));
    CHECK(sem2.rank() == 4);
    CHECK(std::abs(sem2.p_plus() - sem2.D()) < 1e-12);
    CHECK(std::abs(sem2.p_minus() - sem2.D()) < 1e-12);
    ModularData fib2 = center_from_square(modular("fib"));
    CHECK(fib2.labels()[1] == "1.tau*");
}

TEST_CASE("decomposition is reproducible and seed-independent up to round-off")
{
    FSymbolSet fs = category("ising");
    TubeAlgebra tube(fs);
    CenterData a = decompose_center(tube, fs);
    CenterData b = decompose_center(tube, fs);
    CHECK(a.md().S() == b.md().S());
    CHECK(a.md().T() == b.md().T());
    CenterOptions other;
    other.seed = 12345;
    CenterData c = decompose_center(tube, fs, other);
    CHECK(c.seed == 12345);
    CHECK((a.md().S() - c.md().S()).norm() < 1e-9);
    CHECK(a.induction == c.induction);
}

TEST_CASE("characters of the closed unit tubes give the induction matrix")
{
    Center c = center("ising");
    for (int v = 0; v < c.fs.rank(); ++v)
        for (int x = 0; x < c.cd.rank_z; ++x)
            CHECK(std::abs(tube_character(c.tube, c.cd, x, c.tube.boundary_unit(v)) -
                           static_cast<double>(c.cd.induction(v, x))) < 1e-9);
}

}
