#include <doctest.h>

#include "test_support.hpp"
#include "tqft/error.hpp"
#include "tqft/rt.hpp"

using namespace tt;

namespace {

// dim Hom_Z(1, I(a) (x) I(b) (x) I(c)) from the center's Verlinde fusion and induction.
long long center_hom(const CenterData& cd, int a, int b, int c)
{
    const ModularData& md = cd.md();
    long long total = 0;
    for (int x = 0; x < cd.rank_z; ++x)
        for (int y = 0; y < cd.rank_z; ++y)
            for (int w = 0; w < cd.rank_z; ++w) {
                long long m = cd.induction(a, x) * cd.induction(b, y) * cd.induction(c, w);
                if (m == 0) continue;
                // 1 inside X (x) Y (x) W  <=>  W* inside X (x) Y.
                total += m * md.N(x, y, md.dual(w));
            }
    return total;
}

} // namespace

TEST_SUITE("state_spaces") {

TEST_CASE("surface fixtures and their topology")
{
    DecoratedSurface s = surface("three_holed_sphere");
    CHECK(s.genus() == 0);
    CHECK(s.boundary_components() == 3);
    CHECK(s.connected_components() == 1);
    CHECK(s.marked_point_count() == 3);
    DecoratedSurface sq = surface("three_holed_sphere_square");
    CHECK(sq.genus() == 0);
    CHECK(sq.boundary_components() == 3);
    DecoratedSurface ann = surface("annulus");
    CHECK(ann.genus() == 0);
    CHECK(ann.boundary_components() == 2);
    DecoratedSurface disk = surface("disk");
    CHECK(disk.boundary_components() == 1);
    CHECK(disk.euler_characteristic() == 1);
}

TEST_CASE("malformed surfaces")
{
    CHECK_THROWS_AS(parse_surface(R"({"polygons": [[{"arc": []}, {"green": "a"}]], "pairings": []})"), ValidationError);
    CHECK_THROWS_AS(parse_surface(R"({"polygons": [[{"arc": []}, {"green": "a"}, {"arc": []}, {"green": "a"}]],
                                     "pairings": [["a", "a"]]})"),
                    ValidationError);
    CHECK_THROWS_AS(parse_surface(R"({"polygons": [[{"arc": []}, {"green": "a"}, {"arc": []}, {"green": "b"},
                                                    {"arc": []}, {"green": "c"}]],
                                     "pairings": [["a", "b"], ["a", "c"]]})"),
                    ValidationError);
    CHECK_THROWS_WITH_AS(parse_surface(R"({"polygons": [[{"arc": []}, {"green": "a"}, {"arc": []}, {"green": "b"}]],
                                          "pairings": [["a", "b", "preserving"]]})"),
                         doctest::Contains("orientation"), ValidationError);
    CHECK_THROWS_AS(parse_surface(R"({"polygons": [[{"arc": [[1, "*"]]}]], "pairings": []})"), ParseError);
}

TEST_CASE("trivial ring: every surface without marked points is one-dimensional")
{
    FusionRing r = ring("trivial");
    for (const auto& name : {"annulus", "disk", "three_holed_sphere", "three_holed_sphere_square"}) {
        DecoratedSurface s = surface(name);
        s = s.with_marked_labels(std::vector<int>(static_cast<size_t>(s.marked_point_count()), 0));
        CHECK(dim_state_space(r, s) == 1);
    }
}

TEST_CASE("disk with three marked points counts fusion channels")
{
    DecoratedSurface disk = surface("disk");
    for (const auto& name : kRings) {
        FusionRing r = ring(name);
        for (int a = 0; a < r.rank(); ++a)
            for (int b = 0; b < r.rank(); ++b)
                for (int c = 0; c < r.rank(); ++c) {
                    // Points (a+, b+, c-): Hom(1, a b c*) = N_ab^c.
                    CHECK(dim_state_space(r, disk.with_marked_labels({a, b, c})) == r.N(a, b, c));
                }
    }
}

TEST_CASE("annulus dimension is the rank")
{
    for (const auto& name : kRings) CHECK(dim_state_space(ring(name), surface("annulus")) == ring(name).rank());
}

TEST_CASE("three-holed sphere: two decompositions agree")
{
    DecoratedSurface tri = surface("three_holed_sphere");
    DecoratedSurface sq = surface("three_holed_sphere_square");
    for (const auto& name : kRings) {
        FusionRing r = ring(name);
        for (int a = 0; a < r.rank(); ++a)
            for (int b = 0; b < r.rank(); ++b)
                for (int c = 0; c < r.rank(); ++c) {
                    INFO(name << " " << a << b << c);
                    CHECK(dim_state_space(r, tri.with_marked_labels({a, b, c})) ==
                          dim_state_space(r, sq.with_marked_labels({a, b, c})));
                }
    }
}

TEST_CASE("three-holed sphere equals the center hom-space of induced objects")
{
    DecoratedSurface tri = surface("three_holed_sphere");
    for (const auto& name : {"vec_z2", "vec_z3", "fib", "ising"}) {
        Center c = center(name);
        const FusionRing& r = c.fs.ring();
        for (int a = 0; a < r.rank(); ++a)
            for (int b = 0; b < r.rank(); ++b)
                for (int cc = 0; cc < r.rank(); ++cc) {
                    INFO(name << " " << a << b << cc);
                    CHECK(dim_state_space(r, tri.with_marked_labels({a, b, cc})) == center_hom(c.cd, a, b, cc));
                }
    }
    // Fibonacci (tau, tau, tau): the faithful polygon count.
    CHECK(dim_state_space(ring("fib"), tri.with_marked_labels({1, 1, 1})) == 15);
}

TEST_CASE("basis enumeration sums to the dimension")
{
    FusionRing r = ring("ising");
    DecoratedSurface s = surface("three_holed_sphere").with_marked_labels({2, 2, 1});
    long long total = 0;
    for (const auto& [coloring, n] : state_space_basis_counts(r, s)) {
        CHECK(n > 0);
        CHECK(coloring.size() == s.pairings().size());
        total += n;
    }
    CHECK(total == dim_state_space(r, s));
    CHECK_THROWS_AS(dim_state_space(ring("rep_s3"), surface("three_holed_sphere_square"), 2), CapExceeded);
}

TEST_CASE("closed surfaces: pants count equals the Verlinde formula")
{
    std::vector<ModularData> mds;
    for (const auto& name : kModular) mds.push_back(modular(name));
    for (const auto& name : {"fib", "ising", "toric_code"}) mds.push_back(center_from_square(modular(name)));
    for (const auto& md : mds) {
        CHECK(dim_closed_surface(md, 0) == 1);
        CHECK(dim_closed_surface(md, 1) == md.rank());
        for (int g = 0; g <= 3; ++g) CHECK(dim_closed_surface(md, g) == std::llround(verlinde_dimension(md, g)));
    }
    CHECK(dim_closed_surface(modular("toric_code"), 2) == 16);
    CHECK(dim_closed_surface(center("fib").cd.md(), 2) == 25);
}

}
