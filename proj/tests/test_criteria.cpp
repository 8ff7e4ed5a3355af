#include <doctest.h>

#include <algorithm>

#include "test_support.hpp"
#include "tqft/criteria.hpp"
#include "tqft/error.hpp"
#include "tqft/linalg.hpp"

using namespace tt;

namespace {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// Straightforward sum of weighted Kronecker powers.
Eigen::MatrixXd naive_criterion(const FusionRing& r, const DimensionData& dd, int n)
{
    Eigen::MatrixXd sum;
    for (int j = 0; j < r.rank(); ++j) {
        Eigen::MatrixXd p = r.fusion_matrix(j);
        Eigen::MatrixXd acc = p;
        for (int k = 1; k < n; ++k) acc = kron(acc, p);
        acc *= std::pow(dd.d[j], 2.0 - n);
        sum = j == 0 ? acc : Eigen::MatrixXd(sum + acc);
    }
    return sum;
}

} // namespace

TEST_SUITE("criteria") {

TEST_CASE("trivial ring gives [1] at every order")
{
    FusionRing r = ring("trivial");
    DimensionData dd = frobenius_perron_data(r);
    for (int n = 1; n <= 5; ++n) {
        Eigen::MatrixXd m = criterion_matrix(r, dd, n);
        CHECK(m.rows() == 1);
        CHECK(m(0, 0) == doctest::Approx(1.0));
    }
    CHECK(max_criterion_order(1, 4096) >= 64);
}

TEST_CASE("Z2 at n = 2 has spectrum {0, 2}")
{
    FusionRing r = ring("vec_z2");
    Eigen::MatrixXd m = criterion_matrix(r, frobenius_perron_data(r), 2);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    Eigen::VectorXd ev = es.eigenvalues();
    CHECK(std::abs(ev(0)) < 1e-12);
    CHECK(std::abs(ev(1)) < 1e-12);
    CHECK(std::abs(ev(2) - 2.0) < 1e-12);
    CHECK(std::abs(ev(3) - 2.0) < 1e-12);
}

TEST_CASE("criterion matrix matches a naive Kronecker sum and is exactly symmetric")
{
    for (const auto& name : kRings) {
        FusionRing r = ring(name);
        DimensionData dd = frobenius_perron_data(r);
        for (int n = 1; n <= 4; ++n) {
            if (std::pow(r.rank(), n) > 512) break;
            Eigen::MatrixXd m = criterion_matrix(r, dd, n);
            INFO(name << " n=" << n);
            CHECK((m - naive_criterion(r, dd, n)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK(m == m.transpose());
        }
    }
}

TEST_CASE("fibonacci n = 3 is 8x8 and positive semidefinite")
{
    FusionRing r = ring("fib");
    Eigen::MatrixXd m = criterion_matrix(r, frobenius_perron_data(r), 3);
    CHECK(m.rows() == 8);
    CHECK(min_symmetric_eigenvalue(m) > -1e-9);
}

TEST_CASE("eigenvalue backend reports a negative minimum")
{
    Eigen::MatrixXd m = Eigen::Vector2d(1.0, -1.0).asDiagonal();
    CHECK(min_symmetric_eigenvalue(m) == doctest::Approx(-1.0));
}

TEST_CASE("positivity holds for every bundled ring up to the size cap")
{
    for (const auto& name : kRings) {
        FusionRing r = ring(name);
        int nmax = std::min(max_criterion_order(r.rank(), 4096), 12);
        auto reports = check_positivity(r, nmax);
        INFO(name);
        REQUIRE(static_cast<int>(reports.size()) == nmax);
        for (const auto& rep : reports) {
            CHECK(rep.pass);
            CHECK(rep.min_eigenvalue >= -1e-9);
            CHECK(rep.matrix_dim == static_cast<long long>(std::llround(std::pow(r.rank(), rep.n))));
            CHECK(rep.method == (rep.matrix_dim <= 512 ? "dense" : "spectral"));
        }
    }
}

TEST_CASE("spectral route agrees with the dense eigensolver")
{
    for (const auto& name : kRings) {
        FusionRing r = ring(name);
        DimensionData dd = frobenius_perron_data(r);
        std::vector<Eigen::MatrixXd> mats;
        std::vector<double> w;
        for (int j = 0; j < r.rank(); ++j) mats.push_back(r.fusion_matrix(j));
        for (int n = 1; std::pow(r.rank(), n) <= 512; ++n) {
            w.clear();
            for (int j = 0; j < r.rank(); ++j) w.push_back(std::pow(dd.d[j], 2.0 - n));
            double dense = min_symmetric_eigenvalue(criterion_matrix(r, dd, n));
            INFO(name << " n=" << n);
            CHECK(std::abs(spectral_min_eigenvalue(mats, w, n) - dense) < 1e-9);
            if (r.rank() == 1) break;
        }
    }
}

TEST_CASE("size cap is enforced")
{
    FusionRing r = ring("ising");
    CHECK_THROWS_AS(criterion_matrix(r, frobenius_perron_data(r), 9, 4096), CapExceeded);
    CHECK(max_criterion_order(3, 4096) == 7);
    CHECK(max_criterion_order(2, 4096) == 12);
}

TEST_CASE("regular module reproduces the ring verdicts")
{
    for (const auto& name : kRings) {
        FusionRing r = ring(name);
        NimRep reg = regular_nimrep(r);
        auto a = check_positivity(r, 3);
        auto b = check_module_positivity(r, reg, 3);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].pass == b[i].pass);
            CHECK(std::abs(a[i].min_eigenvalue - b[i].min_eigenvalue) < 1e-9);
        }
    }
}

TEST_CASE("trivial Z2 module: every order gives [2]")
{
    FusionRing r = ring("vec_z2");
    NimRep triv = parse_nimrep(text("nimreps", "vec_z2_trivial"), r);
    auto reps = check_module_positivity(r, triv, 3);
    REQUIRE(reps.size() == 3);
    CHECK(reps[2].matrix_dim == 1);
    CHECK(reps[2].min_eigenvalue == doctest::Approx(2.0));
    CHECK(reps[2].pass);
}

TEST_CASE("fibonacci regular module passes at n = 4")
{
    FusionRing r = ring("fib");
    auto reps = check_module_positivity(r, parse_nimrep(text("nimreps", "fib_regular"), r), 4);
    CHECK(reps.back().pass);
}

TEST_CASE("omega identity for every bundled nimrep")
{
    struct Case {
        const char* nim;
        const char* ring;
    };
    for (auto c : {Case{"fib_regular", "fib"}, Case{"vec_z2_regular", "vec_z2"}, Case{"vec_z2_trivial", "vec_z2"},
                   Case{"vec_z3_regular", "vec_z3"}, Case{"ising_regular", "ising"},
                   Case{"rep_s3_fiber", "rep_s3"}, Case{"rep_s3_regular", "rep_s3"}}) {
        FusionRing r = ring(c.ring);
        OmegaReport om = omega_rank_one(r, parse_nimrep(text("nimreps", c.nim), r));
        INFO(c.nim);
        CHECK(om.holds);
        CHECK(om.residual < 1e-9);
    }
    FusionRing t = ring("trivial");
    CHECK(omega_rank_one(t, regular_nimrep(t)).holds);
}

TEST_CASE("rational inertia and Smith form")
{
    IntMatrix m{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
    Inertia in = rational_inertia(m);
    CHECK(in.positive == 3);
    IntMatrix hyp{{0, 1}, {1, 0}};
    in = rational_inertia(hyp);
    CHECK(in.positive == 1);
    CHECK(in.negative == 1);
    IntMatrix z{{0, 0}, {0, 0}};
    CHECK(rational_inertia(z).zero == 2);
    SmithForm sf = smith_normal_form({{2, 4}, {6, 8}});
    CHECK(sf.rank == 2);
    CHECK(sf.diagonal[0] == 2);
    CHECK(sf.diagonal[1] == 4);
}

}
