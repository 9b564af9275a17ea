#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "landau/grid.hpp"
#include "oracles.hpp"

using namespace landau;

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(VelocityGrid(7, 8.0), std::invalid_argument);
    CHECK_THROWS_AS(VelocityGrid(16, 8.0), std::invalid_argument);
    CHECK_THROWS_AS(VelocityGrid(33, -1.0), std::invalid_argument);

    const VelocityGrid g(33, 8.0);
    CHECK(g.spacing() == doctest::Approx(0.5));
    CHECK(g.coord(0) == -8.0);
    CHECK(g.coord(16) == 0.0);  // odd n keeps the origin on-grid
    CHECK(g.coord(32) == 8.0);
    for (int i = 0; i < g.n; ++i) CHECK(g.coord(i) == -8.0 + i * g.spacing());
}

TEST_CASE("trapezoid quadrature of Maxwellians") {
    const VelocityGrid g(33, 8.0);
    const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
    CHECK(integrate(f) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(integrate(f, [](const Vec3& v) { return 0.5 * v.norm2(); }) ==
          doctest::Approx(1.5).epsilon(1e-4));

    const DistributionField zero(g);
    CHECK(integrate(zero) == 0.0);
    CHECK(integrate(zero, [](const Vec3& v) { return v.norm2(); }) == 0.0);
}

TEST_CASE("quadrature of a Gaussian converges at rate >= h^2") {
    double err[3];
    int k = 0;
    for (int n : {17, 33, 65}) {
        const VelocityGrid g(n, 8.0);
        const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
        err[k++] = std::abs(integrate(f) - 1.0);
    }
    // trapezoid sums on Gaussians converge spectrally; the 1e-12 floor covers
    // accumulation roundoff at n=65
    CHECK(err[1] <= err[0] / 4.0 + 1e-12);
    CHECK(err[2] <= err[1] / 4.0 + 1e-12);
}

TEST_CASE("lq norms on balls") {
    const VelocityGrid g(33, 8.0);
    DistributionField ones(g);
    ones.values.assign(g.size(), 1.0);

    const double r = 3.0;
    const Ball ball{{0, 0, 0}, r};
    const double vol = lq_norm_on_ball(ones, ball, 1.0);
    const double exact = 4.0 / 3.0 * std::numbers::pi * r * r * r;
    CHECK(std::abs(vol - exact) <= 4.0 * std::numbers::pi * r * r * g.spacing());

    // q = infinity is the exact grid max over the ball
    DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
    const double max_norm = lq_norm_on_ball(f, ball, std::numeric_limits<double>::infinity());
    double expected = 0.0;
    for (auto idx : ball_nodes(g, ball)) expected = std::max(expected, f.values[idx]);
    CHECK(max_norm == expected);

    CHECK_THROWS_AS(lq_norm_on_ball(f, ball, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(lq_norm_on_ball(f, Ball{{7, 0, 0}, 2.0}, 2.0), std::invalid_argument);
}

TEST_CASE("L4 ball norm of a Maxwellian against Monte Carlo") {
    const VelocityGrid g(129, 4.0);
    const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
    const Ball ball{{0, 0, 0}, 1.0};
    const double norm = lq_norm_on_ball(f, ball, 4.0);

    const double norm3 = 1.0 / std::pow(2.0 * std::numbers::pi, 1.5);
    const double mc = oracles::monte_carlo_ball(
        [&](const Vec3& v) { return std::pow(norm3 * std::exp(-0.5 * v.norm2()), 4.0); }, ball, 1000000,
        99991);
    CHECK(norm == doctest::Approx(std::pow(mc, 0.25)).epsilon(0.01));
}

TEST_CASE("initial data constructors") {
    const VelocityGrid g(33, 8.0);
    const DistributionField f =
        make_maxwellian_mixture(g, {{0.5, 1.0, {1, 0, 0}}, {0.5, 1.0, {-1, 0, 0}}});
    CHECK(integrate(f) == doctest::Approx(1.0).epsilon(1e-6));

    const DistributionField bump = make_compact_bump(g, {0, 0, 0}, 2.0, 1.5, 2);
    CHECK(bump.values[g.index(16, 16, 16)] == doctest::Approx(1.5));
    CHECK(bump.values[g.index(0, 0, 0)] == 0.0);
    for (double v : bump.values) CHECK(v >= 0.0);

    CHECK_THROWS_AS(make_compact_bump(g, {0, 0, 0}, -1.0, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(make_maxwellian(g, {1.0, -1.0, {}}), std::invalid_argument);
}
