#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "landau/coefficients.hpp"
#include "landau/eig3.hpp"
#include "landau/kernel.hpp"
#include "oracles.hpp"

using namespace landau;

namespace {

DistributionField two_bump(const VelocityGrid& g) {
    DistributionField f = make_compact_bump(g, {2, 0, 0}, 2.0, 1.0, 3);
    const DistributionField other = make_compact_bump(g, {-2, 0, 0}, 2.0, 0.6, 3);
    for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] += other.values[i];
    return f;
}

double max_rel_dev(const MatrixField& a, const MatrixField& b, const VectorField& va,
                   const VectorField& vb) {
    double scale = 0.0, dev = 0.0;
    for (int c = 0; c < 6; ++c)
        for (std::size_t i = 0; i < a.comp[c].size(); ++i) {
            scale = std::max(scale, std::abs(a.comp[c][i]));
            dev = std::max(dev, std::abs(a.comp[c][i] - b.comp[c][i]));
        }
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < va.comp[c].size(); ++i) {
            scale = std::max(scale, std::abs(va.comp[c][i]));
            dev = std::max(dev, std::abs(va.comp[c][i] - vb.comp[c][i]));
        }
    return dev / scale;
}

}  // namespace

TEST_CASE("convolution with a point mass reduces to the kernel") {
    const VelocityGrid g(17, 8.0);
    const double h = g.spacing();
    DistributionField f(g);
    const int c = (g.n - 1) / 2;
    f(c, c, c) = 1.0 / (h * h * h);  // discrete delta of unit mass

    const MatrixField abar = convolve_direct_a(f);
    const VectorField bbar = convolve_direct_b(f);
    for (int iz = 0; iz < g.n; iz += 3)
        for (int iy = 0; iy < g.n; iy += 3)
            for (int ix = 0; ix < g.n; ix += 3) {
                if (ix == c && iy == c && iz == c) continue;
                const Vec3 d = g.node(ix, iy, iz);
                const SymMat3 ak = a_kernel(d);
                const Vec3 bk = b_kernel(d);
                const std::size_t idx = g.index(ix, iy, iz);
                for (int comp = 0; comp < 6; ++comp)
                    CHECK(abar.comp[comp][idx] == doctest::Approx(ak.m[comp]).epsilon(1e-13));
                CHECK(bbar.comp[0][idx] == doctest::Approx(bk.x).epsilon(1e-13));
                CHECK(bbar.comp[2][idx] == doctest::Approx(bk.z).epsilon(1e-13));
            }

    // singular cell: isotropic analytic replacement
    const std::size_t center = g.index(c, c, c);
    const double self = singular_cell_diagonal(h) / (h * h * h);
    CHECK(abar.comp[0][center] == doctest::Approx(self));
    CHECK(abar.comp[3][center] == 0.0);
    CHECK(bbar.comp[0][center] == 0.0);
}

TEST_CASE("radial field gives an isotropic coefficient at the origin") {
    // abar(0) = lambda I with lambda = (2/3) integral f(z)/|z| dz
    const double lambda =
        2.0 / 3.0 *
        oracles::gauss_legendre(
            [](double r) {
                return 4.0 * std::numbers::pi * r * std::exp(-0.5 * r * r) /
                       std::pow(2.0 * std::numbers::pi, 1.5);
            },
            0.0, 8.0, 200);
    CHECK(lambda == doctest::Approx(2.0 / 3.0 * std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-10));

    double rel[2];
    int k = 0;
    for (int n : {17, 33}) {
        const VelocityGrid g(n, 8.0);
        const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
        const MatrixField abar = convolve_fast_a(f);
        const std::size_t c = g.index((n - 1) / 2, (n - 1) / 2, (n - 1) / 2);
        // isotropy is exact by grid symmetry
        CHECK(abar.comp[0][c] == doctest::Approx(abar.comp[1][c]).epsilon(1e-12));
        CHECK(abar.comp[0][c] == doctest::Approx(abar.comp[2][c]).epsilon(1e-12));
        CHECK(std::abs(abar.comp[3][c]) < 1e-14);
        CHECK(std::abs(abar.comp[4][c]) < 1e-14);
        rel[k++] = std::abs(abar.comp[0][c] - lambda) / lambda;
    }
    CHECK(rel[1] < 0.02);          // measured 7.7e-3 at n=33
    CHECK(rel[1] < rel[0] / 2.0);  // measured contraction factor 2.9
}

TEST_CASE("zero field gives zero coefficients") {
    const VelocityGrid g(17, 8.0);
    const DistributionField f(g);
    const CoefficientFields direct = assemble_coefficients(f, ConvolutionPath::direct);
    const CoefficientFields fast = assemble_coefficients(f, ConvolutionPath::fast);
    for (int c = 0; c < 6; ++c)
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(direct.abar.comp[c][i] == 0.0);
            CHECK(std::abs(fast.abar.comp[c][i]) < 1e-14);
        }
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < g.size(); ++i) {
            CHECK(direct.bbar.comp[c][i] == 0.0);
            CHECK(std::abs(fast.bbar.comp[c][i]) < 1e-14);
        }
}

TEST_CASE("fast path reproduces the direct path") {
    const VelocityGrid g(17, 8.0);
    ConvolutionWorkspace ws(g);

    SUBCASE("Maxwellian within 1e-6") {
        const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
        const double dev = max_rel_dev(convolve_direct_a(f), ws.convolve_a(f), convolve_direct_b(f),
                                       ws.convolve_b(f));
        CHECK(dev < 1e-6);  // measured at rounding level, ~7e-15
    }
    SUBCASE("two-bump within 1e-6") {
        const DistributionField f = two_bump(g);
        const double dev = max_rel_dev(convolve_direct_a(f), ws.convolve_a(f), convolve_direct_b(f),
                                       ws.convolve_b(f));
        CHECK(dev < 1e-6);
    }
    SUBCASE("point mass to rounding") {
        DistributionField f(g);
        f(3, 11, 8) = std::pow(g.spacing(), -3);
        const double dev = max_rel_dev(convolve_direct_a(f), ws.convolve_a(f), convolve_direct_b(f),
                                       ws.convolve_b(f));
        CHECK(dev < 1e-12);
    }
}

TEST_CASE("coefficients are linear in f") {
    const VelocityGrid g(17, 8.0);
    ConvolutionWorkspace ws(g);
    const DistributionField f = make_maxwellian(g, {1.0, 1.0, {1, 0, 0}});
    const DistributionField gbump = make_compact_bump(g, {-1, 0, 0}, 1.5, 0.8, 2);
    DistributionField sum(g);
    for (std::size_t i = 0; i < g.size(); ++i) sum.values[i] = f.values[i] + gbump.values[i];

    const MatrixField af = ws.convolve_a(f);
    const MatrixField ag = ws.convolve_a(gbump);
    const MatrixField asum = ws.convolve_a(sum);
    double scale = 0.0;
    for (int c = 0; c < 6; ++c)
        for (std::size_t i = 0; i < g.size(); ++i) scale = std::max(scale, std::abs(asum.comp[c][i]));
    for (int c = 0; c < 6; ++c)
        for (std::size_t i = 0; i < g.size(); ++i)
            CHECK(std::abs(asum.comp[c][i] - af.comp[c][i] - ag.comp[c][i]) <= 1e-12 * scale);
}

TEST_CASE("coefficients are translation-equivariant") {
    const VelocityGrid g(17, 8.0);
    const DistributionField f = make_compact_bump(g, {0, 0, 0}, 2.0, 1.0, 3);
    DistributionField shifted(g);
    for (int iz = 0; iz < g.n; ++iz)
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 1; ix < g.n; ++ix) shifted(ix, iy, iz) = f(ix - 1, iy, iz);

    for (ConvolutionPath path : {ConvolutionPath::direct, ConvolutionPath::fast}) {
        const CoefficientFields cf = assemble_coefficients(f, path);
        const CoefficientFields cs = assemble_coefficients(shifted, path);
        double scale = 0.0;
        for (int c = 0; c < 6; ++c)
            for (std::size_t i = 0; i < g.size(); ++i) scale = std::max(scale, std::abs(cf.abar.comp[c][i]));
        // interior nodes; both fields are supported away from the faces, so
        // shifting f by one node shifts abar by one node exactly
        for (int iz = 4; iz < g.n - 4; ++iz)
            for (int iy = 4; iy < g.n - 4; ++iy)
                for (int ix = 5; ix < g.n - 4; ++ix)
                    for (int c = 0; c < 6; ++c)
                        CHECK(std::abs(cs.abar.comp[c][g.index(ix, iy, iz)] -
                                       cf.abar.comp[c][g.index(ix - 1, iy, iz)]) <= 1e-12 * scale);
    }
}

TEST_CASE("abar is positive semidefinite for nonnegative f") {
    const VelocityGrid g(17, 8.0);
    const DistributionField f = two_bump(g);
    const MatrixField abar = convolve_fast_a(f);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto w = sym3_eigenvalues(abar.at(i));
        CHECK(w[0] >= -1e-12);
    }
}

TEST_CASE("divergence identity residual contracts under refinement") {
    double maxw[2], bump[2];
    int k = 0;
    for (int n : {17, 33}) {
        const VelocityGrid g(n, 8.0);
        ConvolutionWorkspace ws(g);
        const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
        maxw[k] = divergence_identity_residual(f, ws.assemble(f));
        const DistributionField tb = two_bump(g);
        bump[k] = divergence_identity_residual(tb, ws.assemble(tb));
        ++k;
    }
    CHECK(maxw[1] < 0.1);             // measured 0.081 at n=33
    CHECK(maxw[1] <= maxw[0] / 1.8);  // measured factor 3.4
    CHECK(bump[1] <= bump[0] / 1.8);  // measured factor 2.9
    CHECK(maxw[0] < 1.0);

    // zero field convention
    const VelocityGrid g(17, 8.0);
    const DistributionField zero(g);
    CHECK(divergence_identity_residual(zero, assemble_coefficients(zero, ConvolutionPath::fast)) == 0.0);
}

TEST_CASE("ellipticity bounds on the Maxwellian") {
    const VelocityGrid g(33, 8.0);
    const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
    ConvolutionWorkspace ws(g);
    const CoefficientFields coeff = ws.assemble(f);
    const Ball ball{{0, 0, 0}, 3.0};
    const EllipticityReport rep = ellipticity_bounds(coeff, ball, 0.0);

    CHECK(rep.c_min > 0.0);
    CHECK(rep.c_min <= rep.C_max);

    // C_max <= A(q) S0 + 2 M0 with the Hoelder constant of the kernel tail:
    // A(q) = 2 (4 pi R^(3-q') / (3-q'))^(1/q'), q' = q/(q-1)
    const double q = 4.0;
    const double qp = q / (q - 1.0);
    const double A =
        2.0 * std::pow(4.0 * std::numbers::pi * std::pow(ball.radius, 3.0 - qp) / (3.0 - qp), 1.0 / qp);
    const double s0 = lq_norm_on_ball(f, ball, q);
    const double m0 = integrate(f);
    CHECK(rep.C_max <= A * s0 + 2.0 * m0);

    CHECK_THROWS_AS(ellipticity_bounds(coeff, Ball{{0.25, 0.25, 0.25}, 1e-3}, 0.0), std::invalid_argument);
}

TEST_CASE("point-mass coefficients have the projection spectrum") {
    const VelocityGrid g(17, 8.0);
    DistributionField f(g);
    const int c = (g.n - 1) / 2;
    f(c, c, c) = std::pow(g.spacing(), -3);  // unit point mass at the origin
    const CoefficientFields coeff = assemble_coefficients(f, ConvolutionPath::direct);

    // at node v = (2,0,0): eigenvalues {0, 1/|v|, 1/|v|}
    const Vec3 v{2, 0, 0};
    const auto w = sym3_eigenvalues(coeff.abar.at(g.index(c + 2, c, c)));
    CHECK(w[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w[1] == doctest::Approx(1.0 / v.norm()).epsilon(1e-12));
    CHECK(w[2] == doctest::Approx(1.0 / v.norm()).epsilon(1e-12));

    const EllipticityReport rep =
        ellipticity_bounds(coeff, Ball{{3, 0, 0}, 1.0}, 0.0);  // ball excluding the origin
    CHECK(rep.c_min >= 0.0);
    CHECK(rep.C_max == doctest::Approx(0.5).epsilon(0.01));  // 1/|v| at the closest node v=(2,0,0)
}

TEST_CASE("fast path runtime scaling against the direct path") {
    // crossover documentation, no correctness claim
    for (int n : {9, 13, 17}) {
        const VelocityGrid g(n, 8.0);
        const DistributionField f = make_maxwellian(g, {1.0, 1.0, {}});
        const auto t0 = std::chrono::steady_clock::now();
        (void)convolve_direct_a(f);
        const auto t1 = std::chrono::steady_clock::now();
        ConvolutionWorkspace ws(g);
        (void)ws.convolve_a(f);
        const auto t2 = std::chrono::steady_clock::now();
        const double direct_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double fast_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
        MESSAGE("n=", n, " direct ", direct_ms, " ms, fast (incl. setup) ", fast_ms, " ms");
    }
    CHECK(true);
}
