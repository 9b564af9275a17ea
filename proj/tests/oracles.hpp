// Test-only oracles, independent of the implementation paths they check:
// finite differences of the closed-form kernel, 1D Gauss-Legendre radial
// quadrature, Monte Carlo ball integration, and exhaustive pair suprema.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "landau/grid.hpp"
#include "landau/kernel.hpp"

namespace oracles {

using landau::DistributionField;
using landau::Vec3;

// central first difference of a scalar function of Vec3
inline double fd1(const std::function<double(const Vec3&)>& f, Vec3 z, int k, double step) {
    Vec3 zp = z, zm = z;
    zp[k] += step;
    zm[k] -= step;
    return (f(zp) - f(zm)) / (2.0 * step);
}

// central second difference
inline double fd2(const std::function<double(const Vec3&)>& f, Vec3 z, int k, int l, double step) {
    if (k == l) {
        Vec3 zp = z, zm = z;
        zp[k] += step;
        zm[k] -= step;
        return (f(zp) - 2.0 * f(z) + f(zm)) / (step * step);
    }
    Vec3 zpp = z, zpm = z, zmp = z, zmm = z;
    zpp[k] += step; zpp[l] += step;
    zpm[k] += step; zpm[l] -= step;
    zmp[k] -= step; zmp[l] += step;
    zmm[k] -= step; zmm[l] -= step;
    return (f(zpp) - f(zpm) - f(zmp) + f(zmm)) / (4.0 * step * step);
}

// Gauss-Legendre quadrature of g on [a, b]
inline double gauss_legendre(const std::function<double(double)>& g, double a, double b, int nodes = 200) {
    double sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        double x = std::cos(M_PI * (k + 0.75) / (nodes + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= nodes; ++j) {
                const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = nodes * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const double t = 0.5 * (b - a) * x + 0.5 * (a + b);
        sum += w * g(t);
    }
    return sum * 0.5 * (b - a);
}

// Monte Carlo integral of g over a ball, seeded
inline double monte_carlo_ball(const std::function<double(const Vec3&)>& g, const landau::Ball& ball,
                               std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    const double volume = 4.0 / 3.0 * M_PI * std::pow(ball.radius, 3);
    double sum = 0.0;
    std::size_t accepted = 0;
    while (accepted < samples) {
        const Vec3 u{unit(rng), unit(rng), unit(rng)};
        if (u.norm2() > 1.0) continue;
        sum += g(ball.center + u * ball.radius);
        ++accepted;
    }
    return volume * sum / static_cast<double>(samples);
}

// Exhaustive H^{alpha,alpha/2} difference quotients over a cylinder:
// brute-force loops over every same-time node pair and every same-node
// time pair, no sampling, no shared staging with the library.
struct ExhaustiveQuotients {
    double space{0.0};
    double time{0.0};
};

inline ExhaustiveQuotients exhaustive_quotients(std::span<const DistributionField> snaps,
                                                const landau::Cylinder& cyl, double alpha) {
    ExhaustiveQuotients out;
    const auto& g = snaps[0].grid;
    std::vector<std::size_t> nodes;
    std::vector<Vec3> pos;
    for (int iz = 0; iz < g.n; ++iz)
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                const Vec3 x = g.node(ix, iy, iz);
                if ((x - cyl.center).norm2() <= cyl.radius * cyl.radius) {
                    nodes.push_back(g.index(ix, iy, iz));
                    pos.push_back(x);
                }
            }
    std::vector<std::size_t> times;
    for (std::size_t k = 0; k < snaps.size(); ++k)
        if (snaps[k].time >= cyl.t_start - 1e-12 && snaps[k].time <= cyl.t_end + 1e-12) times.push_back(k);

    for (auto k : times)
        for (std::size_t a = 0; a < nodes.size(); ++a)
            for (std::size_t b = a + 1; b < nodes.size(); ++b) {
                const double d = (pos[a] - pos[b]).norm();
                const double q =
                    std::abs(snaps[k].values[nodes[a]] - snaps[k].values[nodes[b]]) / std::pow(d, alpha);
                out.space = std::max(out.space, q);
            }
    for (std::size_t a = 0; a < nodes.size(); ++a)
        for (std::size_t i = 0; i < times.size(); ++i)
            for (std::size_t j = i + 1; j < times.size(); ++j) {
                const double dt = snaps[times[j]].time - snaps[times[i]].time;
                if (dt <= 0.0) continue;
                const double q = std::abs(snaps[times[j]].values[nodes[a]] -
                                          snaps[times[i]].values[nodes[a]]) /
                                 std::pow(dt, 0.5 * alpha);
                out.time = std::max(out.time, q);
            }
    return out;
}

// Exhaustive weighted star seminorm (axis-aligned pairs), mirroring the
// closed-form parabolic-boundary distance independently of the library.
inline double exhaustive_star_norm(std::span<const DistributionField> snaps, const landau::Cylinder& cyl,
                                   double alpha, int m) {
    const auto& g = snaps[0].grid;
    struct Pt {
        int c[3];
        std::size_t idx;
        double dsp;
    };
    std::vector<Pt> pts;
    for (int iz = 0; iz < g.n; ++iz)
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                const Vec3 x = g.node(ix, iy, iz);
                const double r = (x - cyl.center).norm();
                if (r <= cyl.radius) pts.push_back({{ix, iy, iz}, g.index(ix, iy, iz), cyl.radius - r});
            }
    double sup = 0.0, quot = 0.0;
    for (const auto& f : snaps) {
        if (f.time < cyl.t_start - 1e-12 || f.time > cyl.t_end + 1e-12) continue;
        const double dti = 8.0 * std::sqrt(std::max(0.0, f.time - cyl.t_start));
        for (const auto& p : pts) {
            const double dp = std::min(p.dsp, dti);
            sup = std::max(sup, std::pow(dp, m) * std::abs(f.values[p.idx]));
        }
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                int diff_axis = -1, diffs = 0;
                for (int d = 0; d < 3; ++d)
                    if (pts[a].c[d] != pts[b].c[d]) {
                        diff_axis = d;
                        ++diffs;
                    }
                if (diffs != 1) continue;
                const double dist = std::abs(pts[a].c[diff_axis] - pts[b].c[diff_axis]) * g.spacing();
                const double dpq = std::min(std::min(pts[a].dsp, dti), std::min(pts[b].dsp, dti));
                quot = std::max(quot, std::pow(dpq, m + alpha) *
                                          std::abs(f.values[pts[a].idx] - f.values[pts[b].idx]) /
                                          std::pow(dist, alpha));
            }
    }
    return sup + quot;
}

}  // namespace oracles
