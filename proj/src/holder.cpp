#include "landau/holder.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "landau/operators.hpp"

namespace landau {

namespace {

struct Window {
    const VelocityGrid* grid{nullptr};
    std::vector<std::size_t> snaps;            // indices into the span
    std::vector<std::size_t> nodes;            // linear node indices in the ball
    std::vector<std::array<int, 3>> coords;    // per ball node
    std::vector<double> d_space;               // R - |x - c| per ball node
};

Window stage(std::span<const DistributionField> snapshots, const Cylinder& cyl) {
    if (snapshots.empty()) throw std::invalid_argument("holder: no snapshots given");
    Window w;
    w.grid = &snapshots[0].grid;
    const double eps = 1e-12 * (1.0 + std::abs(cyl.t_end));
    for (std::size_t k = 0; k < snapshots.size(); ++k) {
        if (snapshots[k].grid != *w.grid) throw std::invalid_argument("holder: snapshots on mixed grids");
        const double t = snapshots[k].time;
        if (t >= cyl.t_start - eps && t <= cyl.t_end + eps) w.snaps.push_back(k);
    }
    const auto& g = *w.grid;
    const double r2 = cyl.radius * cyl.radius;
    for (int iz = 0; iz < g.n; ++iz)
        for (int iy = 0; iy < g.n; ++iy)
            for (int ix = 0; ix < g.n; ++ix) {
                const Vec3 d = g.node(ix, iy, iz) - cyl.center;
                if (d.norm2() <= r2) {
                    w.nodes.push_back(g.index(ix, iy, iz));
                    w.coords.push_back({ix, iy, iz});
                    w.d_space.push_back(cyl.radius - d.norm());
                }
            }
    if (w.snaps.empty() || w.nodes.empty())
        throw std::invalid_argument("holder: cylinder covers no samples");
    return w;
}

double check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0)) throw std::invalid_argument("holder: alpha must lie in (0,1)");
    return alpha;
}

}  // namespace

PairQuotients parabolic_quotients(std::span<const DistributionField> snapshots, const Cylinder& cyl,
                                  double alpha, const SampleConfig& sc) {
    check_alpha(alpha);
    const Window w = stage(snapshots, cyl);
    const auto& g = *w.grid;
    const std::size_t M = w.nodes.size();
    const std::size_t K = w.snaps.size();

    PairQuotients out;

    auto space_pair = [&](std::size_t k, std::size_t a, std::size_t b) {
        if (a == b) return;
        const auto& f = snapshots[w.snaps[k]];
        const Vec3 xa = g.node(w.coords[a][0], w.coords[a][1], w.coords[a][2]);
        const Vec3 xb = g.node(w.coords[b][0], w.coords[b][1], w.coords[b][2]);
        const double dist = (xa - xb).norm();
        const double q = std::abs(f.values[w.nodes[a]] - f.values[w.nodes[b]]) / std::pow(dist, alpha);
        out.space = std::max(out.space, q);
        ++out.pairs;
    };
    auto time_pair = [&](std::size_t a, std::size_t k, std::size_t l) {
        const double dt = std::abs(snapshots[w.snaps[l]].time - snapshots[w.snaps[k]].time);
        if (dt == 0.0) return;
        const double q = std::abs(snapshots[w.snaps[l]].values[w.nodes[a]] -
                                  snapshots[w.snaps[k]].values[w.nodes[a]]) /
                         std::pow(dt, 0.5 * alpha);
        out.time = std::max(out.time, q);
        ++out.pairs;
    };

    if (sc.exhaustive) {
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t a = 0; a < M; ++a)
                for (std::size_t b = a + 1; b < M; ++b) space_pair(k, a, b);
        for (std::size_t a = 0; a < M; ++a)
            for (std::size_t k = 0; k < K; ++k)
                for (std::size_t l = k + 1; l < K; ++l) time_pair(a, k, l);
        return out;
    }

    // all nearest-neighbor pairs
    const double r2 = cyl.radius * cyl.radius;
    std::vector<std::size_t> node_of(g.size(), static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < M; ++a) node_of[w.nodes[a]] = a;
    for (std::size_t a = 0; a < M; ++a)
        for (int d = 0; d < 3; ++d) {
            std::array<int, 3> c = w.coords[a];
            c[d] += 1;
            if (c[d] >= g.n) continue;
            if ((g.node(c[0], c[1], c[2]) - cyl.center).norm2() > r2) continue;
            const std::size_t b = node_of[g.index(c[0], c[1], c[2])];
            for (std::size_t k = 0; k < K; ++k) space_pair(k, a, b);
        }
    for (std::size_t a = 0; a < M; ++a)
        for (std::size_t k = 0; k + 1 < K; ++k) time_pair(a, k, k + 1);

    // seeded random pairs
    std::mt19937_64 rng(sc.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t draw = 0; draw < sc.budget; ++draw) {
        const std::size_t k = rng() % K;
        const std::size_t a = rng() % M;
        const std::size_t b = rng() % M;
        space_pair(k, a, b);
    }
    if (K >= 2) {
        std::mt19937_64 rng_t(sc.seed ^ 0xc2b2ae3d27d4eb4fULL);
        for (std::size_t draw = 0; draw < sc.budget; ++draw) {
            const std::size_t a = rng_t() % M;
            const std::size_t k = rng_t() % K;
            const std::size_t l = rng_t() % K;
            if (k == l) continue;
            time_pair(a, std::min(k, l), std::max(k, l));
        }
    }
    return out;
}

double weighted_star_norm(std::span<const DistributionField> snapshots, const Cylinder& cyl, double alpha,
                          int m, const SampleConfig& sc) {
    check_alpha(alpha);
    if (m < 0 || m > 2) throw std::invalid_argument("weighted_star_norm: m must be 0, 1 or 2");
    const Window w = stage(snapshots, cyl);
    const auto& g = *w.grid;
    const std::size_t M = w.nodes.size();
    const std::size_t K = w.snaps.size();

    // parabolic-boundary distance: lateral wall or bottom lid, whichever is
    // closer in the max{|dx|, 8 sqrt(dt)} metric
    std::vector<double> d_time(K);
    for (std::size_t k = 0; k < K; ++k) {
        const double dt = std::max(0.0, snapshots[w.snaps[k]].time - cyl.t_start);
        d_time[k] = 8.0 * std::sqrt(dt);
    }
    auto weight = [&](std::size_t k, std::size_t a) {
        return sc.unit_weights ? 1.0 : std::min(w.d_space[a], d_time[k]);
    };

    double sup_term = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
        const auto& f = snapshots[w.snaps[k]];
        for (std::size_t a = 0; a < M; ++a)
            sup_term = std::max(sup_term, std::pow(weight(k, a), m) * std::abs(f.values[w.nodes[a]]));
    }

    const double r2 = cyl.radius * cyl.radius;
    std::vector<std::size_t> node_of(g.size(), static_cast<std::size_t>(-1));
    for (std::size_t a = 0; a < M; ++a) node_of[w.nodes[a]] = a;

    double quot_term = 0.0;
    // same-time pair of nodes differing along one axis
    auto axis_pair = [&](std::size_t k, std::size_t a, int axis, int offset) {
        std::array<int, 3> c = w.coords[a];
        c[axis] += offset;
        if (c[axis] < 0 || c[axis] >= g.n) return;
        if ((g.node(c[0], c[1], c[2]) - cyl.center).norm2() > r2) return;
        const std::size_t b = node_of[g.index(c[0], c[1], c[2])];
        const auto& f = snapshots[w.snaps[k]];
        const double dist = std::abs(offset) * g.spacing();
        const double dpq = std::min(weight(k, a), weight(k, b));
        const double q = std::pow(dpq, m + alpha) *
                         std::abs(f.values[w.nodes[a]] - f.values[w.nodes[b]]) / std::pow(dist, alpha);
        quot_term = std::max(quot_term, q);
    };

    const int max_offset = std::max(1, static_cast<int>(std::floor(2.0 * cyl.radius / g.spacing())));
    if (sc.exhaustive) {
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t a = 0; a < M; ++a)
                for (int axis = 0; axis < 3; ++axis)
                    for (int off = 1; off <= max_offset; ++off) axis_pair(k, a, axis, off);
    } else {
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t a = 0; a < M; ++a)
                for (int axis = 0; axis < 3; ++axis) axis_pair(k, a, axis, 1);
        std::mt19937_64 rng(sc.seed ^ (0xa0761d6478bd642fULL + static_cast<std::uint64_t>(m)));
        for (std::size_t draw = 0; draw < sc.budget; ++draw) {
            const std::size_t k = rng() % K;
            const std::size_t a = rng() % M;
            const int axis = static_cast<int>(rng() % 3);
            const int off = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_offset));
            axis_pair(k, a, axis, (rng() & 1) ? off : -off);
        }
    }
    return sup_term + quot_term;
}

HolderReport parabolic_holder(std::span<const DistributionField> snapshots, const Cylinder& cyl,
                              double alpha, const SampleConfig& sc) {
    check_alpha(alpha);
    HolderReport rep;
    rep.alpha = alpha;
    rep.cylinder = cyl;
    const PairQuotients pq = parabolic_quotients(snapshots, cyl, alpha, sc);
    rep.space_quotient = pq.space;
    rep.time_quotient = pq.time;
    rep.pair_sample_size = pq.pairs;
    for (int m = 0; m < 3; ++m) rep.weighted_star_norms[m] = weighted_star_norm(snapshots, cyl, alpha, m, sc);
    return rep;
}

HolderReport holder_1plus(std::span<const DistributionField> snapshots, const Cylinder& cyl, double alpha,
                          const SampleConfig& sc) {
    HolderReport rep = parabolic_holder(snapshots, cyl, alpha, sc);
    for (int d = 0; d < 3; ++d) {
        std::vector<DistributionField> deriv;
        deriv.reserve(snapshots.size());
        for (const auto& f : snapshots) {
            VectorField grad = gradient(f);
            DistributionField comp(f.grid, f.time);
            comp.values = std::move(grad.comp[d]);
            deriv.push_back(std::move(comp));
        }
        const PairQuotients pq = parabolic_quotients(deriv, cyl, alpha, sc);
        rep.derivative_space_quotients[d] = pq.space;
        rep.derivative_time_quotients[d] = pq.time;
        rep.pair_sample_size += pq.pairs;
    }
    return rep;
}

RegularityVerdict regularity_verdict(std::span<const DistributionField> snapshots, const Cylinder& cyl,
                                     double q, double alpha, const SampleConfig& sc) {
    if (!(q > 3.0)) throw std::invalid_argument("regularity_verdict: requires q > 3");
    check_alpha(alpha);

    RegularityVerdict v;
    v.q = q;
    v.alpha = alpha;
    v.monitored = cyl;
    // inner cylinder compactly inside: top three quarters in time, 3/4 radius
    v.inner = Cylinder(cyl.t_start + 0.25 * cyl.duration(), cyl.t_end, cyl.center, 0.75 * cyl.radius);

    const Window w = stage(snapshots, cyl);
    v.s0 = 0.0;
    v.hypothesis_held = true;
    for (auto k : w.snaps) {
        const double norm = lq_norm_on_ball(snapshots[k], cyl.ball(), q);
        if (!std::isfinite(norm)) v.hypothesis_held = false;
        v.s0 = std::max(v.s0, norm);
    }

    v.norm_f = weighted_star_norm(snapshots, v.inner, alpha, 0, sc);

    for (int d = 0; d < 3; ++d) {
        std::vector<DistributionField> deriv;
        deriv.reserve(snapshots.size());
        for (const auto& f : snapshots) {
            VectorField grad = gradient(f);
            DistributionField comp(f.grid, f.time);
            comp.values = std::move(grad.comp[d]);
            deriv.push_back(std::move(comp));
        }
        v.norm_d1[d] = weighted_star_norm(deriv, v.inner, alpha, 1, sc);
    }

    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            std::vector<DistributionField> deriv;
            deriv.reserve(snapshots.size());
            for (const auto& f : snapshots) deriv.push_back(second_derivative(f, a, b));
            v.norm_d2[SymMat3::index(a, b)] = weighted_star_norm(deriv, v.inner, alpha, 2, sc);
        }

    if (snapshots.size() >= 3) {
        std::vector<DistributionField> ddt;
        for (std::size_t k = 1; k + 1 < snapshots.size(); ++k) {
            const double span = snapshots[k + 1].time - snapshots[k - 1].time;
            DistributionField d(snapshots[k].grid, snapshots[k].time);
            for (std::size_t i = 0; i < d.values.size(); ++i)
                d.values[i] = (snapshots[k + 1].values[i] - snapshots[k - 1].values[i]) / span;
            ddt.push_back(std::move(d));
        }
        v.norm_dt = weighted_star_norm(ddt, v.inner, alpha, 2, sc);
    }
    return v;
}

}  // namespace landau
