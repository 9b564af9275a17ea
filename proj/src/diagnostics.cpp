#include "landau/diagnostics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "landau/operators.hpp"

namespace landau {

Moments conserved_moments(const DistributionField& f) {
    Moments m;
    m.mass = integrate(f);
    m.momentum = {integrate(f, [](const Vec3& v) { return v.x; }),
                  integrate(f, [](const Vec3& v) { return v.y; }),
                  integrate(f, [](const Vec3& v) { return v.z; })};
    m.energy = integrate(f, [](const Vec3& v) { return 0.5 * v.norm2(); });
    return m;
}

namespace {

// trapezoid quadrature of g(f, node) over the cube
template <typename G>
double quadrature(const DistributionField& f, G&& g) {
    const auto& grid = f.grid;
    const double h3 = std::pow(grid.spacing(), 3);
    double sum = 0.0;
    for (int iz = 0; iz < grid.n; ++iz)
        for (int iy = 0; iy < grid.n; ++iy) {
            const double wzy = grid.axis_weight(iz) * grid.axis_weight(iy);
            for (int ix = 0; ix < grid.n; ++ix)
                sum += g(f.values[grid.index(ix, iy, iz)], ix, iy, iz) * wzy * grid.axis_weight(ix);
        }
    return sum * h3;
}

}  // namespace

double entropy(const DistributionField& f) {
    // 0 log 0 = 0; nonpositive nodes are excluded
    return quadrature(f, [](double v, int, int, int) { return v > 0.0 ? v * std::log(v) : 0.0; });
}

double weighted_fisher(const DistributionField& f) {
    DistributionField root(f.grid, f.time);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        root.values[i] = std::sqrt(std::max(f.values[i], 0.0));
    const VectorField g = gradient(root);
    return quadrature(f, [&](double, int ix, int iy, int iz) {
        const std::size_t idx = f.grid.index(ix, iy, iz);
        const double g2 = g.comp[0][idx] * g.comp[0][idx] + g.comp[1][idx] * g.comp[1][idx] +
                          g.comp[2][idx] * g.comp[2][idx];
        const double w = 1.0 + f.grid.node(ix, iy, iz).norm2();
        return g2 / (w * std::sqrt(w));
    });
}

double negative_part_mass(const DistributionField& f) {
    return quadrature(f, [](double v, int, int, int) { return v < 0.0 ? -v : 0.0; });
}

double boundary_shell_mass(const DistributionField& f) {
    const int n = f.grid.n;
    return quadrature(f, [&](double v, int ix, int iy, int iz) {
        const bool shell = ix == 0 || iy == 0 || iz == 0 || ix == n - 1 || iy == n - 1 || iz == n - 1;
        return shell ? v : 0.0;
    });
}

double moment_time_holder(std::span<const DistributionField> snapshots,
                          const std::function<double(const Vec3&)>& phi) {
    if (snapshots.size() < 2)
        throw std::invalid_argument("moment_time_holder: need at least two snapshots");
    std::vector<double> moments(snapshots.size());
    for (std::size_t k = 0; k < snapshots.size(); ++k) moments[k] = integrate(snapshots[k], phi);

    double worst = 0.0;
    for (std::size_t k = 0; k < snapshots.size(); ++k)
        for (std::size_t l = k + 1; l < snapshots.size(); ++l) {
            const double dt = std::abs(snapshots[l].time - snapshots[k].time);
            if (dt == 0.0) continue;
            worst = std::max(worst, std::abs(moments[l] - moments[k]) / std::sqrt(dt));
        }
    return worst;
}

DiagnosticsRecord make_record(const DistributionField& f, const CoefficientFields& coeff,
                              const MonitorBall& monitor, double linear_residual) {
    DiagnosticsRecord r;
    r.time = f.time;
    const Moments m = conserved_moments(f);
    r.mass = m.mass;
    r.px = m.momentum.x;
    r.py = m.momentum.y;
    r.pz = m.momentum.z;
    r.energy = m.energy;
    r.entropy = entropy(f);
    r.fisher = weighted_fisher(f);
    r.lq = lq_norm_on_ball(f, monitor.ball, monitor.q);
    const EllipticityReport rep = ellipticity_bounds(coeff, monitor.ball, f.time);
    r.ellip_c = rep.c_min;
    r.ellip_C = rep.C_max;
    r.negativity = negative_part_mass(f);
    r.trunc_mass = boundary_shell_mass(f);
    r.lin_res = linear_residual;
    return r;
}

double nondivergence_residual(const DistributionField& f_prev, const DistributionField& f_now,
                              const DistributionField& f_next, const CoefficientFields& coeff_now,
                              const Ball& region) {
    const double dt = f_next.time - f_prev.time;
    if (!(dt > 0.0)) throw std::invalid_argument("nondivergence_residual: snapshots must be time-ordered");

    const DistributionField diffusion = hessian_apply(coeff_now.abar, f_now);
    const auto nodes = ball_nodes(f_now.grid, region);
    const double h3 = std::pow(f_now.grid.spacing(), 3);
    double sum = 0.0;
    for (auto idx : nodes) {
        const double dtf = (f_next.values[idx] - f_prev.values[idx]) / dt;
        const double src = 8.0 * std::numbers::pi * f_now.values[idx] * f_now.values[idx];
        const double r = dtf - diffusion.values[idx] - src;
        sum += r * r;
    }
    return std::sqrt(sum * h3);
}

}  // namespace landau
