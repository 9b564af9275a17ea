#include "landau/grid.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace landau {

VelocityGrid::VelocityGrid(int points_per_axis, double half_width)
    : n(points_per_axis), extent(half_width) {
    if (n < 9 || n % 2 == 0) throw std::invalid_argument("grid: n must be odd and >= 9");
    if (!(extent > 0.0)) throw std::invalid_argument("grid: extent must be positive");
}

double integrate(const DistributionField& f, const std::function<double(const Vec3&)>& weight) {
    const auto& g = f.grid;
    const double h3 = std::pow(g.spacing(), 3);
    double sum = 0.0;
    for (int iz = 0; iz < g.n; ++iz) {
        const double wz = g.axis_weight(iz);
        for (int iy = 0; iy < g.n; ++iy) {
            const double wyz = wz * g.axis_weight(iy);
            for (int ix = 0; ix < g.n; ++ix) {
                const std::size_t idx = g.index(ix, iy, iz);
                sum += f.values[idx] * weight(g.node(ix, iy, iz)) * wyz * g.axis_weight(ix);
            }
        }
    }
    return sum * h3;
}

double integrate(const DistributionField& f) {
    const auto& g = f.grid;
    const double h3 = std::pow(g.spacing(), 3);
    double sum = 0.0;
    for (int iz = 0; iz < g.n; ++iz)
        for (int iy = 0; iy < g.n; ++iy) {
            const double w = g.axis_weight(iz) * g.axis_weight(iy);
            for (int ix = 0; ix < g.n; ++ix)
                sum += f.values[g.index(ix, iy, iz)] * w * g.axis_weight(ix);
        }
    return sum * h3;
}

std::vector<std::size_t> ball_nodes(const VelocityGrid& grid, const Ball& ball) {
    std::vector<std::size_t> nodes;
    const double r2 = ball.radius * ball.radius;
    for (int iz = 0; iz < grid.n; ++iz)
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix) {
                if ((grid.node(ix, iy, iz) - ball.center).norm2() <= r2)
                    nodes.push_back(grid.index(ix, iy, iz));
            }
    return nodes;
}

double lq_norm_on_ball(const DistributionField& f, const Ball& ball, double q) {
    if (q < 1.0) throw std::invalid_argument("lq_norm_on_ball: q must be >= 1");
    const auto& g = f.grid;
    for (int d = 0; d < 3; ++d) {
        if (std::abs(ball.center[d]) + ball.radius > g.extent + 1e-12 * g.extent)
            throw std::invalid_argument("lq_norm_on_ball: ball must lie inside the grid cube");
    }

    const auto nodes = ball_nodes(g, ball);
    if (q == std::numeric_limits<double>::infinity()) {
        double m = 0.0;
        for (auto idx : nodes) m = std::max(m, std::abs(f.values[idx]));
        return m;
    }
    const double h3 = std::pow(g.spacing(), 3);
    double sum = 0.0;
    for (auto idx : nodes) sum += std::pow(std::abs(f.values[idx]), q);
    return std::pow(sum * h3, 1.0 / q);
}

DistributionField make_maxwellian(const VelocityGrid& grid, const MaxwellianSpec& spec, double time) {
    return make_maxwellian_mixture(grid, {spec}, time);
}

DistributionField make_maxwellian_mixture(const VelocityGrid& grid, const std::vector<MaxwellianSpec>& specs,
                                          double time) {
    DistributionField f(grid, time);
    for (const auto& s : specs) {
        if (!(s.temperature > 0.0)) throw std::invalid_argument("maxwellian: temperature must be positive");
        const double norm = s.mass / std::pow(2.0 * std::numbers::pi * s.temperature, 1.5);
        const double inv2T = 1.0 / (2.0 * s.temperature);
        for (int iz = 0; iz < grid.n; ++iz)
            for (int iy = 0; iy < grid.n; ++iy)
                for (int ix = 0; ix < grid.n; ++ix) {
                    const Vec3 d = grid.node(ix, iy, iz) - s.mean;
                    f.values[grid.index(ix, iy, iz)] += norm * std::exp(-d.norm2() * inv2T);
                }
    }
    return f;
}

DistributionField make_compact_bump(const VelocityGrid& grid, const Vec3& center, double radius, double height,
                                    int power, double time) {
    if (!(radius > 0.0)) throw std::invalid_argument("compact_bump: radius must be positive");
    if (power < 1) throw std::invalid_argument("compact_bump: power must be >= 1");
    DistributionField f(grid, time);
    const double inv_r2 = 1.0 / (radius * radius);
    for (int iz = 0; iz < grid.n; ++iz)
        for (int iy = 0; iy < grid.n; ++iy)
            for (int ix = 0; ix < grid.n; ++ix) {
                const double s = 1.0 - (grid.node(ix, iy, iz) - center).norm2() * inv_r2;
                if (s > 0.0) f.values[grid.index(ix, iy, iz)] = height * std::pow(s, power);
            }
    return f;
}

}  // namespace landau
