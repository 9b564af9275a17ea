#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "landau/geometry.hpp"

namespace landau {

/// Uniform node-centered grid on the cube [-L, L]^3.
/// n is odd so the origin is a node; spacing h = 2L/(n-1); node coordinates
/// are reproduced bit-exactly as -L + idx*h.
struct VelocityGrid {
    int n{0};
    double extent{0.0};

    VelocityGrid() = default;
    VelocityGrid(int points_per_axis, double half_width);

    double spacing() const { return 2.0 * extent / (n - 1); }
    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }

    // x-fastest linearization, matching the snapshot raster order
    std::size_t index(int ix, int iy, int iz) const {
        return static_cast<std::size_t>(ix) + static_cast<std::size_t>(n) * (iy + static_cast<std::size_t>(n) * iz);
    }
    double coord(int i) const { return -extent + i * spacing(); }
    Vec3 node(int ix, int iy, int iz) const { return {coord(ix), coord(iy), coord(iz)}; }

    /// 0.5 on cube faces, 1 inside: the trapezoid-rule weight along each axis.
    double axis_weight(int i) const { return (i == 0 || i == n - 1) ? 0.5 : 1.0; }

    bool operator==(const VelocityGrid&) const = default;
};

/// Scalar samples over a VelocityGrid with a time stamp. Used both for the
/// distribution f(t,.) and for derived scalar fields.
struct DistributionField {
    VelocityGrid grid;
    std::vector<double> values;
    double time{0.0};

    DistributionField() = default;
    explicit DistributionField(const VelocityGrid& g, double t = 0.0)
        : grid(g), values(g.size(), 0.0), time(t) {}

    double& operator()(int ix, int iy, int iz) { return values[grid.index(ix, iy, iz)]; }
    double operator()(int ix, int iy, int iz) const { return values[grid.index(ix, iy, iz)]; }
};

using ScalarField = DistributionField;

struct VectorField {
    VelocityGrid grid;
    std::array<std::vector<double>, 3> comp;

    VectorField() = default;
    explicit VectorField(const VelocityGrid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), 0.0);
    }
    Vec3 at(std::size_t idx) const { return {comp[0][idx], comp[1][idx], comp[2][idx]}; }
};

/// Per-node symmetric 3x3 matrices, components in SymMat3 order.
struct MatrixField {
    VelocityGrid grid;
    std::array<std::vector<double>, 6> comp;

    MatrixField() = default;
    explicit MatrixField(const VelocityGrid& g) : grid(g) {
        for (auto& c : comp) c.assign(g.size(), 0.0);
    }
    SymMat3 at(std::size_t idx) const {
        return SymMat3{{comp[0][idx], comp[1][idx], comp[2][idx], comp[3][idx], comp[4][idx], comp[5][idx]}};
    }
    void set(std::size_t idx, const SymMat3& v) {
        for (int c = 0; c < 6; ++c) comp[c][idx] = v.m[c];
    }
};

/// Trapezoid-rule approximation of the integral of f*weight over the cube.
double integrate(const DistributionField& f, const std::function<double(const Vec3&)>& weight);
double integrate(const DistributionField& f);

/// Node indices inside the ball (closed: |v - c| <= r).
std::vector<std::size_t> ball_nodes(const VelocityGrid& grid, const Ball& ball);

/// (sum over nodes in the ball of |f|^q h^3)^(1/q); max over the ball for
/// q = infinity. The ball must sit inside the grid cube; q < 1 is rejected.
double lq_norm_on_ball(const DistributionField& f, const Ball& ball, double q);

struct MaxwellianSpec {
    double mass{1.0};
    double temperature{1.0};
    Vec3 mean{};
    bool operator==(const MaxwellianSpec&) const = default;
};

DistributionField make_maxwellian(const VelocityGrid& grid, const MaxwellianSpec& spec, double time = 0.0);
DistributionField make_maxwellian_mixture(const VelocityGrid& grid, const std::vector<MaxwellianSpec>& specs,
                                          double time = 0.0);

/// height * (1 - |v-c|^2/r^2)^power inside the ball, 0 outside.
DistributionField make_compact_bump(const VelocityGrid& grid, const Vec3& center, double radius, double height,
                                    int power, double time = 0.0);

}  // namespace landau
