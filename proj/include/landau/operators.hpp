#pragma once

#include "landau/grid.hpp"

namespace landau {

// Discrete differential operators: second-order central stencils in the
// interior, one-sided second-order stencils on the cube faces. The central
// gradient and divergence are negative adjoints of each other under the
// plain h^3 inner product, exactly, whenever the vector field vanishes on
// the two outermost node layers (only central rows then contribute).

VectorField gradient(const DistributionField& u);
DistributionField divergence(const VectorField& w);

/// d^2 u / dv_a dv_b: compact 3-point stencil for a == b, composition of
/// first-derivative stencils for a != b.
DistributionField second_derivative(const DistributionField& u, int a, int b);

/// Pointwise contraction M_ij d_ij u.
DistributionField hessian_apply(const MatrixField& m, const DistributionField& u);

namespace detail {
/// First derivative along one axis into out (pre-sized).
void diff_axis(const VelocityGrid& g, const std::vector<double>& in, std::vector<double>& out, int axis);
/// Pure second derivative along one axis.
void diff2_axis(const VelocityGrid& g, const std::vector<double>& in, std::vector<double>& out, int axis);
}  // namespace detail

}  // namespace landau
