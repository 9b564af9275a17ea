#pragma once

#include <array>

#include "landau/geometry.hpp"

namespace landau {

/// Eigenvalues of a symmetric 3x3 matrix in ascending order.
/// Closed-form characteristic-polynomial (trigonometric) solve, with a
/// cyclic-Jacobi sweep fallback when the cubic discriminant is near zero.
std::array<double, 3> sym3_eigenvalues(const SymMat3& a);

}  // namespace landau
