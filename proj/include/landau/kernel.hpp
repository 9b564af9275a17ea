#pragma once

#include <span>
#include <vector>

#include "landau/geometry.hpp"

namespace landau {

// Closed forms for the Coulomb collision kernel
//   Pi_ij(z) = delta_ij - z_i z_j / |z|^2
//   a_ij(z)  = Pi_ij(z) / |z|
//   b_i(z)   = sum_j d_j a_ij(z) = -2 z_i / |z|^3
// and its first/second derivatives. All throw std::domain_error at z = 0,
// where the kernel is singular.

SymMat3 pi_matrix(const Vec3& z);
SymMat3 a_kernel(const Vec3& z);
Vec3 b_kernel(const Vec3& z);

/// Exact gradient d_k a_ij = -(delta_ij z_k + delta_ik z_j + delta_jk z_i)/|z|^3
///                           + 3 z_i z_j z_k / |z|^5.
Rank3Sym grad_a_kernel(const Vec3& z);

/// Exact Hessian d_kl a_ij; homogeneous of degree -3, so it factors as
/// mu_kl(z/|z|)/|z|^3 with mu even and mean-zero on the unit sphere.
Rank4Sym hess_a_kernel(const Vec3& z);

/// Angular part mu_kl^(ij)(u) of the Hessian, evaluated at a unit vector.
Rank4Sym hess_angular_part(const Vec3& unit);

/// Product quadrature on S^2: Gauss-Legendre in cos(theta), uniform in phi.
/// Exact for spherical polynomials of the low degrees used here once
/// nodes_per_angle >= 8.
struct SphereQuadrature {
    explicit SphereQuadrature(int nodes_per_angle);
    std::vector<Vec3> points;
    std::vector<double> weights;  // sum to 4*pi
};

/// Surface moment of coordinate monomials over S^2:
///   order 2: integral of u_i u_j          = (4*pi/3)  delta_ij
///   order 4: integral of u_i u_j u_k u_l  = (4*pi/15)(dd + dd + dd)
/// Indices are 0-based; their count must equal the order.
double sphere_moment(int order, std::span<const int> indices, int nodes_per_angle = 32);

/// Largest |integral over S^2 of mu_kl^(ij)| across all index combinations.
/// Requires nodes_per_angle >= 16.
double mu_mean_zero_check(int nodes_per_angle);

}  // namespace landau
