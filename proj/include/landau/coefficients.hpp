#pragma once

#include <cstddef>
#include <memory>

#include "landau/grid.hpp"

namespace landau {

enum class ConvolutionPath { direct, fast };

/// The nonlocal collision coefficients: abar_ij = a_ij * f, bbar_i = b_i * f.
struct CoefficientFields {
    MatrixField abar;
    VectorField bbar;
    ConvolutionPath provenance{ConvolutionPath::direct};
};

struct EllipticityReport {
    Ball region;
    double time{0.0};
    double c_min{0.0};
    double C_max{0.0};
    std::size_t argmin_node{0};
    std::size_t argmax_node{0};
};

/// Analytic integral of Pi_ij(z)/|z| over the ball whose volume equals one
/// grid cell: (4 pi / 3) r_c^2 * delta_ij with r_c = h (3/(4 pi))^(1/3).
/// Replaces the excluded node's contribution in both convolution paths.
double singular_cell_diagonal(double spacing);

/// O(N^2) real-space quadrature over source nodes. The reference path: the
/// fast path must reproduce it to 1e-6 relative in the max norm.
MatrixField convolve_direct_a(const DistributionField& f);
VectorField convolve_direct_b(const DistributionField& f);

/// FFT convolution on the grid zero-padded to 2(n-1) per axis, with the
/// kernels tabulated on the difference lattice (identical singular-cell
/// values as the direct path). Caches plans and kernel transforms per grid.
class ConvolutionWorkspace {
public:
    explicit ConvolutionWorkspace(const VelocityGrid& grid);
    ~ConvolutionWorkspace();
    ConvolutionWorkspace(const ConvolutionWorkspace&) = delete;
    ConvolutionWorkspace& operator=(const ConvolutionWorkspace&) = delete;

    const VelocityGrid& grid() const;

    MatrixField convolve_a(const DistributionField& f);
    VectorField convolve_b(const DistributionField& f);
    CoefficientFields assemble(const DistributionField& f);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

MatrixField convolve_fast_a(const DistributionField& f);
VectorField convolve_fast_b(const DistributionField& f);

/// Assemble both coefficient fields along the requested path. A workspace
/// may be passed to reuse FFT plans; it must match the field's grid.
CoefficientFields assemble_coefficients(const DistributionField& f, ConvolutionPath path,
                                        ConvolutionWorkspace* workspace = nullptr);

/// || div bbar + 8 pi f ||_L2 / || 8 pi f ||_L2 over interior nodes
/// (outermost layer excluded). Zero field gives 0. The continuum identity
/// -d_i bbar_i = 8 pi f is exact; the discrete residual contracts at rate
/// >= h under refinement.
double divergence_identity_residual(const DistributionField& f, const CoefficientFields& coeff);

/// Exact eigenvalue extremes of abar over the nodes of the ball.
EllipticityReport ellipticity_bounds(const CoefficientFields& coeff, const Ball& ball, double time = 0.0);

}  // namespace landau
