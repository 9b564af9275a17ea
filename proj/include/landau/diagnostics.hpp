#pragma once

#include <functional>
#include <span>

#include "landau/coefficients.hpp"
#include "landau/grid.hpp"

namespace landau {

struct Moments {
    double mass{0.0};
    Vec3 momentum{};
    double energy{0.0};  // integral of f |v|^2 / 2
};

/// Trapezoid quadratures of f * {1, v, |v|^2/2}.
Moments conserved_moments(const DistributionField& f);

/// Integral of f log f with the convention that nodes with f <= 0 contribute 0.
double entropy(const DistributionField& f);

/// Integral of |grad sqrt(max(f,0))|^2 (1+|v|^2)^(-3/2), discrete gradient.
double weighted_fisher(const DistributionField& f);

/// L1 norm of the negative part of f.
double negative_part_mass(const DistributionField& f);

/// Trapezoid mass resident in the outermost node layer; the indicator for
/// mass about to be lost to the cube truncation.
double boundary_shell_mass(const DistributionField& f);

/// Empirical Hoelder-1/2 constant of t -> integral of f(t) phi over all
/// snapshot pairs. Needs at least two snapshots.
double moment_time_holder(std::span<const DistributionField> snapshots,
                          const std::function<double(const Vec3&)>& phi);

/// One CSV row of everything monitored per step.
struct DiagnosticsRecord {
    double time{0.0};
    double mass{0.0};
    double px{0.0}, py{0.0}, pz{0.0};
    double energy{0.0};
    double entropy{0.0};
    double fisher{0.0};
    double lq{0.0};
    double ellip_c{0.0};
    double ellip_C{0.0};
    double negativity{0.0};
    double trunc_mass{0.0};
    double lin_res{0.0};
};

struct MonitorBall {
    double q{4.0};
    Ball ball{Vec3{}, 2.0};
};

DiagnosticsRecord make_record(const DistributionField& f, const CoefficientFields& coeff,
                              const MonitorBall& monitor, double linear_residual);

/// L2(region) residual of the nondivergence form
///   d_t f - abar_ij d_ij f - 8 pi f^2
/// with d_t from the centered snapshot difference. Connects the divergence
/// discretization back to the strong equation; decreases under refinement.
double nondivergence_residual(const DistributionField& f_prev, const DistributionField& f_now,
                              const DistributionField& f_next, const CoefficientFields& coeff_now,
                              const Ball& region);

}  // namespace landau
