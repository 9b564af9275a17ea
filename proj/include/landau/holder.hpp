#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "landau/grid.hpp"

namespace landau {

/// Deterministic seeded pair sampling; estimates are running maxima, so a
/// larger budget with the same seed never decreases them. Exhaustive mode
/// visits every pair (meant for n <= 17).
struct SampleConfig {
    std::size_t budget{100000};
    std::uint64_t seed{20240101};
    bool exhaustive{false};
    bool unit_weights{false};  // cross-check mode: d_P, d_PQ replaced by 1
};

struct PairQuotients {
    double space{0.0};  // sup |u(t,x)-u(t,y)| / |x-y|^alpha
    double time{0.0};   // sup |u(t,x)-u(s,x)| / |t-s|^(alpha/2)
    std::size_t pairs{0};
};

/// The two H^{alpha,alpha/2} difference quotients over a cylinder, from
/// seeded samples plus all nearest-neighbor pairs.
PairQuotients parabolic_quotients(std::span<const DistributionField> snapshots, const Cylinder& cyl,
                                  double alpha, const SampleConfig& sc = {});

/// Weighted seminorm sup d_P^m |u| + sup d_PQ^(m+alpha) |u(P)-u(Q)|/|P-Q|^alpha
/// over axis-aligned pairs, where d_P = min(R - |x-c|, 8 sqrt(t - t_start))
/// is the closed-form parabolic-boundary distance of the cylinder.
double weighted_star_norm(std::span<const DistributionField> snapshots, const Cylinder& cyl, double alpha,
                          int m, const SampleConfig& sc = {});

struct HolderReport {
    double alpha{0.0};
    Cylinder cylinder;
    double space_quotient{0.0};
    double time_quotient{0.0};
    std::array<double, 3> derivative_space_quotients{};
    std::array<double, 3> derivative_time_quotients{};
    std::array<double, 3> weighted_star_norms{};  // m = 0, 1, 2 applied to the field
    std::size_t pair_sample_size{0};
};

HolderReport parabolic_holder(std::span<const DistributionField> snapshots, const Cylinder& cyl,
                              double alpha, const SampleConfig& sc = {});

/// parabolic_holder plus the same quotients of the three discrete first
/// derivatives (the H^{1+alpha,(1+alpha)/2} ingredients).
HolderReport holder_1plus(std::span<const DistributionField> snapshots, const Cylinder& cyl, double alpha,
                          const SampleConfig& sc = {});

struct RegularityVerdict {
    double q{0.0};
    double alpha{0.0};
    double s0{0.0};  // measured sup_t of the L^q(B) norm over the window
    bool hypothesis_held{false};
    Cylinder monitored;
    Cylinder inner;
    // H*_(alpha+2)-style assembly on the inner cylinder: weighted seminorms
    // of f (m=0), its first (m=1), second (m=2) and time (m=2) derivatives.
    double norm_f{0.0};
    std::array<double, 3> norm_d1{};
    std::array<double, 6> norm_d2{};  // SymMat3 component order
    double norm_dt{0.0};
};

/// Measures both sides of the conditional-regularity statement: the L^q(B)
/// hypothesis and the weighted Hoelder-norm conclusion. Requires q > 3.
/// Draws no implication, only measurements.
RegularityVerdict regularity_verdict(std::span<const DistributionField> snapshots, const Cylinder& cyl,
                                     double q, double alpha, const SampleConfig& sc = {});

}  // namespace landau
