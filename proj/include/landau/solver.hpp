#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "landau/coefficients.hpp"
#include "landau/diagnostics.hpp"
#include "landau/grid.hpp"

namespace landau {

enum class Scheme { semi_implicit, explicit_euler };

struct SolverConfig {
    double dt{1e-3};
    double t_final{0.1};
    Scheme scheme{Scheme::semi_implicit};
    double linear_tol{1e-10};  // relative CG residual, must lie in (0, 1e-4]
    ConvolutionPath coefficient_path{ConvolutionPath::fast};
    bool picard{false};  // one coefficient re-assembly per step

    void validate() const;
    bool operator==(const SolverConfig&) const = default;
};

class StepError : public std::runtime_error {
public:
    StepError(const std::string& what, double residual, int iterations)
        : std::runtime_error(what), last_residual(residual), cg_iterations(iterations) {}
    double last_residual{0.0};
    int cg_iterations{0};
};

struct StepStats {
    double linear_residual{0.0};
    int cg_iterations{0};
};

/// Ordered (time, snapshot) sequence of a run.
struct Trajectory {
    std::vector<DistributionField> snapshots;
};

// Discretization building blocks (exposed for the property tests).
//
// Diffusion: out = A u with A = G^T abar G, G the node-centered gradient
// (central interior rows, one-sided second-order face rows). A is symmetric
// positive semidefinite for pointwise-PSD abar and annihilates constants,
// so the plain-sum mass is conserved exactly.
void apply_diffusion(const MatrixField& abar, const std::vector<double>& u, std::vector<double>& out);

/// Drift: out = -div(bbar u) with centered face fluxes and zero flux through
/// the cube boundary; telescopes to exact plain-sum conservation.
void apply_drift(const VectorField& bbar, const std::vector<double>& u, std::vector<double>& out);

/// One update with coefficients frozen at f_n. Semi-implicit: drift explicit,
/// diffusion implicit through a Jacobi-preconditioned CG solve of
/// (I + dt A) f_{n+1} = f_n + dt drift(f_n), iteration cap 10 n.
DistributionField step(const DistributionField& f, const CoefficientFields& coeff, const SolverConfig& cfg,
                       StepStats* stats = nullptr);

struct RunResult {
    Trajectory trajectory;
    std::vector<DiagnosticsRecord> records;  // one per executed step
    bool completed{false};
    std::string error;
};

using RecordSink = std::function<void(const DiagnosticsRecord&)>;
using SnapshotSink = std::function<void(const DistributionField&, int step_index)>;

/// Advance f0 to t_final, emitting a record per step and snapshots at the
/// given stride (step 0 and the final step always included). On a step
/// error the partial outputs are flushed and `completed` is false.
RunResult run(const DistributionField& f0, const SolverConfig& cfg, const MonitorBall& monitor,
              int snapshot_stride, const RecordSink& on_record = {}, const SnapshotSink& on_snapshot = {});

}  // namespace landau
