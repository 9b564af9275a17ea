#include "landau/solver.hpp"

#include <algorithm>
#include <cmath>

#include "landau/operators.hpp"

namespace landau {

void SolverConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("solver: dt must be positive");
    if (!(t_final >= 0.0)) throw std::invalid_argument("solver: t_final must be nonnegative");
    if (!(linear_tol > 0.0) || linear_tol > 1e-4)
        throw std::invalid_argument("solver: linear_tol must lie in (0, 1e-4]");
}

namespace {

// Adjoint of detail::diff_axis under the plain inner product: scatter each
// row's weights into the output.
void adjoint_diff_axis(const VelocityGrid& g, const std::vector<double>& w, std::vector<double>& out,
                       int axis) {
    const int n = g.n;
    const double c = 1.0 / (2.0 * g.spacing());
    const std::ptrdiff_t stride[3] = {1, n, static_cast<std::ptrdiff_t>(n) * n};
    const std::ptrdiff_t s = stride[axis];
    const std::ptrdiff_t sa = stride[(axis + 1) % 3];
    const std::ptrdiff_t sb = stride[(axis + 2) % 3];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::ptrdiff_t base = a * sa + b * sb;
            // row 0: (-3, 4, -1) * c
            const double w0 = w[base];
            out[base] += -3.0 * c * w0;
            out[base + s] += 4.0 * c * w0;
            out[base + 2 * s] += -c * w0;
            // interior rows: (-1, 0, +1) * c
            for (int i = 1; i < n - 1; ++i) {
                const double wi = c * w[base + i * s];
                out[base + (i - 1) * s] -= wi;
                out[base + (i + 1) * s] += wi;
            }
            // row n-1: (1, -4, 3) * c
            const std::ptrdiff_t end = base + (n - 1) * s;
            const double wn = w[end];
            out[end] += 3.0 * c * wn;
            out[end - s] += -4.0 * c * wn;
            out[end - 2 * s] += c * wn;
        }
}

struct DiffusionOperator {
    const MatrixField& abar;
    std::array<std::vector<double>, 3> grad;
    std::array<std::vector<double>, 3> flux;

    explicit DiffusionOperator(const MatrixField& m) : abar(m) {
        for (auto& v : grad) v.resize(m.grid.size());
        for (auto& v : flux) v.resize(m.grid.size());
    }

    void apply(const std::vector<double>& u, std::vector<double>& out) {
        const auto& g = abar.grid;
        for (int d = 0; d < 3; ++d) detail::diff_axis(g, u, grad[d], d);
        const std::size_t size = g.size();
        for (std::size_t i = 0; i < size; ++i) {
            const double gx = grad[0][i], gy = grad[1][i], gz = grad[2][i];
            flux[0][i] = abar.comp[0][i] * gx + abar.comp[3][i] * gy + abar.comp[4][i] * gz;
            flux[1][i] = abar.comp[3][i] * gx + abar.comp[1][i] * gy + abar.comp[5][i] * gz;
            flux[2][i] = abar.comp[4][i] * gx + abar.comp[5][i] * gy + abar.comp[2][i] * gz;
        }
        std::fill(out.begin(), out.end(), 0.0);
        for (int d = 0; d < 3; ++d) adjoint_diff_axis(g, flux[d], out, d);
    }

    // Exact diagonal of A = sum_u g(u,v)^T abar(u) g(u,v), used for the
    // Jacobi preconditioner. g(u,v) collects the three row weights at column v.
    std::vector<double> diagonal() const {
        const auto& g = abar.grid;
        const int n = g.n;
        const double c = 1.0 / (2.0 * g.spacing());
        std::vector<double> diag(g.size(), 0.0);

        // supp(row d at u): offsets (in nodes along axis d) and weights
        auto row = [&](int i, int (&off)[3], double (&wt)[3]) -> int {
            if (i == 0) {
                off[0] = 0; off[1] = 1; off[2] = 2;
                wt[0] = -3.0 * c; wt[1] = 4.0 * c; wt[2] = -c;
                return 3;
            }
            if (i == n - 1) {
                off[0] = 0; off[1] = -1; off[2] = -2;
                wt[0] = 3.0 * c; wt[1] = -4.0 * c; wt[2] = c;
                return 3;
            }
            off[0] = -1; off[1] = 1;
            wt[0] = -c; wt[1] = c;
            return 2;
        };

        int off_d[3], off_e[3];
        double wt_d[3], wt_e[3];
        for (int uz = 0; uz < n; ++uz)
            for (int uy = 0; uy < n; ++uy)
                for (int ux = 0; ux < n; ++ux) {
                    const int ui[3] = {ux, uy, uz};
                    const std::size_t u = g.index(ux, uy, uz);
                    for (int d = 0; d < 3; ++d) {
                        const int cnt_d = row(ui[d], off_d, wt_d);
                        for (int e = 0; e < 3; ++e) {
                            const double a_de = abar.comp[SymMat3::index(d, e)][u];
                            if (a_de == 0.0) continue;
                            const int cnt_e = row(ui[e], off_e, wt_e);
                            for (int p = 0; p < cnt_d; ++p)
                                for (int q = 0; q < cnt_e; ++q) {
                                    // same column iff the two offsets land on the same node
                                    if (d == e ? (off_d[p] != off_e[q]) : (off_d[p] != 0 || off_e[q] != 0))
                                        continue;
                                    int vi[3] = {ux, uy, uz};
                                    vi[d] += off_d[p];
                                    if (d != e) vi[e] += off_e[q];  // zero by the guard
                                    diag[g.index(vi[0], vi[1], vi[2])] += a_de * wt_d[p] * wt_e[q];
                                }
                        }
                    }
                }
        return diag;
    }
};

}  // namespace

void apply_diffusion(const MatrixField& abar, const std::vector<double>& u, std::vector<double>& out) {
    DiffusionOperator op(abar);
    out.resize(u.size());
    op.apply(u, out);
}

void apply_drift(const VectorField& bbar, const std::vector<double>& u, std::vector<double>& out) {
    const auto& g = bbar.grid;
    const int n = g.n;
    const double invh = 1.0 / g.spacing();
    out.assign(g.size(), 0.0);
    const std::ptrdiff_t stride[3] = {1, n, static_cast<std::ptrdiff_t>(n) * n};
    std::vector<double> q(g.size());
    for (int d = 0; d < 3; ++d) {
        for (std::size_t i = 0; i < q.size(); ++i) q[i] = bbar.comp[d][i] * u[i];
        const std::ptrdiff_t s = stride[d];
        const std::ptrdiff_t sa = stride[(d + 1) % 3];
        const std::ptrdiff_t sb = stride[(d + 2) % 3];
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const std::ptrdiff_t base = a * sa + b * sb;
                double flux_minus = 0.0;  // zero flux through the cube boundary
                for (int i = 0; i < n; ++i) {
                    const double flux_plus =
                        (i < n - 1) ? 0.5 * (q[base + i * s] + q[base + (i + 1) * s]) : 0.0;
                    out[base + i * s] -= (flux_plus - flux_minus) * invh;
                    flux_minus = flux_plus;
                }
            }
    }
}

namespace {

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

// Jacobi-preconditioned conjugate gradients on (I + dt A) x = rhs.
// Returns the achieved relative residual; throws on cap exhaustion.
double solve_implicit(DiffusionOperator& diffusion, double dt, const std::vector<double>& rhs,
                      std::vector<double>& x, double tol, int cap, int* iterations) {
    const std::size_t size = rhs.size();
    std::vector<double> diag = diffusion.diagonal();
    for (auto& d : diag) d = 1.0 / (1.0 + dt * d);

    auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
        diffusion.apply(in, out);
        for (std::size_t i = 0; i < size; ++i) out[i] = in[i] + dt * out[i];
    };
    auto dot = [size](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < size; ++i) s += a[i] * b[i];
        return s;
    };

    const double rhs_norm = std::sqrt(dot(rhs, rhs));
    if (rhs_norm == 0.0) {
        x.assign(size, 0.0);
        if (iterations) *iterations = 0;
        return 0.0;
    }

    std::vector<double> r(size), z(size), p(size), ap(size);
    apply(x, ap);
    for (std::size_t i = 0; i < size; ++i) r[i] = rhs[i] - ap[i];
    for (std::size_t i = 0; i < size; ++i) z[i] = diag[i] * r[i];
    p = z;
    double rz = dot(r, z);
    double res = std::sqrt(dot(r, r)) / rhs_norm;

    int it = 0;
    while (res > tol && it < cap) {
        apply(p, ap);
        const double alpha = rz / dot(p, ap);
        for (std::size_t i = 0; i < size; ++i) x[i] += alpha * p[i];
        for (std::size_t i = 0; i < size; ++i) r[i] -= alpha * ap[i];
        res = std::sqrt(dot(r, r)) / rhs_norm;
        for (std::size_t i = 0; i < size; ++i) z[i] = diag[i] * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t i = 0; i < size; ++i) p[i] = z[i] + beta * p[i];
        ++it;
    }
    if (iterations) *iterations = it;
    if (res > tol) throw StepError("linear solve failed to reach tolerance", res, it);
    return res;
}

}  // namespace

DistributionField step(const DistributionField& f, const CoefficientFields& coeff, const SolverConfig& cfg,
                       StepStats* stats) {
    cfg.validate();
    if (!all_finite(f.values)) throw StepError("non-finite state entering step", 0.0, 0);

    DiffusionOperator diffusion(coeff.abar);
    std::vector<double> rhs(f.values.size());
    apply_drift(coeff.bbar, f.values, rhs);
    for (std::size_t i = 0; i < rhs.size(); ++i) rhs[i] = f.values[i] + cfg.dt * rhs[i];

    DistributionField next(f.grid, f.time + cfg.dt);
    StepStats local;
    if (cfg.scheme == Scheme::semi_implicit) {
        next.values = f.values;  // previous state as the CG initial guess
        local.linear_residual = solve_implicit(diffusion, cfg.dt, rhs, next.values, cfg.linear_tol,
                                               10 * f.grid.n, &local.cg_iterations);
    } else {
        diffusion.apply(f.values, next.values);
        for (std::size_t i = 0; i < rhs.size(); ++i) next.values[i] = rhs[i] - cfg.dt * next.values[i];
    }

    if (!all_finite(next.values))
        throw StepError("non-finite values after update", local.linear_residual, local.cg_iterations);
    const double before = max_abs(f.values);
    const double after = max_abs(next.values);
    if (after > 1e6 * (before + 1e-300))
        throw StepError("blow-up of the max norm detected", local.linear_residual, local.cg_iterations);

    if (stats) *stats = local;
    return next;
}

RunResult run(const DistributionField& f0, const SolverConfig& cfg, const MonitorBall& monitor,
              int snapshot_stride, const RecordSink& on_record, const SnapshotSink& on_snapshot) {
    cfg.validate();
    if (snapshot_stride < 1) throw std::invalid_argument("run: snapshot stride must be >= 1");
    if (!all_finite(f0.values)) throw std::invalid_argument("run: initial data must be finite");
    for (double v : f0.values)
        if (v < 0.0) throw std::invalid_argument("run: initial data must be nonnegative");

    const int steps = static_cast<int>(std::llround(cfg.t_final / cfg.dt));
    RunResult result;

    ConvolutionWorkspace* ws = nullptr;
    std::unique_ptr<ConvolutionWorkspace> ws_storage;
    if (cfg.coefficient_path == ConvolutionPath::fast) {
        ws_storage = std::make_unique<ConvolutionWorkspace>(f0.grid);
        ws = ws_storage.get();
    }

    auto snapshot = [&](const DistributionField& f, int k) {
        result.trajectory.snapshots.push_back(f);
        if (on_snapshot) on_snapshot(f, k);
    };

    DistributionField f = f0;
    const double initial_max = max_abs(f.values);
    snapshot(f, 0);

    CoefficientFields coeff = assemble_coefficients(f, cfg.coefficient_path, ws);
    try {
        for (int k = 1; k <= steps; ++k) {
            StepStats stats;
            DistributionField next = step(f, coeff, cfg, &stats);
            if (cfg.picard) {
                const CoefficientFields refreshed = assemble_coefficients(next, cfg.coefficient_path, ws);
                next = step(f, refreshed, cfg, &stats);
            }
            next.time = k * cfg.dt;  // avoid accumulated addition drift
            f = std::move(next);
            if (max_abs(f.values) > 1e6 * (initial_max + 1e-300))
                throw StepError("blow-up of the max norm detected", stats.linear_residual,
                                stats.cg_iterations);

            coeff = assemble_coefficients(f, cfg.coefficient_path, ws);
            const DiagnosticsRecord rec = make_record(f, coeff, monitor, stats.linear_residual);
            result.records.push_back(rec);
            if (on_record) on_record(rec);
            if (k % snapshot_stride == 0 || k == steps) snapshot(f, k);
        }
        result.completed = true;
    } catch (const StepError& err) {
        result.completed = false;
        result.error = err.what();
    }
    return result;
}

}  // namespace landau
