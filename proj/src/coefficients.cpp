#include "landau/coefficients.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "landau/eig3.hpp"
#include "landau/kernel.hpp"
#include "landau/operators.hpp"

namespace landau {

namespace {
constexpr double kPi = std::numbers::pi;
}

double singular_cell_diagonal(double spacing) {
    const double rc = spacing * std::cbrt(3.0 / (4.0 * kPi));
    return (4.0 * kPi / 3.0) * rc * rc;
}

MatrixField convolve_direct_a(const DistributionField& f) {
    const auto& g = f.grid;
    const int n = g.n;
    const double h = g.spacing();
    const double h3 = h * h * h;
    const double cell = singular_cell_diagonal(h);

    MatrixField out(g);
    for (int vz = 0; vz < n; ++vz)
        for (int vy = 0; vy < n; ++vy)
            for (int vx = 0; vx < n; ++vx) {
                const std::size_t vi = g.index(vx, vy, vz);
                SymMat3 acc;
                for (int wz = 0; wz < n; ++wz)
                    for (int wy = 0; wy < n; ++wy)
                        for (int wx = 0; wx < n; ++wx) {
                            const std::size_t wi = g.index(wx, wy, wz);
                            const double fw = f.values[wi];
                            if (fw == 0.0 || wi == vi) continue;
                            const Vec3 d{(vx - wx) * h, (vy - wy) * h, (vz - wz) * h};
                            const SymMat3 k = a_kernel(d);
                            for (int c = 0; c < 6; ++c) acc.m[c] += k.m[c] * fw;
                        }
                for (int c = 0; c < 6; ++c) acc.m[c] *= h3;
                const double self = cell * f.values[vi];
                acc.m[0] += self;
                acc.m[1] += self;
                acc.m[2] += self;
                out.set(vi, acc);
            }
    return out;
}

VectorField convolve_direct_b(const DistributionField& f) {
    const auto& g = f.grid;
    const int n = g.n;
    const double h = g.spacing();
    const double h3 = h * h * h;

    VectorField out(g);
    for (int vz = 0; vz < n; ++vz)
        for (int vy = 0; vy < n; ++vy)
            for (int vx = 0; vx < n; ++vx) {
                const std::size_t vi = g.index(vx, vy, vz);
                Vec3 acc;
                for (int wz = 0; wz < n; ++wz)
                    for (int wy = 0; wy < n; ++wy)
                        for (int wx = 0; wx < n; ++wx) {
                            const std::size_t wi = g.index(wx, wy, wz);
                            const double fw = f.values[wi];
                            if (fw == 0.0 || wi == vi) continue;
                            const Vec3 d{(vx - wx) * h, (vy - wy) * h, (vz - wz) * h};
                            // odd kernel: the singular cell contributes 0 by symmetry
                            acc = acc + b_kernel(d) * fw;
                        }
                out.comp[0][vi] = acc.x * h3;
                out.comp[1][vi] = acc.y * h3;
                out.comp[2][vi] = acc.z * h3;
            }
    return out;
}

// ---------------------------------------------------------------------------
// FFT path

struct ConvolutionWorkspace::Impl {
    VelocityGrid grid;
    int m;                  // padded extent 2(n-1)
    std::size_t real_size;  // m^3
    std::size_t cplx_size;  // m*m*(m/2+1)

    double* real_buf = nullptr;
    fftw_complex* cplx_buf = nullptr;
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;

    // kernel transforms: components 0..5 = a (SymMat3 order), 6..8 = b
    std::array<std::vector<std::complex<double>>, 9> kernel_hat;
    std::vector<std::complex<double>> field_hat;

    explicit Impl(const VelocityGrid& g) : grid(g), m(2 * (g.n - 1)) {
        real_size = static_cast<std::size_t>(m) * m * m;
        cplx_size = static_cast<std::size_t>(m) * m * (m / 2 + 1);
        real_buf = fftw_alloc_real(real_size);
        cplx_buf = fftw_alloc_complex(cplx_size);
        if (!real_buf || !cplx_buf) throw std::bad_alloc();
        fwd = fftw_plan_dft_r2c_3d(m, m, m, real_buf, cplx_buf, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_3d(m, m, m, cplx_buf, real_buf, FFTW_ESTIMATE);
        field_hat.resize(cplx_size);
        build_kernel_tables();
    }

    ~Impl() {
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(real_buf);
        fftw_free(cplx_buf);
    }

    std::size_t pad_index(int ix, int iy, int iz) const {
        return static_cast<std::size_t>(ix) +
               static_cast<std::size_t>(m) * (iy + static_cast<std::size_t>(m) * iz);
    }

    // Kernel value for one difference-lattice slot. Slot n-1 per axis holds
    // both displacements +-(n-1); averaging over the aliased sign choices
    // keeps even components exact and zeroes odd ones there.
    template <typename Kernel>
    double slot_value(int tx, int ty, int tz, const Kernel& kernel) const {
        const int n = grid.n;
        const double h = grid.spacing();
        int s[3];
        bool aliased[3];
        const int t[3] = {tx, ty, tz};
        for (int d = 0; d < 3; ++d) {
            aliased[d] = (t[d] == n - 1);
            s[d] = (t[d] <= n - 2) ? t[d] : t[d] - m;
        }
        double sum = 0.0;
        int count = 0;
        for (int cx = 0; cx < (aliased[0] ? 2 : 1); ++cx)
            for (int cy = 0; cy < (aliased[1] ? 2 : 1); ++cy)
                for (int cz = 0; cz < (aliased[2] ? 2 : 1); ++cz) {
                    const Vec3 d{(cx ? n - 1 : s[0]) * h, (cy ? n - 1 : s[1]) * h, (cz ? n - 1 : s[2]) * h};
                    sum += kernel(d);
                    ++count;
                }
        return sum / count;
    }

    void build_kernel_tables() {
        const double h = grid.spacing();
        const double cell_diag = singular_cell_diagonal(h) / (h * h * h);
        for (int c = 0; c < 9; ++c) {
            for (int tz = 0; tz < m; ++tz)
                for (int ty = 0; ty < m; ++ty)
                    for (int tx = 0; tx < m; ++tx) {
                        static constexpr int comp_i[6] = {0, 1, 2, 0, 0, 1};
                        static constexpr int comp_j[6] = {0, 1, 2, 1, 2, 2};
                        double val;
                        if (tx == 0 && ty == 0 && tz == 0) {
                            val = (c < 3) ? cell_diag : 0.0;  // a diagonal comps only
                        } else if (c < 6) {
                            const int i = comp_i[c], j = comp_j[c];
                            val = slot_value(tx, ty, tz,
                                             [&](const Vec3& d) { return a_kernel(d)(i, j); });
                        } else {
                            const int i = c - 6;
                            val = slot_value(tx, ty, tz, [&](const Vec3& d) { return b_kernel(d)[i]; });
                        }
                        real_buf[pad_index(tx, ty, tz)] = val;
                    }
            fftw_execute(fwd);
            kernel_hat[c].assign(reinterpret_cast<std::complex<double>*>(cplx_buf),
                                 reinterpret_cast<std::complex<double>*>(cplx_buf) + cplx_size);
        }
    }

    void forward_field(const DistributionField& f) {
        const int n = grid.n;
        std::fill(real_buf, real_buf + real_size, 0.0);
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix)
                    real_buf[pad_index(ix, iy, iz)] = f.values[grid.index(ix, iy, iz)];
        fftw_execute(fwd);
        std::copy(reinterpret_cast<std::complex<double>*>(cplx_buf),
                  reinterpret_cast<std::complex<double>*>(cplx_buf) + cplx_size, field_hat.begin());
    }

    void inverse_component(int c, std::vector<double>& out) {
        auto* p = reinterpret_cast<std::complex<double>*>(cplx_buf);
        const auto& khat = kernel_hat[c];
        for (std::size_t i = 0; i < cplx_size; ++i) p[i] = khat[i] * field_hat[i];
        fftw_execute(bwd);
        const int n = grid.n;
        const double h = grid.spacing();
        const double scale = h * h * h / static_cast<double>(real_size);
        for (int iz = 0; iz < n; ++iz)
            for (int iy = 0; iy < n; ++iy)
                for (int ix = 0; ix < n; ++ix)
                    out[grid.index(ix, iy, iz)] = real_buf[pad_index(ix, iy, iz)] * scale;
    }
};

ConvolutionWorkspace::ConvolutionWorkspace(const VelocityGrid& grid) : impl_(std::make_unique<Impl>(grid)) {}
ConvolutionWorkspace::~ConvolutionWorkspace() = default;

const VelocityGrid& ConvolutionWorkspace::grid() const { return impl_->grid; }

MatrixField ConvolutionWorkspace::convolve_a(const DistributionField& f) {
    if (f.grid != impl_->grid) throw std::invalid_argument("convolve: field grid does not match workspace");
    impl_->forward_field(f);
    MatrixField out(impl_->grid);
    for (int c = 0; c < 6; ++c) impl_->inverse_component(c, out.comp[c]);
    return out;
}

VectorField ConvolutionWorkspace::convolve_b(const DistributionField& f) {
    if (f.grid != impl_->grid) throw std::invalid_argument("convolve: field grid does not match workspace");
    impl_->forward_field(f);
    VectorField out(impl_->grid);
    for (int c = 0; c < 3; ++c) impl_->inverse_component(6 + c, out.comp[c]);
    return out;
}

CoefficientFields ConvolutionWorkspace::assemble(const DistributionField& f) {
    if (f.grid != impl_->grid) throw std::invalid_argument("convolve: field grid does not match workspace");
    impl_->forward_field(f);
    CoefficientFields out{MatrixField(impl_->grid), VectorField(impl_->grid), ConvolutionPath::fast};
    for (int c = 0; c < 6; ++c) impl_->inverse_component(c, out.abar.comp[c]);
    for (int c = 0; c < 3; ++c) impl_->inverse_component(6 + c, out.bbar.comp[c]);
    return out;
}

MatrixField convolve_fast_a(const DistributionField& f) {
    ConvolutionWorkspace ws(f.grid);
    return ws.convolve_a(f);
}

VectorField convolve_fast_b(const DistributionField& f) {
    ConvolutionWorkspace ws(f.grid);
    return ws.convolve_b(f);
}

CoefficientFields assemble_coefficients(const DistributionField& f, ConvolutionPath path,
                                        ConvolutionWorkspace* workspace) {
    if (path == ConvolutionPath::direct) {
        return CoefficientFields{convolve_direct_a(f), convolve_direct_b(f), ConvolutionPath::direct};
    }
    if (workspace) return workspace->assemble(f);
    ConvolutionWorkspace ws(f.grid);
    return ws.assemble(f);
}

double divergence_identity_residual(const DistributionField& f, const CoefficientFields& coeff) {
    const auto& g = f.grid;
    const DistributionField div_b = divergence(coeff.bbar);

    double num = 0.0, den = 0.0;
    for (int iz = 1; iz < g.n - 1; ++iz)
        for (int iy = 1; iy < g.n - 1; ++iy)
            for (int ix = 1; ix < g.n - 1; ++ix) {
                const std::size_t idx = g.index(ix, iy, iz);
                const double target = 8.0 * kPi * f.values[idx];
                const double r = div_b.values[idx] + target;
                num += r * r;
                den += target * target;
            }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

EllipticityReport ellipticity_bounds(const CoefficientFields& coeff, const Ball& ball, double time) {
    const auto nodes = ball_nodes(coeff.abar.grid, ball);
    if (nodes.empty()) throw std::invalid_argument("ellipticity_bounds: ball contains no grid nodes");

    EllipticityReport rep;
    rep.region = ball;
    rep.time = time;
    rep.c_min = std::numeric_limits<double>::infinity();
    rep.C_max = -std::numeric_limits<double>::infinity();
    for (auto idx : nodes) {
        const auto w = sym3_eigenvalues(coeff.abar.at(idx));
        if (w[0] < rep.c_min) {
            rep.c_min = w[0];
            rep.argmin_node = idx;
        }
        if (w[2] > rep.C_max) {
            rep.C_max = w[2];
            rep.argmax_node = idx;
        }
    }
    return rep;
}

}  // namespace landau
