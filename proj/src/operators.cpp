#include "landau/operators.hpp"

namespace landau {

namespace detail {

void diff_axis(const VelocityGrid& g, const std::vector<double>& in, std::vector<double>& out, int axis) {
    const int n = g.n;
    const double inv2h = 1.0 / (2.0 * g.spacing());
    const std::ptrdiff_t stride[3] = {1, n, static_cast<std::ptrdiff_t>(n) * n};
    const std::ptrdiff_t s = stride[axis];

    // iterate over all lines along `axis`
    const std::ptrdiff_t sa = stride[(axis + 1) % 3];
    const std::ptrdiff_t sb = stride[(axis + 2) % 3];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::ptrdiff_t base = a * sa + b * sb;
            out[base] = (-3.0 * in[base] + 4.0 * in[base + s] - in[base + 2 * s]) * inv2h;
            for (int i = 1; i < n - 1; ++i)
                out[base + i * s] = (in[base + (i + 1) * s] - in[base + (i - 1) * s]) * inv2h;
            const std::ptrdiff_t end = base + (n - 1) * s;
            out[end] = (3.0 * in[end] - 4.0 * in[end - s] + in[end - 2 * s]) * inv2h;
        }
}

void diff2_axis(const VelocityGrid& g, const std::vector<double>& in, std::vector<double>& out, int axis) {
    const int n = g.n;
    const double h = g.spacing();
    const double invh2 = 1.0 / (h * h);
    const std::ptrdiff_t stride[3] = {1, n, static_cast<std::ptrdiff_t>(n) * n};
    const std::ptrdiff_t s = stride[axis];
    const std::ptrdiff_t sa = stride[(axis + 1) % 3];
    const std::ptrdiff_t sb = stride[(axis + 2) % 3];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const std::ptrdiff_t base = a * sa + b * sb;
            out[base] = (2.0 * in[base] - 5.0 * in[base + s] + 4.0 * in[base + 2 * s] - in[base + 3 * s]) * invh2;
            for (int i = 1; i < n - 1; ++i)
                out[base + i * s] =
                    (in[base + (i + 1) * s] - 2.0 * in[base + i * s] + in[base + (i - 1) * s]) * invh2;
            const std::ptrdiff_t end = base + (n - 1) * s;
            out[end] = (2.0 * in[end] - 5.0 * in[end - s] + 4.0 * in[end - 2 * s] - in[end - 3 * s]) * invh2;
        }
}

}  // namespace detail

VectorField gradient(const DistributionField& u) {
    VectorField g(u.grid);
    for (int d = 0; d < 3; ++d) detail::diff_axis(u.grid, u.values, g.comp[d], d);
    return g;
}

DistributionField divergence(const VectorField& w) {
    DistributionField out(w.grid, 0.0);
    std::vector<double> tmp(w.grid.size());
    for (int d = 0; d < 3; ++d) {
        detail::diff_axis(w.grid, w.comp[d], tmp, d);
        for (std::size_t i = 0; i < tmp.size(); ++i) out.values[i] += tmp[i];
    }
    return out;
}

DistributionField second_derivative(const DistributionField& u, int a, int b) {
    DistributionField out(u.grid, u.time);
    if (a == b) {
        detail::diff2_axis(u.grid, u.values, out.values, a);
    } else {
        std::vector<double> tmp(u.grid.size());
        detail::diff_axis(u.grid, u.values, tmp, a);
        detail::diff_axis(u.grid, tmp, out.values, b);
    }
    return out;
}

DistributionField hessian_apply(const MatrixField& m, const DistributionField& u) {
    DistributionField out(u.grid, u.time);
    for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) {
            const DistributionField d = second_derivative(u, a, b);
            const double factor = (a == b) ? 1.0 : 2.0;
            const auto& coeff = m.comp[SymMat3::index(a, b)];
            for (std::size_t i = 0; i < d.values.size(); ++i) out.values[i] += factor * coeff[i] * d.values[i];
        }
    return out;
}

}  // namespace landau
