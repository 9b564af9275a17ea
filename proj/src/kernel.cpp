#include "landau/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau {

namespace {

constexpr double kPi = std::numbers::pi;

double require_nonzero(const Vec3& z) {
    const double r = z.norm();
    if (r == 0.0) throw std::domain_error("Coulomb kernel is singular at z = 0");
    return r;
}

double delta(int i, int j) { return i == j ? 1.0 : 0.0; }

}  // namespace

SymMat3 pi_matrix(const Vec3& z) {
    const double r = require_nonzero(z);
    const Vec3 u = z * (1.0 / r);
    SymMat3 p;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) p.at(i, j) = delta(i, j) - u[i] * u[j];
    return p;
}

SymMat3 a_kernel(const Vec3& z) {
    const double r = require_nonzero(z);
    return pi_matrix(z) * (1.0 / r);
}

Vec3 b_kernel(const Vec3& z) {
    const double r = require_nonzero(z);
    const double s = -2.0 / (r * r * r);
    return z * s;
}

Rank3Sym grad_a_kernel(const Vec3& z) {
    const double r = require_nonzero(z);
    const double inv3 = 1.0 / (r * r * r);
    const double inv5 = inv3 / (r * r);
    Rank3Sym g;
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                g.at(k, i, j) = -(delta(i, j) * z[k] + delta(i, k) * z[j] + delta(j, k) * z[i]) * inv3 +
                                3.0 * z[i] * z[j] * z[k] * inv5;
    return g;
}

Rank4Sym hess_angular_part(const Vec3& u) {
    Rank4Sym h;
    for (int k = 0; k < 3; ++k)
        for (int l = k; l < 3; ++l)
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) {
                    const double dsum =
                        delta(i, j) * delta(k, l) + delta(i, k) * delta(j, l) + delta(j, k) * delta(i, l);
                    const double pair = delta(i, j) * u[k] * u[l] + delta(i, k) * u[j] * u[l] +
                                        delta(j, k) * u[i] * u[l] + delta(i, l) * u[j] * u[k] +
                                        delta(j, l) * u[i] * u[k] + delta(k, l) * u[i] * u[j];
                    h.at(k, l, i, j) = -dsum + 3.0 * pair - 15.0 * u[i] * u[j] * u[k] * u[l];
                }
    return h;
}

Rank4Sym hess_a_kernel(const Vec3& z) {
    const double r = require_nonzero(z);
    return hess_angular_part(z * (1.0 / r)) * (1.0 / (r * r * r));
}

SphereQuadrature::SphereQuadrature(int nodes_per_angle) {
    if (nodes_per_angle < 2) throw std::invalid_argument("sphere quadrature needs >= 2 nodes per angle");
    const int n = nodes_per_angle;

    // Gauss-Legendre nodes on [-1,1] by Newton iteration on P_n.
    std::vector<double> xs(n), ws(n);
    for (int k = 0; k < n; ++k) {
        double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        xs[k] = x;
        ws[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }

    points.reserve(static_cast<size_t>(n) * n);
    weights.reserve(static_cast<size_t>(n) * n);
    const double wphi = 2.0 * kPi / n;
    for (int a = 0; a < n; ++a) {
        const double ct = xs[a];
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        for (int b = 0; b < n; ++b) {
            const double phi = wphi * b;
            points.push_back({st * std::cos(phi), st * std::sin(phi), ct});
            weights.push_back(ws[a] * wphi);
        }
    }
}

double sphere_moment(int order, std::span<const int> indices, int nodes_per_angle) {
    if (order != 2 && order != 4) throw std::invalid_argument("sphere_moment: order must be 2 or 4");
    if (static_cast<int>(indices.size()) != order)
        throw std::invalid_argument("sphere_moment: index count must equal the order");
    for (int idx : indices)
        if (idx < 0 || idx > 2) throw std::invalid_argument("sphere_moment: indices must lie in {0,1,2}");

    const SphereQuadrature quad(nodes_per_angle);
    double sum = 0.0;
    for (size_t p = 0; p < quad.points.size(); ++p) {
        double mono = 1.0;
        for (int idx : indices) mono *= quad.points[p][idx];
        sum += mono * quad.weights[p];
    }
    return sum;
}

double mu_mean_zero_check(int nodes_per_angle) {
    if (nodes_per_angle < 16) throw std::invalid_argument("mu_mean_zero_check: need >= 16 nodes per angle");
    const SphereQuadrature quad(nodes_per_angle);

    std::array<double, 36> sums{};
    for (size_t p = 0; p < quad.points.size(); ++p) {
        const Rank4Sym mu = hess_angular_part(quad.points[p]);
        for (int c = 0; c < 36; ++c) sums[c] += mu.m[c] * quad.weights[p];
    }
    double worst = 0.0;
    for (double s : sums) worst = std::max(worst, std::abs(s));
    return worst;
}

}  // namespace landau
