#include "landau/eig3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace landau {

namespace {

std::array<double, 3> jacobi_eigenvalues(SymMat3 a) {
    // Cyclic Jacobi on the 3x3, eigenvalues only.
    for (int sweep = 0; sweep < 64; ++sweep) {
        const double off2 = a.m[3] * a.m[3] + a.m[4] * a.m[4] + a.m[5] * a.m[5];
        const double diag2 = a.m[0] * a.m[0] + a.m[1] * a.m[1] + a.m[2] * a.m[2];
        if (off2 <= 1e-30 * (diag2 + 1e-300)) break;
        static constexpr int pq[3][2] = {{0, 1}, {0, 2}, {1, 2}};
        for (auto [p, q] : pq) {
            const double apq = a(p, q);
            if (apq == 0.0) continue;
            const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
            const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            const int r = 3 - p - q;  // remaining index
            const double app = a(p, p), aqq = a(q, q), apr = a(p, r), aqr = a(q, r);
            a.at(p, p) = app - t * apq;
            a.at(q, q) = aqq + t * apq;
            a.at(p, q) = 0.0;
            a.at(p, r) = c * apr - s * aqr;
            a.at(q, r) = s * apr + c * aqr;
        }
    }
    std::array<double, 3> w{a.m[0], a.m[1], a.m[2]};
    std::sort(w.begin(), w.end());
    return w;
}

double det3(const SymMat3& a) {
    return a.m[0] * (a.m[1] * a.m[2] - a.m[5] * a.m[5]) - a.m[3] * (a.m[3] * a.m[2] - a.m[5] * a.m[4]) +
           a.m[4] * (a.m[3] * a.m[5] - a.m[1] * a.m[4]);
}

}  // namespace

std::array<double, 3> sym3_eigenvalues(const SymMat3& a) {
    const double q = a.trace() / 3.0;
    SymMat3 b = a;
    b.m[0] -= q;
    b.m[1] -= q;
    b.m[2] -= q;

    double frob2 = 0.0;
    for (int i = 0; i < 3; ++i) frob2 += b.m[i] * b.m[i];
    for (int i = 3; i < 6; ++i) frob2 += 2.0 * b.m[i] * b.m[i];
    const double p = std::sqrt(frob2 / 6.0);

    if (p <= 1e-150 || p <= 1e-14 * std::abs(q)) return {q, q, q};

    const double r = std::clamp(det3(b) / (2.0 * p * p * p), -1.0, 1.0);

    // Near-degenerate spectrum: the cubic discriminant ~ p^6 (1 - r^2)
    // vanishes; hand off to Jacobi for accuracy.
    if (1.0 - r * r < 1e-12) return jacobi_eigenvalues(a);

    const double phi = std::acos(r) / 3.0;
    const double big = q + 2.0 * p * std::cos(phi);
    const double small = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    const double mid = 3.0 * q - big - small;
    std::array<double, 3> w{small, mid, big};
    std::sort(w.begin(), w.end());
    return w;
}

}  // namespace landau
