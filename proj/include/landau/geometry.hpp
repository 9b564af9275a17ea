#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace landau {

/// Velocity-space point or displacement.
struct Vec3 {
    double x{0.0}, y{0.0}, z{0.0};

    double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    bool operator==(const Vec3&) const = default;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// Symmetric 3x3 matrix, upper triangle stored once.
/// Component order: xx, yy, zz, xy, xz, yz.
struct SymMat3 {
    std::array<double, 6> m{};

    static constexpr int index(int i, int j) {
        if (i == j) return i;
        const int a = i < j ? i : j;
        const int b = i < j ? j : i;
        return a == 0 ? (b == 1 ? 3 : 4) : 5;
    }

    double operator()(int i, int j) const { return m[index(i, j)]; }
    double& at(int i, int j) { return m[index(i, j)]; }

    double trace() const { return m[0] + m[1] + m[2]; }

    Vec3 apply(const Vec3& v) const {
        return {m[0] * v.x + m[3] * v.y + m[4] * v.z,
                m[3] * v.x + m[1] * v.y + m[5] * v.z,
                m[4] * v.x + m[5] * v.y + m[2] * v.z};
    }

    double quad_form(const Vec3& v) const { return v.dot(apply(v)); }

    SymMat3 operator+(const SymMat3& o) const {
        SymMat3 r;
        for (int c = 0; c < 6; ++c) r.m[c] = m[c] + o.m[c];
        return r;
    }
    SymMat3 operator-(const SymMat3& o) const {
        SymMat3 r;
        for (int c = 0; c < 6; ++c) r.m[c] = m[c] - o.m[c];
        return r;
    }
    SymMat3 operator*(double s) const {
        SymMat3 r;
        for (int c = 0; c < 6; ++c) r.m[c] = m[c] * s;
        return r;
    }

    static SymMat3 identity() { return SymMat3{{1.0, 1.0, 1.0, 0.0, 0.0, 0.0}}; }
};

/// First derivatives d_k a_ij of a symmetric-matrix kernel: symmetric in (i,j).
struct Rank3Sym {
    std::array<double, 18> m{};  // [k][sym(i,j)]

    double operator()(int k, int i, int j) const { return m[6 * k + SymMat3::index(i, j)]; }
    double& at(int k, int i, int j) { return m[6 * k + SymMat3::index(i, j)]; }
};

/// Second derivatives d_kl a_ij: symmetric in (i,j) and in (k,l).
struct Rank4Sym {
    std::array<double, 36> m{};  // [sym(k,l)][sym(i,j)]

    double operator()(int k, int l, int i, int j) const {
        return m[6 * SymMat3::index(k, l) + SymMat3::index(i, j)];
    }
    double& at(int k, int l, int i, int j) {
        return m[6 * SymMat3::index(k, l) + SymMat3::index(i, j)];
    }

    Rank4Sym operator*(double s) const {
        Rank4Sym r;
        for (int c = 0; c < 36; ++c) r.m[c] = m[c] * s;
        return r;
    }
};

struct Ball {
    Vec3 center{};
    double radius{1.0};

    bool contains(const Vec3& v) const { return (v - center).norm2() <= radius * radius; }
    bool operator==(const Ball&) const = default;
};

/// Time interval x ball: the domain of all local norms.
struct Cylinder {
    double t_start{0.0};
    double t_end{1.0};
    Vec3 center{};
    double radius{1.0};

    Cylinder() = default;
    Cylinder(double t0, double t1, const Vec3& c, double r)
        : t_start(t0), t_end(t1), center(c), radius(r) {
        if (!(t_start < t_end)) throw std::invalid_argument("cylinder: t_start must precede t_end");
        if (!(radius > 0.0)) throw std::invalid_argument("cylinder: radius must be positive");
    }

    Ball ball() const { return Ball{center, radius}; }
    double duration() const { return t_end - t_start; }
    bool operator==(const Cylinder&) const = default;
};

}  // namespace landau
