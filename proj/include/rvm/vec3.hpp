#pragma once

#include <array>
#include <cmath>

namespace rvm {

/// Cartesian 3-vector (momenta, velocities, field components; c = 1 units).
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
constexpr Vec3 operator*(const Vec3& a, double s) { return s * a; }
constexpr Vec3 operator/(const Vec3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

inline Vec3& operator+=(Vec3& a, const Vec3& b) {
    a.x += b.x;
    a.y += b.y;
    a.z += b.z;
    return a;
}

inline Vec3& operator-=(Vec3& a, const Vec3& b) {
    a.x -= b.x;
    a.y -= b.y;
    a.z -= b.z;
    return a;
}

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

constexpr double squared_norm(const Vec3& a) { return dot(a, a); }

/// Euclidean norm, safe against overflow/underflow of the squared norm
/// (momenta up to ~1e150 appear in envelope sampling).
inline double norm(const Vec3& a) {
    const double s = squared_norm(a);
    if (s > 1e-300 && s < 1e300) return std::sqrt(s);
    return std::hypot(std::hypot(a.x, a.y), a.z);
}

inline bool all_finite(const Vec3& a) {
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Row-major 3x3 matrix; enough linear algebra for Jacobians and kernel bounds.
struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

    static Mat3 identity() {
        Mat3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    static Mat3 outer(const Vec3& u, const Vec3& v) {
        Mat3 m;
        const double ux[3] = {u.x, u.y, u.z};
        const double vx[3] = {v.x, v.y, v.z};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = ux[i] * vx[j];
        return m;
    }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 m;
    for (int k = 0; k < 9; ++k) m.a[static_cast<std::size_t>(k)] = a.a[static_cast<std::size_t>(k)] + b.a[static_cast<std::size_t>(k)];
    return m;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 m;
    for (int k = 0; k < 9; ++k) m.a[static_cast<std::size_t>(k)] = a.a[static_cast<std::size_t>(k)] - b.a[static_cast<std::size_t>(k)];
    return m;
}

inline Mat3 operator*(double s, const Mat3& a) {
    Mat3 m;
    for (int k = 0; k < 9; ++k) m.a[static_cast<std::size_t>(k)] = s * a.a[static_cast<std::size_t>(k)];
    return m;
}

inline Vec3 mul(const Mat3& m, const Vec3& v) {
    return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
            m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
            m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

inline double frobenius_norm(const Mat3& m) {
    double s = 0.0;
    for (double e : m.a) s += e * e;
    return std::sqrt(s);
}

inline double max_abs_entry(const Mat3& m) {
    double s = 0.0;
    for (double e : m.a) s = std::max(s, std::abs(e));
    return s;
}

inline bool all_finite(const Mat3& m) {
    for (double e : m.a)
        if (!std::isfinite(e)) return false;
    return true;
}

}  // namespace rvm
