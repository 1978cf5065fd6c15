#pragma once

#include "rvm/vec3.hpp"

namespace rvm {

/// Lorentz factor [p] = sqrt(1 + |p|^2). Stable for |p| up to ~1e150.
inline double lorentz_gamma(const Vec3& p) {
    const double s = squared_norm(p);
    if (s < 1e300) return std::sqrt(1.0 + s);
    return std::hypot(1.0, norm(p));
}

/// v = p / [p]. Strictly subluminal: |v| < 1 for every finite p.
inline Vec3 velocity(const Vec3& p) { return p / lorentz_gamma(p); }

/// dv/dp = (I - v (x) v) / [p]. Symmetric positive semidefinite; the
/// eigenvalue along p is [p]^-3, the two transverse ones are [p]^-1.
inline Mat3 velocity_jacobian(const Vec3& p) {
    const double g = lorentz_gamma(p);
    const Vec3 v = p / g;
    Mat3 jac = Mat3::identity() - Mat3::outer(v, v);
    for (double& e : jac.a) e /= g;
    return jac;
}

}  // namespace rvm
