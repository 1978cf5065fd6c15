#pragma once

#include <stdexcept>
#include <string>

#include "rvm/kinematics.hpp"

namespace rvm {

/// Smallest admissible envelope rate for given (M, R0):
/// A >= (3 + 2 R0) / ((M - 2) R0^2).
inline double min_admissible_A(double M, double R0) {
    return (3.0 + 2.0 * R0) / ((M - 2.0) * R0 * R0);
}

/// Constants of the radiation reaction force and of the envelope estimates.
/// The cutoff outer radius is tied to the inner one, R1 = R0 + 1.
struct ForceParams {
    double M = 3.0;
    double R0 = 1.0;
    double R1 = 2.0;
    double A = 5.0;

    static ForceParams make(double M, double R0, double A) {
        if (!(M > 2.0))
            throw std::invalid_argument("ForceParams: M > 2 required (got " + std::to_string(M) + ")");
        if (!(R0 >= 0.5))
            throw std::invalid_argument("ForceParams: R0 >= 1/2 required (got " + std::to_string(R0) +
                                        "); the cutoff growth bound 1 - chi(r) <= 2r fails below 1/2");
        const double a_min = min_admissible_A(M, R0);
        if (!(A >= a_min))
            throw std::invalid_argument("ForceParams: A = " + std::to_string(A) +
                                        " is below the minimal admissible value " + std::to_string(a_min) +
                                        " for M = " + std::to_string(M) + ", R0 = " + std::to_string(R0));
        ForceParams fp;
        fp.M = M;
        fp.R0 = R0;
        fp.R1 = R0 + 1.0;
        fp.A = A;
        return fp;
    }

    /// As make(), but lets an out-of-range A through (for counterexample runs).
    static ForceParams make_unchecked_A(double M, double R0, double A) {
        ForceParams fp = make(M, R0, min_admissible_A(M, R0));
        fp.A = A;
        return fp;
    }
};

/// Smooth cutoff: chi = 1 on [0, R0], 0 on [R1, inf). Quintic smoothstep in
/// between, so chi is C^2 with max |chi'| = 1.875 / (R1 - R0) <= 2.
inline double chi(double r, const ForceParams& fp) {
    if (r < 0.0) throw std::domain_error("chi: momentum magnitude must be nonnegative");
    if (r <= fp.R0) return 1.0;
    if (r >= fp.R1) return 0.0;
    const double u = (r - fp.R0) / (fp.R1 - fp.R0);
    return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

inline double chi_prime(double r, const ForceParams& fp) {
    if (r < 0.0) throw std::domain_error("chi_prime: momentum magnitude must be nonnegative");
    if (r <= fp.R0 || r >= fp.R1) return 0.0;
    const double w = fp.R1 - fp.R0;
    const double u = (r - fp.R0) / w;
    const double um = 1.0 - u;
    return -30.0 * u * u * um * um / w;
}

/// Local electromagnetic field values; K is the combined field strength.
struct FieldSample {
    Vec3 E;
    Vec3 B;

    double K() const { return std::sqrt(squared_norm(E) + squared_norm(B)); }
    double K2() const { return squared_norm(E) + squared_norm(B); }
};

inline Vec3 lorentz_force(const FieldSample& fs, const Vec3& p) {
    return fs.E + cross(velocity(p), fs.B);
}

/// F_R = -chi(|p|) E - M K p. Damps momentum, contracts phase volume.
inline Vec3 radiation_force(const FieldSample& fs, const Vec3& p, const ForceParams& fp) {
    return -chi(norm(p), fp) * fs.E - (fp.M * fs.K()) * p;
}

/// F = F_L + F_R. Vanishes identically at p = 0 (chi(0) = 1 cancels E exactly).
inline Vec3 total_force(const FieldSample& fs, const Vec3& p, const ForceParams& fp) {
    return lorentz_force(fs, p) + radiation_force(fs, p, fp);
}

/// div_p F = -3 M K - chi'(|p|) (E . p_hat); the p -> 0 limit is -3 M K.
inline double div_p_force(const FieldSample& fs, const Vec3& p, const ForceParams& fp) {
    double d = -3.0 * fp.M * fs.K();
    const double r = norm(p);
    if (r > 0.0) {
        const double cp = chi_prime(r, fp);
        if (cp != 0.0) d -= cp * dot(fs.E, p) / r;
    }
    return d;
}

/// Left side of the sign condition (3/|p| + A) F.p_hat - div_p F; the tested
/// property is that it is nonpositive whenever A is admissible.
inline double condA_residual(const FieldSample& fs, const Vec3& p, const ForceParams& fp) {
    const double r = norm(p);
    if (r == 0.0)
        throw std::domain_error("condA_residual: undefined at p = 0 (3/|p| singular); use the p -> 0 limit");
    const Vec3 f = total_force(fs, p, fp);
    return (3.0 / r + fp.A) * (dot(f, p) / r) - div_p_force(fs, p, fp);
}

/// Alternate reaction forces from the physics literature. Both are quadratic
/// in the fields and vanish at p = 0.
enum class AltForceKind { LandauLifshitz, InverseCompton };

inline Vec3 alt_force(AltForceKind kind, const FieldSample& fs, const Vec3& p, double h) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw std::invalid_argument("alt_force: reaction intensity h must be positive and finite");
    const double g = lorentz_gamma(p);
    const Vec3 v = p / g;
    switch (kind) {
        case AltForceKind::LandauLifshitz: {
            const Vec3 fl = fs.E + cross(v, fs.B);
            const double ve = dot(v, fs.E);
            return (-h * g * g * (squared_norm(fl) - ve * ve)) * v;
        }
        case AltForceKind::InverseCompton:
            return (-h * g * g * fs.K2()) * v;
    }
    throw std::invalid_argument("alt_force: unknown force kind");
}

}  // namespace rvm
