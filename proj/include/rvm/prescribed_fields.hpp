#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rvm/force.hpp"
#include "rvm/vec3.hpp"

namespace rvm {

/// Catalog of smooth space-time test fields for characteristic tracing.
/// Every entry exposes analytic spatial gradients for the force-gradient
/// bound checks. The battery variants keep K > 0 everywhere.
class PrescribedField {
public:
    static PrescribedField uniform_b(double amplitude);
    static PrescribedField uniform_e(double amplitude);
    /// Linearly polarized vacuum wave along x, plus a constant longitudinal
    /// B_x = amplitude/2 (still an exact vacuum solution, and K > 0).
    static PrescribedField plane_wave(double amplitude, double wavenumber);
    /// Static Gaussian E_y blob centered at `center`, over a uniform B_z floor.
    static PrescribedField gaussian_pulse(double amplitude, double sigma, const Vec3& center, double base_b);
    /// Superposition of a few seeded traveling Fourier modes in E and B over
    /// a uniform B_z floor. Deterministic across platforms for a fixed seed.
    static PrescribedField random_fourier(std::uint64_t seed);

    /// Catalog lookup for configs; throws std::invalid_argument on unknown kind.
    static PrescribedField by_name(const std::string& kind, std::uint64_t seed);

    FieldSample operator()(const Vec3& x, double t) const;

    /// dE(i,j) = dE_i/dx_j and likewise dB, evaluated analytically.
    void gradients(const Vec3& x, double t, Mat3& dE, Mat3& dB) const;

    const std::string& description() const { return desc_; }

private:
    enum class Kind { UniformB, UniformE, PlaneWave, GaussianPulse, RandomFourier };

    struct Mode {
        Vec3 amp_e, amp_b, k;
        double omega = 0.0, phase_e = 0.0, phase_b = 0.0;
    };

    Kind kind_ = Kind::UniformB;
    double amp_ = 1.0;
    double wavenumber_ = 1.0;
    double sigma_ = 1.0;
    double base_b_ = 0.0;
    Vec3 center_{};
    std::vector<Mode> modes_;
    std::string desc_;
};

/// Deterministic battery of `count` fields with K > 0, cycling the catalog
/// with seeded parameters. Entry i is fully determined by (seed, i).
std::vector<PrescribedField> field_battery(int count, std::uint64_t seed);

}  // namespace rvm
