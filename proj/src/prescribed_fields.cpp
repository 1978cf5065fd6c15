#include "rvm/prescribed_fields.hpp"

#include <stdexcept>

#include "rvm/rng.hpp"

namespace rvm {

PrescribedField PrescribedField::uniform_b(double amplitude) {
    PrescribedField f;
    f.kind_ = Kind::UniformB;
    f.amp_ = amplitude;
    f.desc_ = "uniform-B(" + std::to_string(amplitude) + ")";
    return f;
}

PrescribedField PrescribedField::uniform_e(double amplitude) {
    PrescribedField f;
    f.kind_ = Kind::UniformE;
    f.amp_ = amplitude;
    f.desc_ = "uniform-E(" + std::to_string(amplitude) + ")";
    return f;
}

PrescribedField PrescribedField::plane_wave(double amplitude, double wavenumber) {
    PrescribedField f;
    f.kind_ = Kind::PlaneWave;
    f.amp_ = amplitude;
    f.wavenumber_ = wavenumber;
    f.desc_ = "plane-wave(amp=" + std::to_string(amplitude) + ",k=" + std::to_string(wavenumber) + ")";
    return f;
}

PrescribedField PrescribedField::gaussian_pulse(double amplitude, double sigma, const Vec3& center, double base_b) {
    PrescribedField f;
    f.kind_ = Kind::GaussianPulse;
    f.amp_ = amplitude;
    f.sigma_ = sigma;
    f.center_ = center;
    f.base_b_ = base_b;
    f.desc_ = "gaussian-pulse(amp=" + std::to_string(amplitude) + ",sigma=" + std::to_string(sigma) + ")";
    return f;
}

PrescribedField PrescribedField::random_fourier(std::uint64_t seed) {
    PrescribedField f;
    f.kind_ = Kind::RandomFourier;
    f.base_b_ = 1.0;
    SplitMix64 rng(0x5eedf1e1d5ULL ^ (seed * 0x9e3779b97f4a7c15ULL + 1));
    for (int m = 0; m < 4; ++m) {
        Mode mode;
        mode.k = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        mode.omega = rng.uniform(0.5, 2.0);
        mode.amp_e = 0.15 * rng.unit_vector();
        mode.amp_b = 0.15 * rng.unit_vector();
        mode.phase_e = rng.uniform(0.0, 2.0 * std::numbers::pi);
        mode.phase_b = rng.uniform(0.0, 2.0 * std::numbers::pi);
        f.modes_.push_back(mode);
    }
    f.desc_ = "random-fourier(seed=" + std::to_string(seed) + ")";
    return f;
}

PrescribedField PrescribedField::by_name(const std::string& kind, std::uint64_t seed) {
    if (kind == "uniform-B") return uniform_b(1.0);
    if (kind == "uniform-E") return uniform_e(1.0);
    if (kind == "plane-wave") return plane_wave(1.0, 1.0);
    if (kind == "Gaussian-pulse") return gaussian_pulse(1.0, 1.0, Vec3{0, 0, 0}, 0.5);
    if (kind == "random-Fourier") return random_fourier(seed);
    throw std::invalid_argument("unknown prescribed field kind: " + kind);
}

FieldSample PrescribedField::operator()(const Vec3& x, double t) const {
    switch (kind_) {
        case Kind::UniformB:
            return {Vec3{0, 0, 0}, Vec3{0, 0, amp_}};
        case Kind::UniformE:
            return {Vec3{amp_, 0, 0}, Vec3{0, 0, 0}};
        case Kind::PlaneWave: {
            const double c = amp_ * std::cos(wavenumber_ * (x.x - t));
            return {Vec3{0, c, 0}, Vec3{0.5 * amp_, 0, c}};
        }
        case Kind::GaussianPulse: {
            const Vec3 d = x - center_;
            const double e = amp_ * std::exp(-squared_norm(d) / (2.0 * sigma_ * sigma_));
            return {Vec3{0, e, 0}, Vec3{0, 0, base_b_}};
        }
        case Kind::RandomFourier: {
            Vec3 e{0, 0, 0};
            Vec3 b{0, 0, base_b_};
            for (const Mode& m : modes_) {
                const double ph = dot(m.k, x) - m.omega * t;
                e += std::cos(ph + m.phase_e) * m.amp_e;
                b += std::cos(ph + m.phase_b) * m.amp_b;
            }
            return {e, b};
        }
    }
    return {};
}

void PrescribedField::gradients(const Vec3& x, double t, Mat3& dE, Mat3& dB) const {
    dE = Mat3{};
    dB = Mat3{};
    switch (kind_) {
        case Kind::UniformB:
        case Kind::UniformE:
            return;
        case Kind::PlaneWave: {
            const double s = -amp_ * wavenumber_ * std::sin(wavenumber_ * (x.x - t));
            dE(1, 0) = s;  // dE_y/dx
            dB(2, 0) = s;  // dB_z/dx
            return;
        }
        case Kind::GaussianPulse: {
            const Vec3 d = x - center_;
            const double e = amp_ * std::exp(-squared_norm(d) / (2.0 * sigma_ * sigma_));
            const double inv = 1.0 / (sigma_ * sigma_);
            dE(1, 0) = -e * d.x * inv;
            dE(1, 1) = -e * d.y * inv;
            dE(1, 2) = -e * d.z * inv;
            return;
        }
        case Kind::RandomFourier: {
            for (const Mode& m : modes_) {
                const double ph = dot(m.k, x) - m.omega * t;
                const double se = -std::sin(ph + m.phase_e);
                const double sb = -std::sin(ph + m.phase_b);
                const double kx[3] = {m.k.x, m.k.y, m.k.z};
                const double ae[3] = {m.amp_e.x, m.amp_e.y, m.amp_e.z};
                const double ab[3] = {m.amp_b.x, m.amp_b.y, m.amp_b.z};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        dE(i, j) += ae[i] * se * kx[j];
                        dB(i, j) += ab[i] * sb * kx[j];
                    }
            }
            return;
        }
    }
}

std::vector<PrescribedField> field_battery(int count, std::uint64_t seed) {
    std::vector<PrescribedField> fields;
    fields.reserve(static_cast<std::size_t>(count));
    SplitMix64 rng(0xba77e21ULL ^ (seed * 0x9e3779b97f4a7c15ULL + 0x3ULL));
    for (int i = 0; i < count; ++i) {
        switch (i % 5) {
            case 0:
                fields.push_back(PrescribedField::uniform_b(rng.uniform(0.5, 2.0)));
                break;
            case 1:
                fields.push_back(PrescribedField::uniform_e(rng.uniform(0.3, 1.5)));
                break;
            case 2:
                fields.push_back(PrescribedField::plane_wave(rng.uniform(0.5, 1.5), rng.uniform(0.5, 2.0)));
                break;
            case 3:
                fields.push_back(PrescribedField::gaussian_pulse(rng.uniform(0.5, 1.5), rng.uniform(0.7, 2.0),
                                                                 rng.vector_in_ball(1.0), rng.uniform(0.3, 1.0)));
                break;
            default:
                fields.push_back(PrescribedField::random_fourier(rng.next()));
                break;
        }
    }
    return fields;
}

}  // namespace rvm
