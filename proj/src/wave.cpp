#include "wolfpack/wave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wolfpack/rng.hpp"

namespace wolfpack::wec {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double ramp_factor(double t, double ramp) {
    if (ramp <= 0.0 || t >= ramp) return 1.0;
    if (t <= 0.0) return 0.0;
    return 0.5 * (1.0 - std::cos(kPi * t / ramp));
}

double pm_spectrum(double omega, double hs, double tp) {
    if (omega <= 0.0) return 0.0;
    const double wp = kTwoPi / tp;
    const double r = wp / omega;
    const double r4 = r * r * r * r;
    return 5.0 / 16.0 * hs * hs * r4 / omega * std::exp(-1.25 * r4);
}

ExcitationModel::ExcitationModel(const HydroCoeffs& coeffs, const WaveSpec& wave) {
    if (const auto* reg = std::get_if<RegularWave>(&wave)) {
        if (reg->height < 0.0) throw std::invalid_argument("RegularWave: height must be >= 0");
        if (!(reg->period > 0.0)) throw std::invalid_argument("RegularWave: period must be > 0");
        const double w = kTwoPi / reg->period;
        // Amplitude/phase lookups throw outside the grid; no extrapolation.
        omegas_ = {w};
        amps_ = {reg->height / 2.0 * coeffs.exc_amp_at(w)};
        phases_ = {coeffs.exc_phase_at(w)};
        return;
    }
    const auto& irr = std::get<IrregularWave>(wave);
    if (irr.hs < 0.0) throw std::invalid_argument("IrregularWave: hs must be >= 0");
    if (!(irr.tp > 0.0)) throw std::invalid_argument("IrregularWave: tp must be > 0");
    if (irr.components < 10)
        throw std::invalid_argument("IrregularWave: need at least 10 components");

    const double wp = kTwoPi / irr.tp;
    const double lo = std::max(0.25 * wp, coeffs.min_omega());
    const double hi = std::min(4.0 * wp, coeffs.max_omega());
    if (!(lo < hi))
        throw std::domain_error("IrregularWave: spectrum band lies outside coefficient grid");

    const int n = irr.components;
    const double dw = (hi - lo) / static_cast<double>(n);
    Xoshiro256pp rng(irr.phase_seed);
    omegas_.resize(n);
    amps_.resize(n);
    phases_.resize(n);
    for (int j = 0; j < n; ++j) {
        const double w = lo + (static_cast<double>(j) + 0.5) * dw;
        omegas_[j] = w;
        amps_[j] = coeffs.exc_amp_at(w) * std::sqrt(2.0 * pm_spectrum(w, irr.hs, irr.tp) * dw);
        phases_[j] = coeffs.exc_phase_at(w) + kTwoPi * rng.uniform();
    }
}

double ExcitationModel::torque(double t, double ramp) const {
    const double r = ramp_factor(t, ramp);
    if (r == 0.0) return 0.0;
    double sum = 0.0;
    for (std::size_t j = 0; j < omegas_.size(); ++j)
        sum += amps_[j] * std::cos(omegas_[j] * t + phases_[j]);
    return r * sum;
}

double excitation_regular(const HydroCoeffs& coeffs, double height, double period, double t,
                          double ramp) {
    const ExcitationModel model(coeffs, RegularWave{height, period});
    return model.torque(t, ramp);
}

double excitation_irregular(const HydroCoeffs& coeffs, double hs, double tp, int components,
                            std::uint64_t phase_seed, double t, double ramp) {
    const ExcitationModel model(coeffs, IrregularWave{hs, tp, components, phase_seed});
    return model.torque(t, ramp);
}

}  // namespace wolfpack::wec
