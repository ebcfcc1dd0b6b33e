#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "wolfpack/hydro.hpp"

namespace wolfpack::wec {

// Monochromatic sea state: height H [m] (trough to crest), period T [s].
// H = 0 is allowed and produces zero forcing.
struct RegularWave {
    double height = 2.5;
    double period = 8.0;
};

// Pierson-Moskowitz sea state characterized by (Hs, Tp), synthesized as a
// superposition of `components` equal-bandwidth regular waves over
// [0.25 wp, 4 wp] (clipped to the coefficient grid) with phases drawn from
// phase_seed.
struct IrregularWave {
    double hs = 2.5;
    double tp = 8.0;
    int components = 200;
    std::uint64_t phase_seed = 0;
};

using WaveSpec = std::variant<RegularWave, IrregularWave>;

// Half-cosine fade-in over [0, ramp]; 1 afterwards (and for ramp == 0).
double ramp_factor(double t, double ramp);

// Pierson-Moskowitz variance density S(w) for significant height hs and peak
// period tp: (5/16) hs^2 wp^4 w^-5 exp(-1.25 (wp/w)^4).
double pm_spectrum(double omega, double hs, double tp);

// Excitation torque synthesizer bound to a coefficient table and a sea
// state. Construction validates frequency coverage and fixes the component
// table, so torque(t) is cheap and the object is immutable afterwards.
class ExcitationModel {
public:
    ExcitationModel(const HydroCoeffs& coeffs, const WaveSpec& wave);

    // Torque [N m] at time t with the fade-in applied.
    double torque(double t, double ramp) const;

    const std::vector<double>& component_omegas() const { return omegas_; }
    const std::vector<double>& component_amplitudes() const { return amps_; }

private:
    std::vector<double> omegas_;  // component frequencies
    std::vector<double> amps_;    // torque amplitude per component
    std::vector<double> phases_;  // total phase offset per component
};

// Regular-wave torque at one instant: ramp(t) * (H/2) * Aexc(w) *
// cos(w t + phase(w)) with w = 2 pi / period. Throws std::domain_error when
// w falls outside the coefficient grid.
double excitation_regular(const HydroCoeffs& coeffs, double height, double period, double t,
                          double ramp);

// Irregular superposition with component amplitudes sqrt(2 S(w_j) dw) and
// random phases from phase_seed (drawn in ascending-frequency order).
double excitation_irregular(const HydroCoeffs& coeffs, double hs, double tp, int components,
                            std::uint64_t phase_seed, double t, double ramp);

}  // namespace wolfpack::wec
