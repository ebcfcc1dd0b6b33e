#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wolfpack::wec {

// Rigid-body properties of the bottom-hinged flap (pitch about the hinge).
struct BodyProps {
    double inertia = 1.85e6;      // pitch inertia I [kg m^2]
    double flap_mass = 127000.0;  // [kg], informational
    double restoring = 6.4e6;     // hydrostatic restoring Kp [N m/rad]
    double cg_z = -3.9;           // [m], informational

    void validate() const;
};

// Frequency-tabulated hydrodynamic coefficients, normally produced by a BEM
// solver and supplied here as data. All arrays share the strictly ascending
// omega grid. exc_amp is the excitation torque amplitude per metre of wave
// amplitude; exc_phase its phase.
struct HydroCoeffs {
    std::vector<double> omega;        // [rad/s]
    std::vector<double> added_mass;   // A(omega) [kg m^2]
    std::vector<double> rad_damping;  // B(omega) [N m s/rad], >= 0
    std::vector<double> exc_amp;      // [N m / m]
    std::vector<double> exc_phase;    // [rad]
    double a_inf = 0.0;               // added mass at infinite frequency [kg m^2]

    void validate() const;
    double min_omega() const { return omega.front(); }
    double max_omega() const { return omega.back(); }
    bool covers(double w) const { return w >= min_omega() && w <= max_omega(); }

    // Linear interpolation on the grid; throws std::domain_error outside it.
    double exc_amp_at(double w) const;
    double exc_phase_at(double w) const;
};

// Documented stand-in for solver output, pinned so tests can rely on it:
// omega on [0.1, 3.2] rad/s step 0.05, Gaussian-bumped added mass and
// radiation damping, smooth excitation amplitude with a mild phase lag, and
// a_inf = A(omega_max). Scaled so the default PTO search space contains both
// feasible and infeasible operating points.
HydroCoeffs synthetic_coeffs_default();

// CSV with columns omega_rad_s, added_mass_kgm2, rad_damping_Nms_rad,
// exc_amp_Nm_per_m, exc_phase_rad. A sidecar key line "# a_inf_kgm2=<value>"
// may precede the header (required when loading unless `a_inf_fallback` is
// given).
HydroCoeffs load_coeffs_csv(const std::string& path);
void write_coeffs_csv(const HydroCoeffs& coeffs, std::ostream& out);

// Radiation impulse response Kr(tau) = (2/pi) Int B(w) cos(w tau) dw by
// trapezoidal quadrature over the coefficient grid (B taken as zero outside
// it). tau_grid must be ascending and non-negative.
std::vector<double> radiation_irf(const HydroCoeffs& coeffs, const std::vector<double>& tau_grid);

}  // namespace wolfpack::wec
