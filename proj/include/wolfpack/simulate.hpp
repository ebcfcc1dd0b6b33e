#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "wolfpack/hydro.hpp"
#include "wolfpack/wave.hpp"

namespace wolfpack::wec {

// Linear spring-damper power take-off, stored in SI units.
struct PtoParams {
    double stiffness = 0.0;  // K [N m/rad]
    double damping = 0.0;    // C [N m s/rad]

    // User-facing units are MN m/rad and MN s m/rad.
    static PtoParams from_mega(double k_mega, double c_mega) {
        return PtoParams{k_mega * 1e6, c_mega * 1e6};
    }
    void validate() const;
};

// PTO torque K theta + C theta_dot [N m]. It opposes the motion inside the
// equation of motion; this returns the magnitude as defined.
inline double pto_force(const PtoParams& pto, double theta, double theta_dot) {
    return pto.stiffness * theta + pto.damping * theta_dot;
}

// Instantaneous absorbed power (K theta + C theta_dot) theta_dot [W].
inline double pto_power(const PtoParams& pto, double theta, double theta_dot) {
    return pto_force(pto, theta, theta_dot) * theta_dot;
}

struct SimConfig {
    double t_end = 400.0;  // [s]
    double ramp = 100.0;   // excitation fade-in [s]
    double dt = 0.1;       // fixed RK4 step [s]
    double memory = 20.0;  // convolution truncation window [s]
    double theta0 = 0.0;   // initial flap angle [rad]; free-decay studies

    void validate() const;
};

struct SimSummary {
    double max_rotation_deg = 0.0;      // post-ramp max |theta|
    double max_ang_vel_deg_s = 0.0;     // post-ramp max |theta_dot|
    double mean_ang_vel_deg_s = 0.0;    // post-ramp mean |theta_dot|
    double max_pto_force = 0.0;         // post-ramp max |F_pto| [N m]
    double max_power = 0.0;             // post-ramp max P [W]
    double mean_power = 0.0;            // post-ramp mean P [W]
};

struct SimResult {
    std::vector<double> time;        // uniform grid, 0 .. t_end
    std::vector<double> theta;       // [rad]
    std::vector<double> theta_dot;   // [rad/s]
    std::vector<double> theta_ddot;  // [rad/s^2]
    std::vector<double> f_exc;       // excitation torque [N m]
    std::vector<double> f_rad;       // radiation torque -Ainf ddot - conv [N m]
    std::vector<double> f_pto;       // K theta + C theta_dot [N m]
    std::vector<double> f_restoring; // -Kp theta [N m]
    std::vector<double> power;       // F_pto theta_dot [W]
    SimSummary summary;              // statistics over t > ramp
};

class SimulationError : public std::runtime_error {
public:
    explicit SimulationError(const std::string& what) : std::runtime_error(what) {}
};

// Integrates (I + Ainf) th'' = F_exc(t) - Int Kr(t-tau) th'(tau) dtau
//                              - Kp th - (K th + C th')
// with classic fixed-step RK4. The radiation convolution is a trapezoidal
// sum over the stored velocity history, truncated to the memory window; the
// kernel is sampled on a dt/2 grid so RK4 half-stages hit exact samples, and
// the partial segment of the current step interpolates the velocity linearly
// between the step start and the stage value. Initial conditions are
// (theta0, 0); the history before t = 0 is empty.
//
// Throws SimulationError when the state stops being finite (dt too large or
// inconsistent coefficients).
SimResult simulate(const BodyProps& body, const HydroCoeffs& coeffs, const PtoParams& pto,
                   const WaveSpec& wave, const SimConfig& config);

struct FeasibilityReport {
    bool feasible = true;
    double max_rotation_deg = 0.0;  // over the whole record
};

// Flap-excursion gate: feasible iff max over all t of |theta| stays at or
// below theta_limit_deg (inclusive).
FeasibilityReport feasibility_check(const SimResult& result, double theta_limit_deg = 30.0);

// CSV columns: t_s, theta_rad, theta_dot_rad_s, f_exc_Nm, f_rad_Nm, f_pto_Nm, power_W.
void write_series_csv(const SimResult& result, std::ostream& out);

}  // namespace wolfpack::wec
