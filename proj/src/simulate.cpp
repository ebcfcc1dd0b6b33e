#include "wolfpack/simulate.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "wolfpack/csvfmt.hpp"

namespace wolfpack::wec {

namespace {
constexpr double kRad2Deg = 180.0 / std::numbers::pi;
}

void PtoParams::validate() const {
    if (stiffness < 0.0 || damping < 0.0)
        throw std::invalid_argument("PtoParams: K and C must be >= 0");
}

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("SimConfig: dt must be > 0");
    if (!(t_end > 0.0)) throw std::invalid_argument("SimConfig: t_end must be > 0");
    if (ramp < 0.0 || ramp >= t_end)
        throw std::invalid_argument("SimConfig: need 0 <= ramp < t_end");
    if (!(memory > 0.0)) throw std::invalid_argument("SimConfig: memory must be > 0");
    if (!std::isfinite(theta0)) throw std::invalid_argument("SimConfig: theta0 must be finite");
}

namespace {

// Radiation memory integral at a stage of step k. c2 counts half-steps into
// the step (0, 1 or 2); v_stage is the stage's trial velocity.
class Convolution {
public:
    Convolution(std::vector<double> kernel_half, double dt)
        : kernel_(std::move(kernel_half)), dt_(dt) {}

    double at(const std::vector<double>& vel, std::size_t k, int c2, double v_stage) const {
        const int m = static_cast<int>(kernel_.size()) - 1;
        double acc = 0.0;
        if (c2 > 0) {
            // Partial segment [t_k, s]: velocity linear between vel[k] and v_stage.
            const double len = 0.5 * dt_ * static_cast<double>(c2);
            acc += 0.5 * len * (kernel_[0] * v_stage + kernel_[c2] * vel[k]);
        }
        for (int j = 1; j <= static_cast<int>(k); ++j) {
            const int far = 2 * j + c2;
            if (far > m) break;  // beyond the memory window
            acc += 0.5 * dt_ *
                   (kernel_[far] * vel[k - j] + kernel_[far - 2] * vel[k - j + 1]);
        }
        return acc;
    }

private:
    std::vector<double> kernel_;  // Kr sampled every dt/2
    double dt_;
};

}  // namespace

SimResult simulate(const BodyProps& body, const HydroCoeffs& coeffs, const PtoParams& pto,
                   const WaveSpec& wave, const SimConfig& config) {
    body.validate();
    coeffs.validate();
    pto.validate();
    config.validate();

    const double dt = config.dt;
    const double h2 = 0.5 * dt;
    const std::size_t n_steps = static_cast<std::size_t>(std::llround(config.t_end / dt));

    // Excitation precomputed on the half grid so each RK4 stage is a lookup.
    const ExcitationModel excitation(coeffs, wave);
    std::vector<double> exc_half(2 * n_steps + 1);
    for (std::size_t j = 0; j < exc_half.size(); ++j)
        exc_half[j] = excitation.torque(static_cast<double>(j) * h2, config.ramp);

    // Radiation kernel on the same half grid, truncated to the memory window.
    const std::size_t m_half = static_cast<std::size_t>(std::ceil(config.memory / h2));
    std::vector<double> tau(m_half + 1);
    for (std::size_t j = 0; j < tau.size(); ++j) tau[j] = static_cast<double>(j) * h2;
    const Convolution conv(radiation_irf(coeffs, tau), dt);

    const double inertia = body.inertia + coeffs.a_inf;
    const double kp = body.restoring;

    SimResult res;
    res.time.resize(n_steps + 1);
    res.theta.resize(n_steps + 1);
    res.theta_dot.resize(n_steps + 1);
    res.theta_ddot.resize(n_steps + 1);
    res.f_rad.resize(n_steps + 1);
    res.theta[0] = config.theta0;
    res.theta_dot[0] = 0.0;

    auto accel = [&](std::size_t exc_idx, double th, double v, double memory_torque) {
        return (exc_half[exc_idx] - memory_torque - kp * th -
                (pto.stiffness * th + pto.damping * v)) /
               inertia;
    };

    for (std::size_t k = 0; k <= n_steps; ++k) {
        res.time[k] = static_cast<double>(k) * dt;
        const double th = res.theta[k];
        const double v = res.theta_dot[k];
        if (!std::isfinite(th) || !std::isfinite(v) || std::fabs(th) > 1.0e3)
            throw SimulationError("simulate: state diverged at t = " + fmt_double(res.time[k]) +
                                  " s (theta = " + fmt_double(th) +
                                  " rad); check coefficients and dt");

        const double conv0 = conv.at(res.theta_dot, k, 0, v);
        const double a1 = accel(2 * k, th, v, conv0);
        res.theta_ddot[k] = a1;
        res.f_rad[k] = -coeffs.a_inf * a1 - conv0;
        if (k == n_steps) break;

        const double k1t = v, k1v = a1;
        const double v2 = v + h2 * k1v;
        const double a2 = accel(2 * k + 1, th + h2 * k1t, v2,
                                conv.at(res.theta_dot, k, 1, v2));
        const double k2t = v + h2 * k1v, k2v = a2;
        const double v3 = v + h2 * k2v;
        const double a3 = accel(2 * k + 1, th + h2 * k2t, v3,
                                conv.at(res.theta_dot, k, 1, v3));
        const double k3t = v + h2 * k2v, k3v = a3;
        const double v4 = v + dt * k3v;
        const double a4 = accel(2 * k + 2, th + dt * k3t, v4,
                                conv.at(res.theta_dot, k, 2, v4));
        const double k4t = v + dt * k3v, k4v = a4;

        res.theta[k + 1] = th + dt / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
        res.theta_dot[k + 1] = v + dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    }

    res.f_exc.resize(n_steps + 1);
    res.f_pto.resize(n_steps + 1);
    res.f_restoring.resize(n_steps + 1);
    res.power.resize(n_steps + 1);
    for (std::size_t k = 0; k <= n_steps; ++k) {
        res.f_exc[k] = exc_half[2 * k];
        res.f_pto[k] = pto_force(pto, res.theta[k], res.theta_dot[k]);
        res.f_restoring[k] = -kp * res.theta[k];
        res.power[k] = res.f_pto[k] * res.theta_dot[k];
    }

    SimSummary& s = res.summary;
    long long count = 0;
    for (std::size_t k = 0; k <= n_steps; ++k) {
        if (!(res.time[k] > config.ramp)) continue;
        s.max_rotation_deg = std::max(s.max_rotation_deg, std::fabs(res.theta[k]) * kRad2Deg);
        s.max_ang_vel_deg_s =
            std::max(s.max_ang_vel_deg_s, std::fabs(res.theta_dot[k]) * kRad2Deg);
        s.mean_ang_vel_deg_s += std::fabs(res.theta_dot[k]) * kRad2Deg;
        s.max_pto_force = std::max(s.max_pto_force, std::fabs(res.f_pto[k]));
        s.max_power = std::max(s.max_power, res.power[k]);
        s.mean_power += res.power[k];
        ++count;
    }
    if (count > 0) {
        s.mean_ang_vel_deg_s /= static_cast<double>(count);
        s.mean_power /= static_cast<double>(count);
    }
    return res;
}

FeasibilityReport feasibility_check(const SimResult& result, double theta_limit_deg) {
    FeasibilityReport report;
    for (double th : result.theta)
        report.max_rotation_deg = std::max(report.max_rotation_deg, std::fabs(th) * kRad2Deg);
    report.feasible = report.max_rotation_deg <= theta_limit_deg;
    return report;
}

void write_series_csv(const SimResult& result, std::ostream& out) {
    out << "t_s,theta_rad,theta_dot_rad_s,f_exc_Nm,f_rad_Nm,f_pto_Nm,power_W\n";
    for (std::size_t k = 0; k < result.time.size(); ++k) {
        out << fmt_double(result.time[k]) << ',' << fmt_double(result.theta[k]) << ','
            << fmt_double(result.theta_dot[k]) << ',' << fmt_double(result.f_exc[k]) << ','
            << fmt_double(result.f_rad[k]) << ',' << fmt_double(result.f_pto[k]) << ','
            << fmt_double(result.power[k]) << '\n';
    }
}

}  // namespace wolfpack::wec
