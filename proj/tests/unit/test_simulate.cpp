#include <stdexcept>
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "wolfpack/simulate.hpp"

using namespace wolfpack::wec;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

SimConfig fast_sim() {
    SimConfig sim;
    sim.t_end = 200.0;
    sim.ramp = 50.0;
    sim.memory = 15.0;
    return sim;
}

}  // namespace

TEST_CASE("pto force and power arithmetic") {
    const PtoParams pto = PtoParams::from_mega(54.46, 75.58);
    CHECK(pto.stiffness == doctest::Approx(54.46e6));
    CHECK(pto.damping == doctest::Approx(75.58e6));
    CHECK(pto_force(pto, 0.0, 0.0) == 0.0);
    CHECK(pto_force(pto, 0.1, 0.05) == doctest::Approx(9.225e6).epsilon(1e-12));
    CHECK(pto_power(pto, 0.1, 0.05) == doctest::Approx(4.6125e5).epsilon(1e-12));
    CHECK(pto_power(pto, 0.3, 0.0) == 0.0);
    const PtoParams damper = PtoParams::from_mega(0.0, 12.0);
    CHECK(pto_power(damper, 0.2, -0.3) == doctest::Approx(12.0e6 * 0.09));
    CHECK(pto_power(damper, 0.2, -0.3) >= 0.0);
    const PtoParams spring = PtoParams::from_mega(3.0, 0.0);
    CHECK(pto_force(spring, 0.2, 9.9) == doctest::Approx(3.0e6 * 0.2));
    CHECK_THROWS_AS(PtoParams::from_mega(-1.0, 0.0).validate(), std::invalid_argument);
}

TEST_CASE("no wave means no motion") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    const auto res = simulate(body, coeffs, PtoParams::from_mega(10, 20),
                              RegularWave{0.0, 8.0}, fast_sim());
    for (double th : res.theta) CHECK(th == 0.0);
    for (double p : res.power) CHECK(p == 0.0);
    CHECK(res.summary.mean_power == 0.0);
    CHECK(res.summary.max_rotation_deg == 0.0);
}

TEST_CASE("response is linear in wave height") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    const PtoParams pto = PtoParams::from_mega(20, 60);
    const auto one = simulate(body, coeffs, pto, RegularWave{1.0, 8.0}, fast_sim());
    const auto two = simulate(body, coeffs, pto, RegularWave{2.0, 8.0}, fast_sim());
    // theta is pointwise doubled, power quadrupled
    for (std::size_t k = 0; k < one.theta.size(); k += 97)
        CHECK(two.theta[k] == doctest::Approx(2.0 * one.theta[k]).epsilon(1e-9));
    CHECK(two.summary.mean_power ==
          doctest::Approx(4.0 * one.summary.mean_power).epsilon(1e-9));
}

TEST_CASE("steady-state mean power equals C mean(theta_dot^2) over whole periods") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    const PtoParams pto = PtoParams::from_mega(20, 40);
    SimConfig sim;  // default 400 s / 100 s ramp / 0.1 s step
    const auto res = simulate(body, coeffs, pto, RegularWave{2.0, 8.0}, sim);
    // 24 whole periods starting 100 s after the ramp
    const std::size_t i0 = 2000, count = 24 * 80;
    double mean_p = 0.0, mean_v2 = 0.0;
    for (std::size_t i = i0; i < i0 + count; ++i) {
        mean_p += res.power[i];
        mean_v2 += res.theta_dot[i] * res.theta_dot[i];
    }
    mean_p /= count;
    mean_v2 /= count;
    CHECK(mean_p == doctest::Approx(pto.damping * mean_v2).epsilon(0.01));
}

TEST_CASE("zero radiation damping reduces the radiation torque to -Ainf thdd") {
    const BodyProps body;
    HydroCoeffs coeffs = synthetic_coeffs_default();
    for (auto& b : coeffs.rad_damping) b = 0.0;
    const auto res = simulate(body, coeffs, PtoParams::from_mega(20, 40),
                              RegularWave{2.0, 8.0}, fast_sim());
    for (std::size_t k = 0; k < res.theta.size(); ++k)
        CHECK(res.f_rad[k] == -coeffs.a_inf * res.theta_ddot[k]);
}

TEST_CASE("halving dt barely moves the post-ramp mean power") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    const PtoParams pto = PtoParams::from_mega(20, 40);
    SimConfig coarse = fast_sim();
    SimConfig fine = coarse;
    fine.dt = 0.05;
    const auto a = simulate(body, coeffs, pto, RegularWave{2.0, 8.0}, coarse);
    const auto b = simulate(body, coeffs, pto, RegularWave{2.0, 8.0}, fine);
    CHECK(std::fabs(a.summary.mean_power - b.summary.mean_power) <
          0.005 * std::fabs(a.summary.mean_power));
}

TEST_CASE("free decay dissipates mechanical energy") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    SimConfig sim;
    sim.ramp = 0.0;
    sim.theta0 = 10.0 * kDeg;
    const auto res = simulate(body, coeffs, PtoParams{}, RegularWave{0.0, 8.0}, sim);

    const double inertia = body.inertia + coeffs.a_inf;
    auto energy = [&](std::size_t k) {
        return 0.5 * inertia * res.theta_dot[k] * res.theta_dot[k] +
               0.5 * body.restoring * res.theta[k] * res.theta[k];
    };
    const double e0 = energy(0);
    REQUIRE(e0 > 0.0);
    // never above the initial energy, and decaying at excursion peaks
    double last_peak = e0 * (1.0 + 1e-9);
    int peaks = 0;
    for (std::size_t k = 1; k + 1 < res.theta.size(); ++k) {
        CHECK(energy(k) <= e0 * (1.0 + 1e-9));
        const double a0 = std::fabs(res.theta[k - 1]);
        const double a1 = std::fabs(res.theta[k]);
        const double a2 = std::fabs(res.theta[k + 1]);
        if (a1 >= a0 && a1 > a2) {
            const double e = energy(k);
            CHECK(e <= last_peak * (1.0 + 1e-9));
            last_peak = e;
            ++peaks;
        }
    }
    CHECK(peaks > 10);
    CHECK(energy(res.theta.size() - 1) < 0.05 * e0);  // radiation drained it
}

TEST_CASE("diverging integration reports an error") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    SimConfig sim;
    sim.dt = 1.0;  // far beyond the stability limit for a stiff PTO
    sim.t_end = 400.0;
    CHECK_THROWS_AS(simulate(body, coeffs, PtoParams::from_mega(100.0, 0.0),
                             RegularWave{2.5, 8.0}, sim),
                    SimulationError);
}

TEST_CASE("feasibility gate is inclusive at the limit") {
    SimResult res;
    res.theta = {0.0, 26.29 * kDeg, -10.0 * kDeg};
    CHECK(feasibility_check(res, 30.0).feasible);
    CHECK(feasibility_check(res, 30.0).max_rotation_deg == doctest::Approx(26.29));
    res.theta = {30.0 * kDeg};
    CHECK(feasibility_check(res, 30.0).max_rotation_deg <= 30.0);
    CHECK(feasibility_check(res, 30.0).feasible);  // boundary included
    res.theta = {31.0 * kDeg};
    CHECK_FALSE(feasibility_check(res, 30.0).feasible);
}

TEST_CASE("summary statistics are recomputable from the series") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    const SimConfig sim = fast_sim();
    const auto res = simulate(body, coeffs, PtoParams::from_mega(5, 30),
                              RegularWave{2.0, 8.0}, sim);
    double max_rot = 0.0, mean_p = 0.0;
    long long n = 0;
    for (std::size_t k = 0; k < res.time.size(); ++k) {
        if (!(res.time[k] > sim.ramp)) continue;
        max_rot = std::max(max_rot, std::fabs(res.theta[k]) / kDeg);
        mean_p += res.power[k];
        ++n;
    }
    CHECK(res.summary.max_rotation_deg == doctest::Approx(max_rot));
    CHECK(res.summary.mean_power == doctest::Approx(mean_p / n));
}

TEST_CASE("series csv layout") {
    const BodyProps body;
    const HydroCoeffs coeffs = synthetic_coeffs_default();
    SimConfig sim = fast_sim();
    sim.t_end = 1.0;
    sim.ramp = 0.5;
    const auto res = simulate(body, coeffs, PtoParams{}, RegularWave{1.0, 8.0}, sim);
    std::ostringstream out;
    write_series_csv(res, out);
    const std::string text = out.str();
    CHECK(text.rfind("t_s,theta_rad,theta_dot_rad_s,f_exc_Nm,f_rad_Nm,f_pto_Nm,power_W\n", 0) ==
          0);
    // header + one row per sample
    std::size_t lines = 0;
    for (char ch : text)
        if (ch == '\n') ++lines;
    CHECK(lines == res.time.size() + 1);
}

TEST_CASE("sim config validation") {
    SimConfig sim;
    sim.ramp = 500.0;
    CHECK_THROWS_AS(sim.validate(), std::invalid_argument);
    sim = SimConfig{};
    sim.dt = 0.0;
    CHECK_THROWS_AS(sim.validate(), std::invalid_argument);
    sim = SimConfig{};
    sim.memory = 0.0;
    CHECK_THROWS_AS(sim.validate(), std::invalid_argument);
}
