#pragma once

#include "wolfpack/core.hpp"
#include "wolfpack/simulate.hpp"

namespace wolfpack::wec {

// Everything the power objective needs besides the decision vector.
struct WecContext {
    BodyProps body;
    HydroCoeffs coeffs;
    SimConfig sim;
    double theta_limit_deg = 30.0;
};

WecContext default_context();  // synthetic coefficients, default body and times

// The 4-d decision space in user units: H [0.5, 5] m, T [2, 12] s,
// K [0, 100] MN m/rad, C [0.01, 200] MN s m/rad.
SearchSpace default_pto_space();

// Mean post-ramp power [W] for a regular wave (H, T) and PTO (K, C in MN
// units). Infeasible rotation, a diverged simulation or a wave frequency
// outside the coefficient grid all collapse to the maximization penalty.
double evaluate_power(const WecContext& ctx, double height, double period, double k_mega,
                      double c_mega);

// Maximization objective over x = [H, T, K, C] wrapping evaluate_power.
ObjectiveSpec power_objective(const WecContext& ctx);

}  // namespace wolfpack::wec
