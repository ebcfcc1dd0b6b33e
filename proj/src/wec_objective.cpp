#include "wolfpack/wec_objective.hpp"

#include <stdexcept>

namespace wolfpack::wec {

WecContext default_context() {
    WecContext ctx;
    ctx.coeffs = synthetic_coeffs_default();
    return ctx;
}

SearchSpace default_pto_space() {
    return SearchSpace({0.5, 2.0, 0.0, 0.01}, {5.0, 12.0, 100.0, 200.0},
                       {"m", "s", "MNm/rad", "MNsm/rad"});
}

double evaluate_power(const WecContext& ctx, double height, double period, double k_mega,
                      double c_mega) {
    try {
        const SimResult result = simulate(ctx.body, ctx.coeffs, PtoParams::from_mega(k_mega, c_mega),
                                          RegularWave{height, period}, ctx.sim);
        if (!feasibility_check(result, ctx.theta_limit_deg).feasible)
            return penalty_fitness(Direction::Maximize);
        return result.summary.mean_power;
    } catch (const SimulationError&) {
        return penalty_fitness(Direction::Maximize);
    } catch (const std::domain_error&) {
        // wave frequency outside the coefficient grid
        return penalty_fitness(Direction::Maximize);
    }
}

ObjectiveSpec power_objective(const WecContext& ctx) {
    ObjectiveSpec spec;
    spec.direction = Direction::Maximize;
    spec.evaluator = [ctx](const std::vector<double>& x) {
        if (x.size() != 4)
            throw std::invalid_argument("power objective expects x = [H, T, K, C]");
        return evaluate_power(ctx, x[0], x[1], x[2], x[3]);
    };
    return spec;
}

}  // namespace wolfpack::wec
