#include "wolfpack/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace wolfpack {

void RunConfig::validate() const {
    if (population < 1) throw std::invalid_argument("RunConfig: population must be >= 1");
    if (max_iter < 2) throw std::invalid_argument("RunConfig: max_iter must be >= 2");
    variant.validate();
    if (hybrid) {
        hybrid->validate();
        if (variant.kind != VariantKind::EGWO)
            throw std::invalid_argument("RunConfig: hill climbing attaches to the EGWO rule only");
    }
}

std::string RunConfig::name() const {
    if (hybrid && variant.kind == VariantKind::EGWO) return "hc-egwo";
    return variant_kind_name(variant.kind);
}

RunResult run(const ObjectiveSpec& objective, const SearchSpace& space, const RunConfig& config) {
    config.validate();

    Xoshiro256pp rng(config.seed);
    Evaluator eval(objective, space);
    const Direction dir = objective.direction;

    std::vector<Agent> population = initialize_population(space, config.population, rng);
    for (auto& agent : population) eval.evaluate(agent);
    LeaderSet leaders = select_leaders(population, dir);

    RunResult result;
    result.variant = config.name();
    result.seed = config.seed;
    result.convergence.reserve(static_cast<std::size_t>(config.max_iter));

    const double warmup_end =
        config.hybrid ? config.hybrid->warmup_fraction * static_cast<double>(config.max_iter)
                      : 0.0;

    for (int t = 1; t <= config.max_iter; ++t) {
        gwo_step(population, leaders, config.variant, t, config.max_iter, space, eval, rng);

        double best = leaders.alpha.fitness.value();
        if (config.hybrid && static_cast<double>(t) > warmup_end &&
            static_cast<int>(result.convergence.size()) >= config.hybrid->window) {
            // Judge stagnation on the best-so-far tail including this iteration.
            std::vector<double> history(result.convergence.end() - config.hybrid->window,
                                        result.convergence.end());
            history.push_back(best);
            const auto delta = stagnation_delta(history, config.hybrid->window);
            if (delta && std::fabs(*delta) < config.hybrid->threshold) {
                ++result.hc_invocations;
                const LocalPoint refined =
                    hill_climb({leaders.alpha.position, best}, *config.hybrid, eval);
                if (better(refined.fitness, best, dir)) {
                    leaders.alpha.position = refined.position;
                    leaders.alpha.fitness = refined.fitness;
                    best = refined.fitness;
                }
            }
        }
        result.convergence.push_back(best);
    }

    result.best_position = leaders.alpha.position;
    result.best_fitness = leaders.alpha.fitness.value();
    result.evaluations = eval.count();
    return result;
}

nlohmann::ordered_json to_json(const RunResult& result) {
    nlohmann::ordered_json j;
    j["variant"] = result.variant;
    j["seed"] = result.seed;
    j["best_position"] = result.best_position;
    j["best_fitness"] = result.best_fitness;
    j["convergence"] = result.convergence;
    j["evaluations"] = result.evaluations;
    j["hc_invocations"] = result.hc_invocations;
    return j;
}

}  // namespace wolfpack
