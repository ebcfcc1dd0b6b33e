#include "wolfpack/hill_climb.hpp"

#include <stdexcept>

namespace wolfpack {

void HcConfig::validate() const {
    if (resolution < 2) throw std::invalid_argument("HcConfig: resolution g must be >= 2");
    if (window < 1) throw std::invalid_argument("HcConfig: window M must be >= 1");
    if (threshold < 0.0) throw std::invalid_argument("HcConfig: threshold must be >= 0");
    if (max_local_iters < 1) throw std::invalid_argument("HcConfig: max_local_iters must be >= 1");
    if (warmup_fraction < 0.0 || warmup_fraction > 1.0)
        throw std::invalid_argument("HcConfig: warmup_fraction must lie in [0, 1]");
}

std::optional<double> stagnation_delta(const std::vector<double>& best_history, int window) {
    if (window < 1) throw std::invalid_argument("stagnation_delta: window must be >= 1");
    if (static_cast<int>(best_history.size()) < window + 1) return std::nullopt;
    const std::size_t n = best_history.size();
    double sum = 0.0;
    for (int k = 0; k < window; ++k) {
        const std::size_t i = n - 1 - static_cast<std::size_t>(k);
        sum += best_history[i] - best_history[i - 1];
    }
    return sum / static_cast<double>(window);
}

std::vector<double> initial_step(const SearchSpace& space, int resolution,
                                 bool literal_midpoint) {
    if (resolution < 2) throw std::invalid_argument("initial_step: resolution must be >= 2");
    std::vector<double> step(static_cast<std::size_t>(space.dim()));
    for (int d = 0; d < space.dim(); ++d) {
        const double lo = space.lower()[d];
        const double hi = space.upper()[d];
        step[d] = (literal_midpoint ? lo + hi : hi - lo) / static_cast<double>(resolution);
    }
    return step;
}

std::vector<double> decay_step(std::vector<double> step, int t, int max_iter) {
    if (t < 1 || t > max_iter) throw std::invalid_argument("decay_step: t out of range 1..T");
    const double frac = static_cast<double>(t) / static_cast<double>(max_iter);
    for (double& s : step) s = s - frac * s + 1.0;
    return step;
}

LocalPoint neighborhood_search(const LocalPoint& incumbent, const std::vector<double>& step,
                               Evaluator& eval) {
    const SearchSpace& space = eval.space();
    if (static_cast<int>(incumbent.position.size()) != space.dim() ||
        incumbent.position.size() != step.size())
        throw std::invalid_argument("neighborhood_search: dimension mismatch");
    LocalPoint best = incumbent;
    std::vector<double> probe = incumbent.position;
    for (int d = 0; d < space.dim(); ++d) {
        for (const double sign : {+1.0, -1.0}) {
            probe[d] = incumbent.position[d] + sign * step[d];
            probe[d] = std::min(space.upper()[d], std::max(space.lower()[d], probe[d]));
            const double fitness = eval.evaluate(probe);
            if (better(fitness, best.fitness, eval.direction())) {
                best.position = probe;
                best.fitness = fitness;
            }
        }
        probe[d] = incumbent.position[d];
    }
    return best;
}

LocalPoint hill_climb(const LocalPoint& start, const HcConfig& config, Evaluator& eval) {
    config.validate();
    std::vector<double> step =
        initial_step(eval.space(), config.resolution, config.literal_midpoint_step);
    LocalPoint current = start;
    for (int local = 1; local <= config.max_local_iters; ++local) {
        current = neighborhood_search(current, step, eval);
        step = decay_step(std::move(step), local, config.max_local_iters);
    }
    return current;
}

}  // namespace wolfpack
