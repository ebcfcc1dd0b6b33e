#pragma once

#include <optional>
#include <vector>

#include "wolfpack/core.hpp"

namespace wolfpack {

// Settings for the stagnation-triggered local search. The search fires after
// an iteration whose best-so-far history has gone flat: the mean of the last
// `window` successive improvements falls below `threshold` in magnitude.
struct HcConfig {
    int resolution = 100;        // g: per-dimension probes span range/g
    int window = 10;             // M: improvements averaged by the trigger
    double threshold = 1e-6;     // Th
    int max_local_iters = 50;    // cap on local-search sweeps per invocation
    double warmup_fraction = 0.1;  // no local search during the first fraction of a run
    // The published step rule divides (lower+upper) rather than the range by
    // g; kept available for fidelity experiments, off by default.
    bool literal_midpoint_step = false;

    void validate() const;
};

// Mean of the last `window` successive differences of the best-so-far
// history. Empty when the history is still too short to judge (needs
// window + 1 entries).
std::optional<double> stagnation_delta(const std::vector<double>& best_history, int window);

// Per-dimension initial step: (upper - lower) / g.
std::vector<double> initial_step(const SearchSpace& space, int resolution,
                                 bool literal_midpoint = false);

// S <- S - (t/T) S + 1, per dimension, in the variable's raw units.
std::vector<double> decay_step(std::vector<double> step, int t, int max_iter);

struct LocalPoint {
    std::vector<double> position;
    double fitness;
};

// Probes +/- step in every dimension (2 dim candidates, clamped) and returns
// the best of them and the incumbent. Improvement must be strict; ties keep
// the incumbent.
LocalPoint neighborhood_search(const LocalPoint& incumbent, const std::vector<double>& step,
                               Evaluator& eval);

// Full local search from a start point: max_local_iters greedy neighborhood
// sweeps with the step decaying each sweep. Never returns a point worse than
// the start.
LocalPoint hill_climb(const LocalPoint& start, const HcConfig& config, Evaluator& eval);

}  // namespace wolfpack
