#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wolfpack/core.hpp"
#include "wolfpack/gwo.hpp"
#include "wolfpack/hill_climb.hpp"

#include "json.hpp"

namespace wolfpack {

struct RunConfig {
    int population = 20;   // N
    int max_iter = 1000;   // T; schedules divide by T-1, so T >= 2
    std::uint64_t seed = 42;
    VariantSpec variant;
    std::optional<HcConfig> hybrid;  // EGWO only; turns the run into HC-EGWO

    void validate() const;
    std::string name() const;  // "hc-egwo" when hybrid is set, else the kind name
};

struct RunResult {
    std::string variant;
    std::uint64_t seed = 0;
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<double> convergence;  // best-so-far after each iteration, length T
    long long evaluations = 0;
    long long hc_invocations = 0;
};

// One seeded optimization run of the selected variant. Sequential by design:
// each iteration depends on the leaders of the previous one. The rng stream
// is consumed in a documented fixed order (population init agent-major /
// dimension-minor, then per iteration per agent per dimension), so identical
// (objective, space, config) inputs give identical results.
RunResult run(const ObjectiveSpec& objective, const SearchSpace& space, const RunConfig& config);

nlohmann::ordered_json to_json(const RunResult& result);

}  // namespace wolfpack
