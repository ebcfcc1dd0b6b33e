#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wolfpack/rng.hpp"

namespace wolfpack {

enum class Direction { Minimize, Maximize };

// Fitness handed to infeasible or non-finite evaluations (death penalty).
// Any genuine objective value must strictly beat it in the run's direction.
inline constexpr double kPenaltyMagnitude = 1e30;

inline double penalty_fitness(Direction dir) {
    return dir == Direction::Minimize ? kPenaltyMagnitude : -kPenaltyMagnitude;
}

inline bool better(double a, double b, Direction dir) {
    return dir == Direction::Minimize ? a < b : a > b;
}

// Box-constrained search domain. Bounds are validated once at construction;
// everything downstream may assume lower[d] < upper[d].
class SearchSpace {
public:
    SearchSpace(std::vector<double> lower, std::vector<double> upper,
                std::vector<std::string> units = {});

    int dim() const { return static_cast<int>(lower_.size()); }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    const std::vector<std::string>& units() const { return units_; }

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
    std::vector<std::string> units_;  // informational, e.g. "m", "s"
};

// Coordinate-wise projection onto the box. In-bounds values pass unchanged.
std::vector<double> clamp(std::vector<double> position, const SearchSpace& space);

struct Agent {
    std::vector<double> position;
    std::optional<double> fitness;  // empty until evaluated

    bool evaluated() const { return fitness.has_value(); }
};

struct Feasibility {
    bool feasible = true;
    std::string diagnostic;
};

// The objective contract: a pure evaluator, an optimization direction and an
// optional feasibility predicate. Evaluators must be reentrant; any internal
// randomness has to be derived from the position (or a fixed seed) so that
// repeated evaluation of the same point gives the same value.
struct ObjectiveSpec {
    std::function<double(const std::vector<double>&)> evaluator;
    Direction direction = Direction::Minimize;
    std::function<Feasibility(const std::vector<double>&)> feasibility;  // may be empty
};

// Applies the feasibility gate and the NaN -> penalty mapping around an
// ObjectiveSpec, checks bound containment, and counts every evaluation.
// One Evaluator is owned by exactly one run.
class Evaluator {
public:
    Evaluator(const ObjectiveSpec& objective, const SearchSpace& space);

    double evaluate(const std::vector<double>& position);
    void evaluate(Agent& agent);

    Direction direction() const { return objective_->direction; }
    const SearchSpace& space() const { return *space_; }
    long long count() const { return count_; }
    long long infeasible_count() const { return infeasible_; }
    long long nan_count() const { return nan_; }

private:
    const ObjectiveSpec* objective_;
    const SearchSpace* space_;
    long long count_ = 0;
    long long infeasible_ = 0;
    long long nan_ = 0;
};

// N agents with coordinates drawn uniformly inside the box, all unevaluated.
// Draw order: agent-major, dimension-minor.
template <UniformSource R>
std::vector<Agent> initialize_population(const SearchSpace& space, int n, R& rng) {
    std::vector<Agent> population(static_cast<std::size_t>(n));
    for (auto& agent : population) {
        agent.position.resize(space.dim());
        for (int d = 0; d < space.dim(); ++d) {
            const double lo = space.lower()[d];
            const double hi = space.upper()[d];
            agent.position[d] = lo + (hi - lo) * rng.uniform();
        }
    }
    return population;
}

}  // namespace wolfpack
