#include "wolfpack/core.hpp"

#include <cmath>
#include <stdexcept>

namespace wolfpack {

SearchSpace::SearchSpace(std::vector<double> lower, std::vector<double> upper,
                         std::vector<std::string> units)
    : lower_(std::move(lower)), upper_(std::move(upper)), units_(std::move(units)) {
    if (lower_.empty()) throw std::invalid_argument("SearchSpace: dim must be >= 1");
    if (lower_.size() != upper_.size())
        throw std::invalid_argument("SearchSpace: lower/upper dimension mismatch");
    for (std::size_t d = 0; d < lower_.size(); ++d) {
        if (!(lower_[d] < upper_[d]))
            throw std::invalid_argument("SearchSpace: lower must be strictly below upper in every dimension");
        if (!std::isfinite(lower_[d]) || !std::isfinite(upper_[d]))
            throw std::invalid_argument("SearchSpace: bounds must be finite");
    }
    if (!units_.empty() && units_.size() != lower_.size())
        throw std::invalid_argument("SearchSpace: unit labels must match dim");
}

std::vector<double> clamp(std::vector<double> position, const SearchSpace& space) {
    if (static_cast<int>(position.size()) != space.dim())
        throw std::invalid_argument("clamp: position dimension mismatch");
    for (int d = 0; d < space.dim(); ++d) {
        position[d] = std::min(space.upper()[d], std::max(space.lower()[d], position[d]));
    }
    return position;
}

Evaluator::Evaluator(const ObjectiveSpec& objective, const SearchSpace& space)
    : objective_(&objective), space_(&space) {
    if (!objective.evaluator) throw std::invalid_argument("Evaluator: objective has no evaluator");
}

double Evaluator::evaluate(const std::vector<double>& position) {
    if (static_cast<int>(position.size()) != space_->dim())
        throw std::invalid_argument("Evaluator: position dimension mismatch");
    for (int d = 0; d < space_->dim(); ++d) {
        if (position[d] < space_->lower()[d] || position[d] > space_->upper()[d])
            throw std::logic_error("Evaluator: position escaped the search space");
    }
    ++count_;
    if (objective_->feasibility) {
        const Feasibility feas = objective_->feasibility(position);
        if (!feas.feasible) {
            ++infeasible_;
            return penalty_fitness(objective_->direction);
        }
    }
    const double value = objective_->evaluator(position);
    if (std::isnan(value)) {
        // Pathological corners must not abort a stochastic search.
        ++nan_;
        return penalty_fitness(objective_->direction);
    }
    return value;
}

void Evaluator::evaluate(Agent& agent) { agent.fitness = evaluate(agent.position); }

}  // namespace wolfpack
