#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "wolfpack/core.hpp"

namespace wolfpack {

enum class VariantKind { Standard, MGWO, EEGWO, IGWO, ERGWO, EGWO };

// Which position-update rule / exploration schedule to run, plus the
// constants the published variants fix. Defaults follow the source studies:
// b1 = 0.1, b2 = 0.9 and mu = 1.5 for EEGWO, mu = 1.001 for ERGWO.
struct VariantSpec {
    VariantKind kind = VariantKind::Standard;
    double b1 = 0.1;
    double b2 = 0.9;
    double mu_eegwo = 1.5;
    double mu_ergwo = 1.001;
    double a_initial = 2.0;
    double a_final = 0.0;
    // The EEGWO / ERGWO schedules are kept exactly as published, which makes
    // them *increase* from ~0 to 2 over a run. time_reversed_schedule mirrors
    // them (t -> T+1-t) for comparison with the conventional decreasing form.
    bool time_reversed_schedule = false;
    // ERGWO's combine divides the already-normalized weighted sum by 3 in the
    // published formula; disable to use the plain weighted sum.
    bool ergwo_literal_div3 = true;

    void validate() const;
};

std::string variant_kind_name(VariantKind kind);

// Accepts "gwo" | "mgwo" | "eegwo" | "igwo" | "ergwo" | "egwo" | "hc-egwo".
// "hc-egwo" maps to the EGWO rule; the caller enables hill climbing for it.
VariantKind parse_variant(const std::string& name);

// Exploration-rate schedule a(t) for iterations t = 1..T.
//   Standard : 2 (T-t)/(T-1)                          (linear 2 -> 0)
//   MGWO     : 2 (1 - t^2/T^2)
//   EEGWO    : a0 - (a0 - a1) ((T-t)/T)^mu            (as published; rises to 2)
//   IGWO     : a1 + (a0 - a1) (1 - t/T)^2
//   ERGWO    : a0 - (a0 - a1) mu^-t                   (as published; rises to 2)
//   EGWO     : R = (T-t)/(T-1),  a = 2 (1 - e^(t^R - T^R))
double exploration_schedule(const VariantSpec& variant, int t, int max_iter);

// Fraction of iterations whose schedule permits exploration (a >= 1, since
// |A| can only exceed 1 when a does).
double exploration_ratio(const VariantSpec& variant, int max_iter);

// Best three agents in the optimization direction, kept sorted. These are
// historical bests: once seen, a leader is only replaced by something better.
struct LeaderSet {
    Agent alpha, beta, delta;
};

// Leaders from an evaluated population. With fewer than three agents the
// trailing slots duplicate their predecessor.
LeaderSet select_leaders(const std::vector<Agent>& population, Direction dir);

// Merge one evaluated agent into the leader hierarchy.
void update_leaders(LeaderSet& leaders, const Agent& agent, Direction dir);

// Candidate positions X1, X2, X3 steered by alpha/beta/delta: per dimension,
// per leader, draw r1 then r2; A = 2 a r1 - a, C = 2 r2, D = |C L - x|,
// X_i = L - A D. Shared by every update rule.
template <UniformSource R>
std::array<std::vector<double>, 3> leader_candidates(const std::vector<double>& position,
                                                     const LeaderSet& leaders, double a,
                                                     R& rng) {
    const std::size_t dim = position.size();
    std::array<std::vector<double>, 3> candidates;
    for (auto& c : candidates) c.resize(dim);
    const Agent* leader_agents[3] = {&leaders.alpha, &leaders.beta, &leaders.delta};
    for (std::size_t d = 0; d < dim; ++d) {
        for (int i = 0; i < 3; ++i) {
            const double leader = leader_agents[i]->position[d];
            const double r1 = rng.uniform();
            const double r2 = rng.uniform();
            const double coef_a = 2.0 * a * r1 - a;
            const double coef_c = 2.0 * r2;
            const double dist = std::fabs(coef_c * leader - position[d]);
            candidates[i][d] = leader - coef_a * dist;
        }
    }
    return candidates;
}

// Plain average of the three candidates (standard GWO combine).
std::vector<double> combine_mean(const std::array<std::vector<double>, 3>& candidates);

// Fitness-weighted combine: (fa X1 + fb X2 + fd X3) / (fa+fb+fd), falling
// back to the plain mean when the weights sum to zero or use_weighted is off.
std::vector<double> combine_igwo(const std::array<std::vector<double>, 3>& candidates,
                                 double f_alpha, double f_beta, double f_delta,
                                 bool use_weighted);

// Magnitude-weighted combine: w_i from the Euclidean norms |X_i|. The weights
// sum to one; with literal_div3 the result is additionally divided by 3.
// All-zero candidates fall back to the plain mean.
std::vector<double> combine_ergwo(const std::array<std::vector<double>, 3>& candidates,
                                  bool literal_div3);

template <UniformSource R>
std::vector<double> update_standard(const std::vector<double>& position, const LeaderSet& leaders,
                                    double a, R& rng, const SearchSpace& space) {
    return clamp(combine_mean(leader_candidates(position, leaders, a, rng)), space);
}

// PSO-inspired rule: X' = b1 r3 mean(X1..X3) + b2 r4 (X_peer - X), drawing
// r3 and r4 per dimension after that dimension's six leader draws.
template <UniformSource R>
std::vector<double> update_eegwo(const std::vector<double>& position, const LeaderSet& leaders,
                                 const std::vector<double>& peer, double a, R& rng,
                                 const SearchSpace& space, double b1, double b2) {
    const std::size_t dim = position.size();
    std::vector<double> next(dim);
    const Agent* leader_agents[3] = {&leaders.alpha, &leaders.beta, &leaders.delta};
    for (std::size_t d = 0; d < dim; ++d) {
        double mean = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double leader = leader_agents[i]->position[d];
            const double r1 = rng.uniform();
            const double r2 = rng.uniform();
            const double coef_a = 2.0 * a * r1 - a;
            const double coef_c = 2.0 * r2;
            const double dist = std::fabs(coef_c * leader - position[d]);
            mean += (leader - coef_a * dist) / 3.0;
        }
        const double r3 = rng.uniform();
        const double r4 = rng.uniform();
        next[d] = b1 * r3 * mean + b2 * r4 * (peer[d] - position[d]);
    }
    return clamp(std::move(next), space);
}

template <UniformSource R>
std::vector<double> update_igwo(const std::vector<double>& position, const LeaderSet& leaders,
                                double agent_fitness, double a, R& rng,
                                const SearchSpace& space, Direction dir) {
    const double f_alpha = leaders.alpha.fitness.value();
    const double f_beta = leaders.beta.fitness.value();
    const double f_delta = leaders.delta.fitness.value();
    // Weighted branch when the agent is at least as good as the leader
    // average, plain mean otherwise.
    const double f_avg = (f_alpha + f_beta + f_delta) / 3.0;
    const bool use_weighted = !better(f_avg, agent_fitness, dir);
    auto candidates = leader_candidates(position, leaders, a, rng);
    return clamp(combine_igwo(candidates, f_alpha, f_beta, f_delta, use_weighted), space);
}

template <UniformSource R>
std::vector<double> update_ergwo(const std::vector<double>& position, const LeaderSet& leaders,
                                 double a, R& rng, const SearchSpace& space,
                                 bool literal_div3) {
    return clamp(combine_ergwo(leader_candidates(position, leaders, a, rng), literal_div3),
                 space);
}

// One full iteration: schedule, per-agent position update from the frozen
// leader set, re-evaluation, leader refresh. Agents are processed in index
// order with a fixed per-agent draw pattern, so the step is reproducible.
// EEGWO draws its peer index first (floor(u N), clipped), from the positions
// as they were at the start of the iteration.
template <UniformSource R>
void gwo_step(std::vector<Agent>& population, LeaderSet& leaders, const VariantSpec& variant,
              int t, int max_iter, const SearchSpace& space, Evaluator& eval, R& rng) {
    const double a = exploration_schedule(variant, t, max_iter);
    const std::size_t n = population.size();

    std::vector<std::vector<double>> snapshot;
    if (variant.kind == VariantKind::EEGWO) {
        snapshot.reserve(n);
        for (const auto& agent : population) snapshot.push_back(agent.position);
    }

    for (std::size_t i = 0; i < n; ++i) {
        Agent& agent = population[i];
        switch (variant.kind) {
            case VariantKind::Standard:
            case VariantKind::MGWO:
            case VariantKind::EGWO:
                agent.position = update_standard(agent.position, leaders, a, rng, space);
                break;
            case VariantKind::EEGWO: {
                std::size_t peer = static_cast<std::size_t>(rng.uniform() * static_cast<double>(n));
                if (peer >= n) peer = n - 1;
                agent.position = update_eegwo(agent.position, leaders, snapshot[peer], a, rng,
                                              space, variant.b1, variant.b2);
                break;
            }
            case VariantKind::IGWO:
                agent.position = update_igwo(agent.position, leaders, agent.fitness.value(), a,
                                             rng, space, eval.direction());
                break;
            case VariantKind::ERGWO:
                agent.position = update_ergwo(agent.position, leaders, a, rng, space,
                                              variant.ergwo_literal_div3);
                break;
        }
        agent.fitness.reset();
    }
    for (auto& agent : population) {
        eval.evaluate(agent);
        update_leaders(leaders, agent, eval.direction());
    }
}

}  // namespace wolfpack
