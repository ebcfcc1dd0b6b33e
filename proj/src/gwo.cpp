#include "wolfpack/gwo.hpp"

#include <algorithm>

namespace wolfpack {

void VariantSpec::validate() const {
    if (!(b1 > 0.0 && b1 <= 1.0) || !(b2 > 0.0 && b2 <= 1.0))
        throw std::invalid_argument("VariantSpec: b1 and b2 must lie in (0, 1]");
    if (!(mu_ergwo >= 1.0001 && mu_ergwo <= 1.005))
        throw std::invalid_argument("VariantSpec: ERGWO mu must lie in [1.0001, 1.005]");
    if (!(mu_eegwo > 0.0))
        throw std::invalid_argument("VariantSpec: EEGWO mu must be positive");
    if (!(a_initial >= a_final))
        throw std::invalid_argument("VariantSpec: a_initial must be >= a_final");
}

std::string variant_kind_name(VariantKind kind) {
    switch (kind) {
        case VariantKind::Standard: return "gwo";
        case VariantKind::MGWO: return "mgwo";
        case VariantKind::EEGWO: return "eegwo";
        case VariantKind::IGWO: return "igwo";
        case VariantKind::ERGWO: return "ergwo";
        case VariantKind::EGWO: return "egwo";
    }
    return "gwo";
}

VariantKind parse_variant(const std::string& name) {
    if (name == "gwo") return VariantKind::Standard;
    if (name == "mgwo") return VariantKind::MGWO;
    if (name == "eegwo") return VariantKind::EEGWO;
    if (name == "igwo") return VariantKind::IGWO;
    if (name == "ergwo") return VariantKind::ERGWO;
    if (name == "egwo" || name == "hc-egwo") return VariantKind::EGWO;
    throw std::invalid_argument("unknown variant '" + name +
                                "' (expected gwo|mgwo|eegwo|igwo|ergwo|hc-egwo)");
}

double exploration_schedule(const VariantSpec& variant, int t, int max_iter) {
    if (max_iter < 2) throw std::invalid_argument("exploration_schedule: max_iter must be >= 2");
    if (t < 1 || t > max_iter)
        throw std::invalid_argument("exploration_schedule: iteration out of range 1..T");
    const double T = static_cast<double>(max_iter);
    double ti = static_cast<double>(t);
    if (variant.time_reversed_schedule &&
        (variant.kind == VariantKind::EEGWO || variant.kind == VariantKind::ERGWO)) {
        ti = T + 1.0 - ti;
    }
    switch (variant.kind) {
        case VariantKind::Standard:
            return 2.0 * (T - ti) / (T - 1.0);
        case VariantKind::MGWO:
            return 2.0 * (1.0 - ti * ti / (T * T));
        case VariantKind::EEGWO:
            return variant.a_initial -
                   (variant.a_initial - variant.a_final) *
                       std::pow((T - ti) / T, variant.mu_eegwo);
        case VariantKind::IGWO:
            return variant.a_final +
                   (variant.a_initial - variant.a_final) * (1.0 - ti / T) * (1.0 - ti / T);
        case VariantKind::ERGWO:
            return variant.a_initial -
                   (variant.a_initial - variant.a_final) * std::pow(variant.mu_ergwo, -ti);
        case VariantKind::EGWO: {
            const double r = (T - ti) / (T - 1.0);
            return 2.0 * (1.0 - std::exp(std::pow(ti, r) - std::pow(T, r)));
        }
    }
    return 0.0;
}

double exploration_ratio(const VariantSpec& variant, int max_iter) {
    if (max_iter < 2) throw std::invalid_argument("exploration_ratio: max_iter must be >= 2");
    int exploring = 0;
    for (int t = 1; t <= max_iter; ++t) {
        if (exploration_schedule(variant, t, max_iter) >= 1.0) ++exploring;
    }
    return static_cast<double>(exploring) / static_cast<double>(max_iter);
}

namespace {

double fitness_of(const Agent& agent) { return agent.fitness.value(); }

}  // namespace

LeaderSet select_leaders(const std::vector<Agent>& population, Direction dir) {
    if (population.empty()) throw std::invalid_argument("select_leaders: empty population");
    std::vector<const Agent*> sorted;
    sorted.reserve(population.size());
    for (const auto& agent : population) sorted.push_back(&agent);
    std::stable_sort(sorted.begin(), sorted.end(), [dir](const Agent* a, const Agent* b) {
        return better(fitness_of(*a), fitness_of(*b), dir);
    });
    LeaderSet leaders;
    leaders.alpha = *sorted[0];
    leaders.beta = sorted.size() > 1 ? *sorted[1] : leaders.alpha;
    leaders.delta = sorted.size() > 2 ? *sorted[2] : leaders.beta;
    return leaders;
}

void update_leaders(LeaderSet& leaders, const Agent& agent, Direction dir) {
    const double f = fitness_of(agent);
    if (better(f, fitness_of(leaders.alpha), dir)) {
        leaders.delta = leaders.beta;
        leaders.beta = leaders.alpha;
        leaders.alpha = agent;
    } else if (better(f, fitness_of(leaders.beta), dir)) {
        leaders.delta = leaders.beta;
        leaders.beta = agent;
    } else if (better(f, fitness_of(leaders.delta), dir)) {
        leaders.delta = agent;
    }
}

std::vector<double> combine_mean(const std::array<std::vector<double>, 3>& candidates) {
    const std::size_t dim = candidates[0].size();
    std::vector<double> out(dim);
    for (std::size_t d = 0; d < dim; ++d)
        out[d] = (candidates[0][d] + candidates[1][d] + candidates[2][d]) / 3.0;
    return out;
}

std::vector<double> combine_igwo(const std::array<std::vector<double>, 3>& candidates,
                                 double f_alpha, double f_beta, double f_delta,
                                 bool use_weighted) {
    const double f = f_alpha + f_beta + f_delta;
    if (!use_weighted || f == 0.0 || !std::isfinite(f)) return combine_mean(candidates);
    const std::size_t dim = candidates[0].size();
    std::vector<double> out(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        out[d] = (f_alpha * candidates[0][d] + f_beta * candidates[1][d] +
                  f_delta * candidates[2][d]) /
                 f;
    }
    return out;
}

std::vector<double> combine_ergwo(const std::array<std::vector<double>, 3>& candidates,
                                  bool literal_div3) {
    double norms[3];
    double total = 0.0;
    for (int i = 0; i < 3; ++i) {
        double sq = 0.0;
        for (double v : candidates[i]) sq += v * v;
        norms[i] = std::sqrt(sq);
        total += norms[i];
    }
    if (total == 0.0 || !std::isfinite(total)) return combine_mean(candidates);
    const std::size_t dim = candidates[0].size();
    std::vector<double> out(dim);
    const double scale = literal_div3 ? 3.0 : 1.0;
    for (std::size_t d = 0; d < dim; ++d) {
        double weighted = 0.0;
        for (int i = 0; i < 3; ++i) weighted += (norms[i] / total) * candidates[i][d];
        out[d] = weighted / scale;
    }
    return out;
}

}  // namespace wolfpack
