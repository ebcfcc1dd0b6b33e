#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "wolfpack/hill_climb.hpp"
#include "wolfpack/optimizer.hpp"

using namespace wolfpack;

TEST_CASE("stagnation delta averages the last improvements") {
    CHECK(stagnation_delta({5.0, 5.0, 5.0, 5.0}, 3) == doctest::Approx(0.0));
    CHECK(stagnation_delta({5.0, 4.0, 4.0, 3.0}, 3).value() ==
          doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    // history of exactly window entries is not yet judgeable
    CHECK_FALSE(stagnation_delta({5.0, 4.0, 3.0}, 3).has_value());
    CHECK(stagnation_delta({5.0, 4.0, 3.0, 2.0}, 3).has_value());
    CHECK_THROWS_AS(stagnation_delta({1.0, 2.0}, 0), std::invalid_argument);
}

TEST_CASE("initial step divides the range by the resolution") {
    CHECK(initial_step(SearchSpace({0.0}, {100.0}), 100) == std::vector<double>{1.0});
    CHECK(initial_step(SearchSpace({-1.0}, {1.0}), 100) == std::vector<double>{0.02});
    CHECK(initial_step(SearchSpace({0.0}, {100.0}), 2) == std::vector<double>{50.0});
    // literal midpoint form kept behind the flag
    CHECK(initial_step(SearchSpace({10.0}, {30.0}), 2, true) == std::vector<double>{20.0});
    CHECK(initial_step(SearchSpace({10.0}, {30.0}), 2, false) == std::vector<double>{10.0});
}

TEST_CASE("step decay keeps the +1 floor") {
    CHECK(decay_step({10.0}, 50, 100) == std::vector<double>{6.0});
    CHECK(decay_step({10.0}, 100, 100) == std::vector<double>{1.0});
    CHECK(decay_step({0.0}, 100, 100) == std::vector<double>{1.0});
    // strictly positive for any s >= 0, t <= T
    for (double s : {0.0, 0.3, 5.0, 123.0}) {
        for (int t = 1; t <= 20; ++t) CHECK(decay_step({s}, t, 20)[0] > 0.0);
    }
}

TEST_CASE("neighborhood search is greedy over 2 dim probes") {
    const SearchSpace box({-10.0}, {10.0});
    ObjectiveSpec obj;
    obj.evaluator = [](const std::vector<double>& x) { return x[0] * x[0]; };

    SUBCASE("downhill probe wins") {
        Evaluator eval(obj, box);
        const auto best = neighborhood_search({{5.0}, 25.0}, {1.0}, eval);
        CHECK(best.position == std::vector<double>{4.0});
        CHECK(best.fitness == 16.0);
        CHECK(eval.count() == 2);
    }
    SUBCASE("a local optimum at this resolution stays put") {
        Evaluator eval(obj, box);
        const auto best = neighborhood_search({{0.0}, 0.0}, {1.0}, eval);
        CHECK(best.position == std::vector<double>{0.0});
    }
    SUBCASE("at the upper bound the +step probe clamps onto the incumbent") {
        const SearchSpace tight({0.0}, {5.0});
        Evaluator eval(obj, tight);
        const auto best = neighborhood_search({{5.0}, 25.0}, {1.0}, eval);
        CHECK(best.position == std::vector<double>{4.0});  // only the -step probe counts
    }
    SUBCASE("all-infeasible neighborhoods leave the incumbent unchanged") {
        ObjectiveSpec gated = obj;
        gated.feasibility = [](const std::vector<double>& x) {
            return Feasibility{std::fabs(x[0] - 5.0) < 0.1, "off target"};
        };
        Evaluator eval(gated, box);
        const auto best = neighborhood_search({{5.0}, 25.0}, {1.0}, eval);
        CHECK(best.position == std::vector<double>{5.0});
        CHECK(best.fitness == 25.0);
    }
}

TEST_CASE("hill climb never worsens the start point") {
    const SearchSpace box({-10.0, -10.0}, {10.0, 10.0});
    ObjectiveSpec obj;
    obj.evaluator = [](const std::vector<double>& x) {
        return std::sin(3.0 * x[0]) + std::cos(2.0 * x[1]) + 0.1 * (x[0] * x[0] + x[1] * x[1]);
    };
    HcConfig config;
    config.max_local_iters = 10;
    Xoshiro256pp rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> start = {20.0 * rng.uniform() - 10.0, 20.0 * rng.uniform() - 10.0};
        Evaluator eval(obj, box);
        const double f0 = eval.evaluate(start);
        const auto refined = hill_climb({start, f0}, config, eval);
        CHECK(refined.fitness <= f0);
        for (int d = 0; d < 2; ++d) {
            CHECK(refined.position[d] >= box.lower()[d]);
            CHECK(refined.position[d] <= box.upper()[d]);
        }
    }
}

TEST_CASE("hc config validation") {
    HcConfig config;
    CHECK_NOTHROW(config.validate());
    config.resolution = 1;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = HcConfig{};
    config.threshold = -1.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = HcConfig{};
    config.warmup_fraction = 1.5;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

namespace {

// Flat around the optimum so the best-so-far series stalls early.
ObjectiveSpec plateau_objective() {
    ObjectiveSpec obj;
    obj.evaluator = [](const std::vector<double>& x) {
        const double r = std::fabs(x[0]);
        return r < 2.0 ? 1.0 : r;
    };
    return obj;
}

}  // namespace

TEST_CASE("hybrid run triggers hill climbing on a plateau") {
    const SearchSpace box({-10.0}, {10.0});
    RunConfig config;
    config.population = 8;
    config.max_iter = 60;
    config.seed = 11;
    config.variant.kind = VariantKind::EGWO;
    config.hybrid = HcConfig{};
    const auto result = run(plateau_objective(), box, config);
    CHECK(result.hc_invocations >= 1);
    CHECK(result.best_fitness <= 1.0);
}

TEST_CASE("zero threshold disables the hybrid stage") {
    const SearchSpace box({-5.0, -5.0}, {5.0, 5.0});
    ObjectiveSpec obj;
    obj.evaluator = [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1]; };

    RunConfig plain;
    plain.population = 10;
    plain.max_iter = 40;
    plain.seed = 9;
    plain.variant.kind = VariantKind::EGWO;

    RunConfig hybrid = plain;
    hybrid.hybrid = HcConfig{};
    hybrid.hybrid->threshold = 0.0;  // |delta| < 0 never holds

    const auto a = run(obj, box, plain);
    const auto b = run(obj, box, hybrid);
    CHECK(b.hc_invocations == 0);
    CHECK(a.best_fitness == b.best_fitness);
    CHECK(a.best_position == b.best_position);
    CHECK(a.convergence == b.convergence);
    CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("warmup suppresses early invocations") {
    const SearchSpace box({-10.0}, {10.0});
    RunConfig config;
    config.population = 8;
    config.max_iter = 50;
    config.seed = 11;
    config.variant.kind = VariantKind::EGWO;
    config.hybrid = HcConfig{};
    config.hybrid->warmup_fraction = 1.0;  // whole run is warmup
    const auto result = run(plateau_objective(), box, config);
    CHECK(result.hc_invocations == 0);
}
