#include <stdexcept>
#include <cmath>

#include "doctest.h"
#include "wolfpack/gwo.hpp"

using namespace wolfpack;

namespace {

// Fixed-value stream for pinning the update rules.
struct StubRng {
    double value = 0.5;
    double uniform() { return value; }
};

VariantSpec variant_of(VariantKind kind) {
    VariantSpec v;
    v.kind = kind;
    return v;
}

Agent agent_at(std::vector<double> pos, double fitness) {
    return Agent{std::move(pos), fitness};
}

}  // namespace

TEST_CASE("schedule endpoints") {
    const auto standard = variant_of(VariantKind::Standard);
    const auto egwo = variant_of(VariantKind::EGWO);
    const auto mgwo = variant_of(VariantKind::MGWO);
    const auto igwo = variant_of(VariantKind::IGWO);
    const auto eegwo = variant_of(VariantKind::EEGWO);
    const auto ergwo = variant_of(VariantKind::ERGWO);

    for (int T : {2, 100, 1000}) {
        CHECK(exploration_schedule(standard, 1, T) == 2.0);
        CHECK(exploration_schedule(standard, T, T) == 0.0);
        CHECK(exploration_schedule(mgwo, T, T) == 0.0);
        CHECK(exploration_schedule(egwo, T, T) == 0.0);
        CHECK(exploration_schedule(igwo, T, T) == 0.0);
    }
    CHECK(exploration_schedule(egwo, 1, 100) == doctest::Approx(2.0).epsilon(1e-12));
    // ERGWO as published rises from 2 - 2/mu; direct evaluation of the form
    CHECK(exploration_schedule(ergwo, 1, 100) ==
          doctest::Approx(2.0 - 2.0 * std::pow(1.001, -1.0)).epsilon(1e-15));
    CHECK(exploration_schedule(ergwo, 1, 100) == doctest::Approx(0.0019980).epsilon(1e-4));
    // EEGWO as published starts near 0 and ends at exactly a_initial
    CHECK(exploration_schedule(eegwo, 100, 100) == 2.0);
    CHECK(exploration_schedule(eegwo, 1, 100) ==
          doctest::Approx(2.0 - 2.0 * std::pow(99.0 / 100.0, 1.5)).epsilon(1e-15));

    CHECK_THROWS_AS(exploration_schedule(standard, 0, 100), std::invalid_argument);
    CHECK_THROWS_AS(exploration_schedule(standard, 101, 100), std::invalid_argument);
    CHECK_THROWS_AS(exploration_schedule(standard, 1, 1), std::invalid_argument);
}

TEST_CASE("time-reversed flag mirrors the literal EEGWO/ERGWO schedules") {
    auto eegwo = variant_of(VariantKind::EEGWO);
    auto mirrored = eegwo;
    mirrored.time_reversed_schedule = true;
    for (int t = 1; t <= 50; ++t)
        CHECK(exploration_schedule(mirrored, t, 50) ==
              exploration_schedule(eegwo, 50 + 1 - t, 50));
    // the flag leaves the other schedules untouched
    auto standard = variant_of(VariantKind::Standard);
    auto standard_flagged = standard;
    standard_flagged.time_reversed_schedule = true;
    CHECK(exploration_schedule(standard_flagged, 7, 50) ==
          exploration_schedule(standard, 7, 50));
}

TEST_CASE("exploration ratio matches independent enumeration") {
    // Closed-form counts of a(t) >= 1 for the monotone schedules.
    CHECK(exploration_ratio(variant_of(VariantKind::Standard), 100) == doctest::Approx(0.50));
    CHECK(exploration_ratio(variant_of(VariantKind::MGWO), 100) == doctest::Approx(0.70));
    CHECK(exploration_ratio(variant_of(VariantKind::MGWO), 1000) == doctest::Approx(0.707));
    CHECK(exploration_ratio(variant_of(VariantKind::IGWO), 100) == doctest::Approx(0.29));
    CHECK(exploration_ratio(variant_of(VariantKind::EEGWO), 100) == doctest::Approx(0.63));
    CHECK(exploration_ratio(variant_of(VariantKind::ERGWO), 100) == doctest::Approx(0.0));
    CHECK(exploration_ratio(variant_of(VariantKind::ERGWO), 1000) == doctest::Approx(0.307));
    CHECK(exploration_ratio(variant_of(VariantKind::EGWO), 100) == doctest::Approx(0.65));

    // Recompute by brute enumeration for every variant; must agree exactly.
    for (auto kind : {VariantKind::Standard, VariantKind::MGWO, VariantKind::EEGWO,
                      VariantKind::IGWO, VariantKind::ERGWO, VariantKind::EGWO}) {
        const auto v = variant_of(kind);
        for (int T : {2, 37, 100, 1000}) {
            int count = 0;
            for (int t = 1; t <= T; ++t)
                if (exploration_schedule(v, t, T) >= 1.0) ++count;
            CHECK(exploration_ratio(v, T) == static_cast<double>(count) / T);
        }
    }

    // At the production scale of 1000 iterations the EGWO schedule has the
    // largest ratio of the whole family.
    const double egwo_er = exploration_ratio(variant_of(VariantKind::EGWO), 1000);
    for (auto kind : {VariantKind::Standard, VariantKind::MGWO, VariantKind::EEGWO,
                      VariantKind::IGWO, VariantKind::ERGWO}) {
        CHECK(egwo_er > exploration_ratio(variant_of(kind), 1000));
    }
}

TEST_CASE("standard update fixed point and hand example") {
    const SearchSpace box({-10.0}, {10.0});
    LeaderSet leaders{agent_at({4.0}, 1.0), agent_at({2.0}, 2.0), agent_at({0.0}, 3.0)};

    SUBCASE("agent and leaders coincident stay put for any a") {
        LeaderSet at_p{agent_at({3.0}, 1.0), agent_at({3.0}, 1.0), agent_at({3.0}, 1.0)};
        for (double a : {0.0, 0.7, 2.0}) {
            StubRng rng;  // r2 = 0.5 -> C = 1 -> D = 0
            CHECK(update_standard({3.0}, at_p, a, rng, box) == std::vector<double>{3.0});
        }
    }
    SUBCASE("A = 0, C = 1 averages the leaders") {
        StubRng rng;  // r1 = r2 = 0.5
        CHECK(update_standard({7.0}, leaders, 1.3, rng, box) == std::vector<double>{2.0});
    }
    SUBCASE("results are clamped") {
        const SearchSpace tight({2.5}, {3.5});
        StubRng rng;
        CHECK(update_standard({3.0}, leaders, 1.0, rng, tight) == std::vector<double>{2.5});
    }
}

TEST_CASE("eegwo update pins the published combine") {
    const SearchSpace box({-5.0}, {5.0});
    LeaderSet leaders{agent_at({3.0}, 1.0), agent_at({3.0}, 2.0), agent_at({3.0}, 3.0)};

    SUBCASE("r3 = r4 = 0 collapses to the origin") {
        StubRng rng{0.0};
        CHECK(update_eegwo({1.0}, leaders, {2.0}, 0.7, rng, box, 0.1, 0.9) ==
              std::vector<double>{0.0});
    }
    SUBCASE("hand arithmetic: 0.1*3 + 0.9*(2-1) = 1.2") {
        StubRng rng{1.0};  // a = 0 makes the candidate mean equal the leader mean
        const auto next = update_eegwo({1.0}, leaders, {2.0}, 0.0, rng, box, 0.1, 0.9);
        CHECK(next[0] == doctest::Approx(1.2).epsilon(1e-12));
    }
    SUBCASE("b1 = 1, b2 = 0, r3 = 1 reduces to the plain mean") {
        StubRng rng{1.0};
        LeaderSet spread{agent_at({4.0}, 1.0), agent_at({2.0}, 2.0), agent_at({0.0}, 3.0)};
        const auto reduced = update_eegwo({1.0}, spread, {2.0}, 0.0, rng, box, 1.0, 0.0);
        StubRng rng2{1.0};
        const auto plain = update_standard({1.0}, spread, 0.0, rng2, box);
        CHECK(reduced == plain);
    }
}

TEST_CASE("igwo combine weights by fitness") {
    const std::array<std::vector<double>, 3> candidates = {
        std::vector<double>{1.0}, std::vector<double>{2.0}, std::vector<double>{3.0}};
    CHECK(combine_igwo(candidates, 1.0, 2.0, 3.0, true)[0] ==
          doctest::Approx(14.0 / 6.0).epsilon(1e-15));
    // equal fitness values coincide with the plain mean
    CHECK(combine_igwo(candidates, 5.0, 5.0, 5.0, true)[0] ==
          doctest::Approx(combine_mean(candidates)[0]).epsilon(1e-15));
    // zero total fitness falls back to the plain mean
    CHECK(combine_igwo(candidates, 0.0, 0.0, 0.0, true) == combine_mean(candidates));
    CHECK(combine_igwo(candidates, 1.0, 2.0, 3.0, false) == combine_mean(candidates));
}

TEST_CASE("ergwo combine uses magnitude weights") {
    const std::array<std::vector<double>, 3> candidates = {
        std::vector<double>{3.0}, std::vector<double>{-1.0}, std::vector<double>{0.0}};
    // w = (0.75, 0.25, 0); published form divides the weighted sum by 3
    CHECK(combine_ergwo(candidates, true)[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(combine_ergwo(candidates, false)[0] == doctest::Approx(2.0).epsilon(1e-12));
    const std::array<std::vector<double>, 3> zeros = {
        std::vector<double>{0.0}, std::vector<double>{0.0}, std::vector<double>{0.0}};
    CHECK(combine_ergwo(zeros, true) == std::vector<double>{0.0});
}

TEST_CASE("leader selection and refresh") {
    std::vector<Agent> pop = {agent_at({1.0}, 5.0), agent_at({2.0}, 1.0), agent_at({3.0}, 3.0)};
    auto leaders = select_leaders(pop, Direction::Minimize);
    CHECK(leaders.alpha.fitness == 1.0);
    CHECK(leaders.beta.fitness == 3.0);
    CHECK(leaders.delta.fitness == 5.0);

    SUBCASE("undersized populations duplicate forward") {
        std::vector<Agent> one = {agent_at({1.0}, 4.0)};
        auto l1 = select_leaders(one, Direction::Minimize);
        CHECK(l1.alpha.fitness == 4.0);
        CHECK(l1.beta.fitness == 4.0);
        CHECK(l1.delta.fitness == 4.0);
        std::vector<Agent> two = {agent_at({1.0}, 4.0), agent_at({2.0}, 2.0)};
        auto l2 = select_leaders(two, Direction::Minimize);
        CHECK(l2.alpha.fitness == 2.0);
        CHECK(l2.beta.fitness == 4.0);
        CHECK(l2.delta.fitness == 4.0);
    }
    SUBCASE("update cascade keeps the hierarchy sorted and monotone") {
        update_leaders(leaders, agent_at({9.0}, 2.0), Direction::Minimize);
        CHECK(leaders.alpha.fitness == 1.0);
        CHECK(leaders.beta.fitness == 2.0);
        CHECK(leaders.delta.fitness == 3.0);
        update_leaders(leaders, agent_at({9.0}, 0.5), Direction::Minimize);
        CHECK(leaders.alpha.fitness == 0.5);
        CHECK(leaders.beta.fitness == 1.0);
        CHECK(leaders.delta.fitness == 2.0);
        update_leaders(leaders, agent_at({9.0}, 100.0), Direction::Minimize);
        CHECK(leaders.alpha.fitness == 0.5);  // worse agents change nothing
    }
    SUBCASE("maximize direction flips the order") {
        auto lmax = select_leaders(pop, Direction::Maximize);
        CHECK(lmax.alpha.fitness == 5.0);
        CHECK(lmax.delta.fitness == 1.0);
    }
}

TEST_CASE("gwo step evaluates, re-selects leaders and stays reproducible") {
    const SearchSpace box({-1.0, -1.0}, {1.0, 1.0});
    ObjectiveSpec obj;
    obj.evaluator = [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1]; };

    for (auto kind : {VariantKind::Standard, VariantKind::MGWO, VariantKind::EEGWO,
                      VariantKind::IGWO, VariantKind::ERGWO, VariantKind::EGWO}) {
        CAPTURE(static_cast<int>(kind));
        const auto variant = variant_of(kind);
        auto step_once = [&](std::uint64_t seed) {
            Xoshiro256pp rng(seed);
            Evaluator eval(obj, box);
            auto pop = initialize_population(box, 6, rng);
            for (auto& a : pop) eval.evaluate(a);
            auto leaders = select_leaders(pop, Direction::Minimize);
            const double alpha_before = leaders.alpha.fitness.value();
            gwo_step(pop, leaders, variant, 1, 50, box, eval, rng);
            CHECK(leaders.alpha.fitness.value() <= alpha_before);  // improve or persist
            CHECK(leaders.alpha.fitness.value() <= leaders.beta.fitness.value());
            CHECK(leaders.beta.fitness.value() <= leaders.delta.fitness.value());
            for (const auto& a : pop) {
                for (int d = 0; d < box.dim(); ++d) {
                    CHECK(a.position[d] >= box.lower()[d]);
                    CHECK(a.position[d] <= box.upper()[d]);
                }
            }
            return pop;
        };
        const auto p1 = step_once(7);
        const auto p2 = step_once(7);
        for (std::size_t i = 0; i < p1.size(); ++i) {
            CHECK(p1[i].position == p2[i].position);
            CHECK(p1[i].fitness == p2[i].fitness);
        }
    }

    SUBCASE("population of one is its own leader set") {
        Xoshiro256pp rng(3);
        Evaluator eval(obj, box);
        auto pop = initialize_population(box, 1, rng);
        for (auto& a : pop) eval.evaluate(a);
        auto leaders = select_leaders(pop, Direction::Minimize);
        gwo_step(pop, leaders, variant_of(VariantKind::Standard), 1, 10, box, eval, rng);
        CHECK(pop.size() == 1);
        CHECK(pop[0].evaluated());
    }
}

TEST_CASE("variant names round-trip") {
    CHECK(parse_variant("gwo") == VariantKind::Standard);
    CHECK(parse_variant("mgwo") == VariantKind::MGWO);
    CHECK(parse_variant("eegwo") == VariantKind::EEGWO);
    CHECK(parse_variant("igwo") == VariantKind::IGWO);
    CHECK(parse_variant("ergwo") == VariantKind::ERGWO);
    CHECK(parse_variant("hc-egwo") == VariantKind::EGWO);
    CHECK(parse_variant("egwo") == VariantKind::EGWO);
    CHECK_THROWS_AS(parse_variant("pso"), std::invalid_argument);
    CHECK(variant_kind_name(VariantKind::MGWO) == "mgwo");
}

TEST_CASE("variant spec validation") {
    VariantSpec v;
    v.b1 = 0.0;
    CHECK_THROWS_AS(v.validate(), std::invalid_argument);
    v = VariantSpec{};
    v.mu_ergwo = 1.01;
    CHECK_THROWS_AS(v.validate(), std::invalid_argument);
    CHECK_NOTHROW(VariantSpec{}.validate());
}
