#include "fpgraph/errors.hpp"
#include "fpgraph/solve.hpp"

#include <doctest.h>

#include "fixtures.hpp"

#include <random>

using namespace fpgraph;

TEST_CASE("table maps enforce totality and uniqueness") {
    auto space = fixtures::space22();
    auto sets = all_point_sets(*space);
    std::vector<std::pair<PointSet, PointSet>> rows;
    for (size_t i = 0; i + 1 < sets.size(); ++i) rows.emplace_back(sets[i], sets[0]);
    CHECK_THROWS_WITH_AS(TableSetMap(*space, rows),
                         "map table is missing an image for {4}", structural_error);
    rows.emplace_back(sets[0], sets[0]);
    CHECK_THROWS_AS(TableSetMap(*space, rows), structural_error); // duplicate {1}
}

TEST_CASE("interval rule maps validate their shape") {
    ClosedInterval unit(Rational(0), Rational(1));
    CHECK_THROWS_AS(IntervalRuleMap({}), structural_error);
    CHECK_THROWS_AS(IntervalRuleMap({{IntervalPredicateKind::SubsetOf, unit, unit}}),
                    structural_error); // no catch-all
    CHECK_THROWS_AS(IntervalRuleMap({{IntervalPredicateKind::Otherwise, std::nullopt, unit},
                                     {IntervalPredicateKind::Otherwise, std::nullopt, unit}}),
                    structural_error); // early catch-all
    IntervalRuleMap ok({{IntervalPredicateKind::Equals, unit, unit},
                        {IntervalPredicateKind::Otherwise, std::nullopt,
                         ClosedInterval(Rational(2), Rational(3))}});
    CHECK(ok.apply(unit) == unit);
    CHECK(ok.apply(ClosedInterval(Rational(0), Rational(5))) ==
          ClosedInterval(Rational(2), Rational(3)));
}

TEST_CASE("a constant against the identity coincides immediately") {
    FiniteMetricSpace space({"1", "2"}, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    PointSet one(space, 1u);
    TableSetMap constant = TableSetMap::constant(space, one);
    TableSetMap identity = TableSetMap::identity(space);
    IterationTrace trace = jungck_iterate(constant, identity, PointSet(space, 3u), 8);
    CHECK(trace.termination == Termination::CoincidenceFound);
    REQUIRE(trace.coincidence.has_value());
    CHECK(*trace.coincidence == one);
    CHECK(trace.steps.size() <= 2);
}

TEST_CASE("the corpus instance yields a range violation from {3}") {
    auto space = fixtures::space22();
    TableSetMap s = fixtures::map_s22(*space);
    TableSetMap t = fixtures::map_t22(*space);
    IterationTrace trace = jungck_iterate(s, t, PointSet(*space, {"3"}), 16);
    CHECK(trace.termination == Termination::RangeViolation);
    REQUIRE(trace.missing_target.has_value());
    CHECK(trace.missing_target->to_literal() == "{1,2}");
}

TEST_CASE("the corpus instance coincides at {1} without any transition") {
    auto space = fixtures::space22();
    TableSetMap s = fixtures::map_s22(*space);
    TableSetMap t = fixtures::map_t22(*space);
    IterationTrace trace = jungck_iterate(s, t, PointSet(*space, {"1"}), 16);
    CHECK(trace.termination == Termination::CoincidenceFound);
    CHECK(trace.coincidence->to_literal() == "{1}");
    CHECK(trace.steps.size() == 1);
}

TEST_CASE("iteration guards its inputs") {
    auto space = fixtures::space22();
    auto other = fixtures::space22();
    TableSetMap s = fixtures::map_s22(*space);
    TableSetMap t = fixtures::map_t22(*space);
    CHECK_THROWS_AS(jungck_iterate(s, t, PointSet(*other, 1u), 8), domain_error);
    CHECK_THROWS_AS(jungck_iterate(s, t, PointSet(*space, 1u), 0), domain_error);
    CHECK_THROWS_AS(jungck_iterate(s, fixtures::map_t22(*other), PointSet(*space, 1u), 8),
                    structural_error);
}

TEST_CASE("coincidence enumeration matches the corpus instances") {
    auto space = fixtures::space22();
    auto cp22 = enumerate_coincidence_points(fixtures::map_s22(*space), fixtures::map_t22(*space));
    REQUIRE(cp22.size() == 1);
    CHECK(cp22[0].to_literal() == "{1}");

    auto cp23 = enumerate_coincidence_points(fixtures::map_s23(*space), fixtures::map_t23(*space));
    REQUIRE(cp23.size() == 1);
    CHECK(cp23[0].to_literal() == "{1}");

    TableSetMap s = fixtures::map_s22(*space);
    CHECK(enumerate_coincidence_points(s, s).size() == 15);
}

TEST_CASE("fixed point enumeration matches the corpus instances") {
    auto space = fixtures::space22();
    auto fixed22 =
        enumerate_common_fixed_points(fixtures::map_s22(*space), fixtures::map_t22(*space));
    REQUIRE(fixed22.common.size() == 1);
    CHECK(fixed22.common[0].to_literal() == "{1}");

    TableSetMap identity = TableSetMap::identity(*space);
    auto fixed_id = enumerate_common_fixed_points(identity, identity);
    CHECK(fixed_id.common.size() == 15);
}

TEST_CASE("picard orbits reproduce the corpus traces") {
    auto space = fixtures::space22();
    TableSetMap t22 = fixtures::map_t22(*space);
    IterationTrace orbit = picard_iterate(t22, PointSet(*space, {"2"}), 16);
    REQUIRE(orbit.steps.size() == 3);
    CHECK(orbit.steps[0].current.to_literal() == "{2}");
    CHECK(orbit.steps[1].current.to_literal() == "{1,2,3}");
    CHECK(orbit.steps[2].current.to_literal() == "{1,2,3,4}");
    CHECK(orbit.termination == Termination::CoincidenceFound);
    CHECK(orbit.coincidence->to_literal() == "{1,2,3,4}");

    TableSetMap identity = TableSetMap::identity(*space);
    IterationTrace still = picard_iterate(identity, PointSet(*space, {"3"}), 4);
    CHECK(still.termination == Termination::CoincidenceFound);
    CHECK(still.steps.size() == 1);

    TableSetMap t23 = fixtures::map_t23(*space);
    IterationTrace orbit23 = picard_iterate(t23, PointSet(*space, {"3"}), 16);
    REQUIRE(orbit23.steps.size() == 2);
    CHECK(orbit23.steps[0].current.to_literal() == "{3}");
    CHECK(orbit23.steps[1].current.to_literal() == "{1,2,3,4}");
}

TEST_CASE("traces link S of one step to T of the next") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 40; ++round) {
        auto space = fixtures::random_space(rng, 2 + rng() % 4);
        TableSetMap s = fixtures::random_table_map(rng, *space);
        TableSetMap t = fixtures::random_table_map(rng, *space);
        auto sets = all_point_sets(*space);
        PointSet start = sets[rng() % sets.size()];
        IterationTrace trace = jungck_iterate(s, t, start, 1u << space->size());
        for (size_t i = 0; i + 1 < trace.steps.size(); ++i) {
            CHECK(trace.steps[i].s_image == trace.steps[i + 1].t_image);
        }
        for (const auto& step : trace.steps) {
            CHECK(step.s_image == s.apply(step.current));
            CHECK(step.t_image == t.apply(step.current));
        }
    }
}

TEST_CASE("iteration terminates within the pigeonhole budget on random maps") {
    std::mt19937_64 rng(59);
    for (int round = 0; round < 60; ++round) {
        size_t n = 2 + rng() % 4; // up to 5 points
        auto space = fixtures::random_space(rng, n);
        TableSetMap s = fixtures::random_table_map(rng, *space);
        TableSetMap t = fixtures::random_table_map(rng, *space);
        auto sets = all_point_sets(*space);
        PointSet start = sets[rng() % sets.size()];
        IterationTrace trace = jungck_iterate(s, t, start, 1u << n);
        CHECK(trace.termination != Termination::StepLimit);
        CHECK(trace.steps.size() <= (1u << n) - 1u);
        if (trace.termination == Termination::CoincidenceFound) {
            CHECK(s.apply(*trace.coincidence) == t.apply(*trace.coincidence));
            bool found = false;
            for (const PointSet& u : enumerate_coincidence_points(s, t)) {
                if (u == *trace.coincidence) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("with the identity in the T slot the iteration replays the plain orbit") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 20; ++round) {
        auto space = fixtures::random_space(rng, 2 + rng() % 4);
        TableSetMap s = fixtures::random_table_map(rng, *space);
        TableSetMap identity = TableSetMap::identity(*space);
        auto sets = all_point_sets(*space);
        PointSet start = sets[rng() % sets.size()];
        size_t budget = 1u << space->size();

        IterationTrace via_preimage = jungck_iterate(s, identity, start, budget);
        IterationTrace via_orbit = picard_iterate(s, start, budget);

        CHECK(via_preimage.termination == via_orbit.termination);
        REQUIRE(via_preimage.steps.size() == via_orbit.steps.size());
        for (size_t i = 0; i < via_orbit.steps.size(); ++i) {
            CHECK(via_preimage.steps[i].current == via_orbit.steps[i].current);
            CHECK(via_preimage.steps[i].s_image == via_orbit.steps[i].s_image);
            CHECK(via_preimage.steps[i].t_image == via_orbit.steps[i].t_image);
        }
        CHECK(via_preimage.coincidence == via_orbit.coincidence);
        CHECK(via_preimage.cycle_period == via_orbit.cycle_period);
    }
}

TEST_CASE("cycles are detected with their period") {
    FiniteMetricSpace space({"a", "b"}, {{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    // T = identity, S swaps {a} and {b}: the preimage chain alternates forever.
    PointSet a(space, 1u), b(space, 2u), ab(space, 3u);
    TableSetMap swap_map(space, {{a, b}, {b, a}, {ab, ab}});
    TableSetMap identity = TableSetMap::identity(space);
    IterationTrace trace = jungck_iterate(swap_map, identity, a, 16);
    CHECK(trace.termination == Termination::CycleDetected);
    CHECK(trace.cycle_period == 2);
}

TEST_CASE("interval solver follows the rule maps over the probe family") {
    auto inst = fixtures::load_corpus_instance("example_2_7.instance");
    const auto& intervals = inst->intervals();

    auto cp = enumerate_coincidence_points_intervals(*intervals.map_s, *intervals.map_t,
                                                     intervals.probes);
    REQUIRE(cp.size() == 2);
    CHECK(cp[0].to_literal() == "[0,5]");
    CHECK(cp[1].to_literal() == "[0,10]");

    auto fixed = enumerate_common_fixed_points_intervals(*intervals.map_s, *intervals.map_t,
                                                         intervals.probes);
    REQUIRE(fixed.common.size() == 1);
    CHECK(fixed.common[0].to_literal() == "[0,10]");

    IntervalIterationTrace fixed_run = jungck_iterate_intervals(
        *intervals.map_s, *intervals.map_t, intervals.probes,
        ClosedInterval(Rational(0), Rational(10)), 8);
    CHECK(fixed_run.termination == Termination::CoincidenceFound);
    CHECK(fixed_run.coincidence->to_literal() == "[0,10]");

    // From a probe that maps under S to [10,20], which T never outputs.
    IntervalIterationTrace violated = jungck_iterate_intervals(
        *intervals.map_s, *intervals.map_t, intervals.probes,
        ClosedInterval(Rational(11), Rational(12)), 8);
    CHECK(violated.termination == Termination::RangeViolation);
    CHECK(violated.missing_target->to_literal() == "[10,20]");
}
