// Acceptance suite for the certification workbench. Each criterion runs the
// bundled corpus (or a seeded random family) against frozen exact values and
// prints one pass/fail line. Exit status is the number of failing criteria.

#include "fpgraph/certify.hpp"
#include "fpgraph/errors.hpp"
#include "fpgraph/gauge.hpp"
#include "fpgraph/instance.hpp"
#include "fpgraph/report.hpp"
#include "fpgraph/solve.hpp"

#include "fixtures.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace fpgraph;

namespace {

struct Checker {
    std::ostringstream detail;
    bool ok = true;

    void require(bool condition, const std::string& message) {
        if (!condition) {
            ok = false;
            detail << "    " << message << "\n";
        }
    }
    void note(const std::string& message) { detail << "    " << message << "\n"; }
};

Rational brute_force_hausdorff(const FiniteMetricSpace& space, const PointSet& a,
                               const PointSet& b) {
    auto directed = [&](const PointSet& from, const PointSet& to) {
        Rational sup(0);
        for (size_t x : from.members()) {
            Rational inf;
            bool first = true;
            for (size_t y : to.members()) {
                if (first || space.dist(x, y) < inf) inf = space.dist(x, y);
                first = false;
            }
            if (inf > sup) sup = inf;
        }
        return sup;
    };
    return max(directed(a, b), directed(b, a));
}

CertifyOptions options_of(const Instance& instance) {
    CertifyOptions options;
    options.undirected_lift = instance.options.undirected_lift;
    options.gauge_probes = instance.options.probes;
    options.gauge_iterations = instance.options.iterations;
    options.tail_tolerance = instance.options.tail_tolerance;
    return options;
}

const PairRecord* find_pair(const CertificationReport& report, const std::string& a,
                            const std::string& b) {
    for (const PairRecord& record : report.pair_records) {
        if (record.a == a && record.b == b) return &record;
    }
    return nullptr;
}

// 1. Every Hausdorff value on the first bundled instance matches the
//    three-case summary (1/4 inside {1,2}-subsets, 0 on the diagonal, 4/5
//    otherwise), exactly.
void criterion_hausdorff_table(Checker& check) {
    auto inst = fixtures::load_corpus_instance("example_2_2.instance");
    const FiniteMetricSpace& space = *inst->finite().space;
    auto sets = all_point_sets(space);
    const uint32_t inside = 0b0011u;
    int mismatches = 0;
    for (const PointSet& a : sets) {
        for (const PointSet& b : sets) {
            Rational computed = hausdorff(a, b);
            check.require(computed == brute_force_hausdorff(space, a, b),
                          "computed value disagrees with the sup/inf formula at (" +
                              a.to_literal() + "," + b.to_literal() + ")");
            Rational table;
            if (a == b)
                table = Rational(0);
            else if ((a.bits() & ~inside) == 0 && (b.bits() & ~inside) == 0)
                table = Rational(1, 4);
            else
                table = Rational(4, 5);
            if (computed != table) {
                ++mismatches;
                if (mismatches <= 20)
                    check.note("table says " + table.to_string() + " but H(" + a.to_literal() +
                               "," + b.to_literal() + ") = " + computed.to_string());
            }
        }
    }
    check.require(mismatches == 0,
                  "three-case table fails on " + std::to_string(mismatches) +
                      " ordered pairs; the computed values match the sup/inf formula, so the "
                      "summary table itself overstates pairs whose symmetric difference lies "
                      "inside {1,2}");
}

// 2. Every edged pair of the first instance satisfies the max-type
//    inequality, and the four worked cases reproduce lhs = 1/4 with
//    bound psi(4/5) = 4/9.
void criterion_psi1_pairs(Checker& check) {
    auto inst = fixtures::load_corpus_instance("example_2_2.instance");
    const auto& finite = inst->finite();
    CertificationReport report = certify_psi1(*finite.map_s, *finite.map_t, *inst->gauge,
                                              *finite.graph, options_of(*inst));
    check.require(report.all_pairs_pass(), "some edged pair fails the inequality");
    check.require(!report.pair_records.empty(), "the sweep produced no records");

    check.require(inst->gauge->eval(Rational(4, 5)) == Rational(4, 9),
                  "gauge value at 4/5 is not 4/9");

    const FiniteMetricSpace& space = *finite.space;
    auto lhs_of = [&](const PointSet& a, const PointSet& b) {
        return hausdorff(finite.map_s->apply(a), finite.map_s->apply(b));
    };
    struct Case {
        const char* a;
        const char* b;
    };
    // The four worked configurations: subsets of {1,2} against sets beyond
    // it, in both orders.
    Case cases[] = {{"{1}", "{3}"}, {"{2}", "{2,3}"}, {"{3}", "{1}"}, {"{2,3}", "{1,2}"}};
    for (const Case& c : cases) {
        PointSet a(space, fixtures::read_literal(space, c.a));
        PointSet b(space, fixtures::read_literal(space, c.b));
        Rational lhs = lhs_of(a, b);
        Rational m = m1_measure(a, b, *finite.map_s, *finite.map_t);
        Rational bound = inst->gauge->eval(m);
        check.require(lhs == Rational(1, 4), std::string("case (") + c.a + "," + c.b +
                                                 "): lhs is " + lhs.to_string() + ", not 1/4");
        check.require(m == Rational(4, 5), std::string("case (") + c.a + "," + c.b +
                                               "): measure is " + m.to_string() + ", not 4/5");
        check.require(bound == Rational(4, 9), std::string("case (") + c.a + "," + c.b +
                                                   "): bound is " + bound.to_string() +
                                                   ", not 4/9");
        check.require(lhs <= bound, "worked case does not pass");
    }
}

// 3. The range-containment hypothesis is refuted on the first instance with
//    the exact witness {1,2}.
void criterion_range_discrepancy(Checker& check) {
    auto inst = fixtures::load_corpus_instance("example_2_2.instance");
    const auto& finite = inst->finite();
    CertificationReport report = certify_psi1(*finite.map_s, *finite.map_t, *inst->gauge,
                                              *finite.graph, options_of(*inst));
    const HypothesisCheck* range = report.find_check("range_containment");
    check.require(range != nullptr, "range_containment check missing");
    if (range) {
        check.require(range->verdict == HypothesisVerdict::Refuted,
                      "range_containment should be refuted");
        check.require(range->witness == "{1,2}",
                      "range witness is '" + range->witness + "', expected {1,2}");
    }
    check.require(report.overall == OverallVerdict::CertifiedWithCaveats,
                  "overall verdict should be CertifiedWithCaveats");
}

// 4. The second instance's gauge is refuted from the class with the exact
//    witness psi(1/2) = 3/5 >= 1/2, while every edged pair inequality still
//    passes with lhs = 1/4 strictly below psi(4/5).
void criterion_gauge_discrepancy(Checker& check) {
    auto inst = fixtures::load_corpus_instance("example_2_3.instance");
    const auto& finite = inst->finite();

    GaugeVerdict verdict =
        classify_gauge(*inst->gauge, inst->options.probes, inst->options.iterations,
                       inst->options.tail_tolerance);
    check.require(verdict.in_psi == CheckVerdict::Refuted, "gauge should be refuted");
    check.require(verdict.below_identity_witness.has_value(), "missing below-identity witness");
    if (verdict.below_identity_witness) {
        check.require(*verdict.below_identity_witness == Rational(1, 2),
                      "witness is " + verdict.below_identity_witness->to_string() +
                          ", expected 1/2");
    }
    check.require(inst->gauge->eval(Rational(1, 2)) == Rational(3, 5),
                  "gauge value at 1/2 is not 3/5");
    check.require(inst->gauge->eval(Rational(1, 2)) >= Rational(1, 2),
                  "witness does not self-certify");

    CertificationReport report = certify_psi1(*finite.map_s, *finite.map_t, *inst->gauge,
                                              *finite.graph, options_of(*inst));
    check.require(report.all_pairs_pass(), "an edged pair inequality fails");
    check.require(report.overall == OverallVerdict::Refuted,
                  "overall verdict should be Refuted via the gauge");
    Rational bound = inst->gauge->eval(Rational(4, 5));
    check.note("bound at 4/5 evaluates to " + bound.to_string());
    for (const PairRecord& record : report.pair_records) {
        if (record.lhs != Rational(0)) {
            check.require(record.lhs == Rational(1, 4),
                          "nonzero lhs is " + record.lhs.to_string() + ", not 1/4");
            check.require(record.m_value == Rational(4, 5),
                          "measure is " + record.m_value.to_string() + ", not 4/5");
            check.require(record.bound == bound, "bound differs from the gauge value at 4/5");
            check.require(record.lhs < record.bound, "lhs not strictly below the bound");
        }
    }
}

// 5. The interval instance reproduces the weighted-sum chain exactly:
//    lhs = 10, measure = 40/3, bound = 100/9.
void criterion_psi2_chain(Checker& check) {
    auto inst = fixtures::load_corpus_instance("example_2_7.instance");
    const auto& intervals = inst->intervals();
    check.require(inst->params.has_value(), "interval instance should carry weights");
    if (!inst->params) return;
    check.require(inst->params->alpha == Rational(5, 6) && inst->params->beta == Rational(0) &&
                      inst->params->gamma == Rational(1, 6) &&
                      inst->params->delta1 == Rational(0) && inst->params->delta2 == Rational(0),
                  "weights are not (5/6, 0, 1/6, 0, 0)");
    CertificationReport report =
        certify_psi2_intervals(*intervals.map_s, *intervals.map_t, *inst->gauge, *inst->params,
                               intervals.probes, options_of(*inst));
    check.require(report.overall == OverallVerdict::Certified, "interval instance should certify");
    const PairRecord* cross = find_pair(report, "[0,10]", "[10,20]");
    check.require(cross != nullptr, "cross-case pair record missing");
    if (cross) {
        check.require(cross->lhs == Rational(10), "lhs is " + cross->lhs.to_string() + ", not 10");
        check.require(cross->m_value == Rational(40, 3),
                      "measure is " + cross->m_value.to_string() + ", not 40/3");
        check.require(cross->bound == Rational(100, 9),
                      "bound is " + cross->bound.to_string() + ", not 100/9");
        check.require(cross->pass, "cross-case pair does not pass");
    }
}

// 6. Fixed point enumeration lands on {1}, {1} and [0,10], with weak
//    compatibility holding at every coincidence point.
void criterion_solver_reproduction(Checker& check) {
    auto inst22 = fixtures::load_corpus_instance("example_2_2.instance");
    auto inst23 = fixtures::load_corpus_instance("example_2_3.instance");
    auto inst27 = fixtures::load_corpus_instance("example_2_7.instance");

    for (const auto& [name, inst] :
         {std::pair<const char*, const Instance*>{"first", inst22.get()},
          std::pair<const char*, const Instance*>{"second", inst23.get()}}) {
        const auto& finite = inst->finite();
        auto fixed = enumerate_common_fixed_points(*finite.map_s, *finite.map_t);
        check.require(fixed.common.size() == 1 && fixed.common[0].to_literal() == "{1}",
                      std::string(name) + " finite instance: common fixed points are not [{1}]");
        for (const PointSet& u : enumerate_coincidence_points(*finite.map_s, *finite.map_t)) {
            check.require(finite.map_s->apply(finite.map_t->apply(u)) ==
                              finite.map_t->apply(finite.map_s->apply(u)),
                          std::string(name) + " instance: maps do not commute at " +
                              u.to_literal());
        }
    }

    const auto& intervals = inst27->intervals();
    auto fixed = enumerate_common_fixed_points_intervals(*intervals.map_s, *intervals.map_t,
                                                         intervals.probes);
    check.require(fixed.common.size() == 1 && fixed.common[0].to_literal() == "[0,10]",
                  "interval instance: common fixed points are not [[0,10]]");
    for (const ClosedInterval& u : enumerate_coincidence_points_intervals(
             *intervals.map_s, *intervals.map_t, intervals.probes)) {
        check.require(intervals.map_s->apply(intervals.map_t->apply(u)) ==
                          intervals.map_t->apply(intervals.map_s->apply(u)),
                      "interval maps do not commute at " + u.to_literal());
    }
}

// 7. On 50 seeded random validated spaces (n <= 6) the Hausdorff distance is
//    symmetric, vanishes exactly on equal sets, satisfies the triangle
//    inequality on all triples, and equals the brute-force formula.
void criterion_hausdorff_axioms(Checker& check) {
    std::mt19937_64 rng(20240817);
    for (int round = 0; round < 50; ++round) {
        auto space = fixtures::random_space(rng, 1 + rng() % 6);
        check.require(validate_metric(*space).ok(), "random space failed validation");
        auto sets = all_point_sets(*space);
        std::vector<std::vector<Rational>> h(sets.size(), std::vector<Rational>(sets.size()));
        for (size_t i = 0; i < sets.size(); ++i) {
            for (size_t j = 0; j < sets.size(); ++j) {
                h[i][j] = hausdorff(sets[i], sets[j]);
                if (h[i][j] != brute_force_hausdorff(*space, sets[i], sets[j])) {
                    check.require(false, "oracle disagreement");
                    return;
                }
            }
        }
        for (size_t i = 0; i < sets.size(); ++i) {
            for (size_t j = 0; j < sets.size(); ++j) {
                if (h[i][j] != h[j][i]) check.require(false, "symmetry broken");
                if ((h[i][j] == Rational(0)) != (i == j))
                    check.require(false, "zero-iff-equal broken");
                for (size_t k = 0; k < sets.size(); ++k) {
                    if (h[i][k] > h[i][j] + h[j][k]) {
                        check.require(false, "triangle inequality broken");
                        return;
                    }
                }
            }
        }
    }
}

// 8. Reductions: the max-type measure with both maps the identity equals the
//    Hausdorff distance, and the preimage iteration with the identity in the
//    T slot replays the plain orbit trace for trace.
void criterion_reductions(Checker& check) {
    std::mt19937_64 rng(424242);

    auto inst22 = fixtures::load_corpus_instance("example_2_2.instance");
    std::vector<std::shared_ptr<const FiniteMetricSpace>> spaces{inst22->finite().space};
    for (int i = 0; i < 5; ++i) spaces.push_back(fixtures::random_space(rng, 2 + rng() % 4));
    for (const auto& space : spaces) {
        TableSetMap identity = TableSetMap::identity(*space);
        for (const PointSet& a : all_point_sets(*space)) {
            for (const PointSet& b : all_point_sets(*space)) {
                if (m1_measure(a, b, identity, identity) != hausdorff(a, b)) {
                    check.require(false, "identity reduction fails at (" + a.to_literal() + "," +
                                             b.to_literal() + ")");
                    return;
                }
            }
        }
    }

    for (int round = 0; round < 20; ++round) {
        auto space = fixtures::random_space(rng, 2 + rng() % 4);
        TableSetMap s = fixtures::random_table_map(rng, *space);
        TableSetMap identity = TableSetMap::identity(*space);
        auto sets = all_point_sets(*space);
        PointSet start = sets[rng() % sets.size()];
        size_t budget = 1u << space->size();
        IterationTrace via_preimage = jungck_iterate(s, identity, start, budget);
        IterationTrace via_orbit = picard_iterate(s, start, budget);
        bool same = via_preimage.termination == via_orbit.termination &&
                    via_preimage.steps.size() == via_orbit.steps.size() &&
                    via_preimage.coincidence == via_orbit.coincidence &&
                    via_preimage.cycle_period == via_orbit.cycle_period;
        if (same) {
            for (size_t i = 0; i < via_orbit.steps.size(); ++i) {
                same = same && via_preimage.steps[i].current == via_orbit.steps[i].current &&
                       via_preimage.steps[i].s_image == via_orbit.steps[i].s_image &&
                       via_preimage.steps[i].t_image == via_orbit.steps[i].t_image;
            }
        }
        check.require(same, "identity-T iteration diverges from the plain orbit on round " +
                                std::to_string(round));
    }
}

// 9. On seeded random total table maps (n <= 5) the iteration terminates
//    within the pigeonhole budget with one of the declared outcomes, and
//    every found coincidence re-verifies exactly.
void criterion_termination(Checker& check) {
    std::mt19937_64 rng(7171);
    for (int round = 0; round < 40; ++round) {
        size_t n = 2 + rng() % 4;
        auto space = fixtures::random_space(rng, n);
        TableSetMap s = fixtures::random_table_map(rng, *space);
        TableSetMap t = fixtures::random_table_map(rng, *space);
        auto sets = all_point_sets(*space);
        PointSet start = sets[rng() % sets.size()];
        IterationTrace trace = jungck_iterate(s, t, start, 1u << n);
        bool declared = trace.termination == Termination::CoincidenceFound ||
                        trace.termination == Termination::CycleDetected ||
                        trace.termination == Termination::RangeViolation ||
                        trace.termination == Termination::StepLimit;
        check.require(declared, "undeclared outcome");
        check.require(trace.termination != Termination::StepLimit,
                      "iteration exceeded the pigeonhole budget");
        check.require(trace.steps.size() <= (1u << n) - 1u, "trace longer than the hyperspace");
        if (trace.termination == Termination::CoincidenceFound) {
            check.require(s.apply(*trace.coincidence) == t.apply(*trace.coincidence),
                          "coincidence does not re-verify");
        }
    }
}

// 10. Machine-format reports for the three bundled instances are
//     byte-identical across two consecutive runs.
void criterion_determinism(Checker& check) {
    struct Case {
        const char* file;
        ContractionKind kind;
    };
    Case cases[] = {{"example_2_2.instance", ContractionKind::Psi1},
                    {"example_2_3.instance", ContractionKind::Psi1},
                    {"example_2_7.instance", ContractionKind::Psi2}};
    for (const Case& c : cases) {
        RunRequest request;
        request.command = CommandKind::Certify;
        request.certify_kind = c.kind;
        request.format = ReportFormat::Machine;
        auto first_instance = fixtures::load_corpus_instance(c.file);
        RunOutcome first = run_command(*first_instance, request);
        auto second_instance = fixtures::load_corpus_instance(c.file);
        RunOutcome second = run_command(*second_instance, request);
        check.require(first.document == second.document,
                      std::string(c.file) + ": machine reports differ between runs");
        check.require(!first.document.empty(), "empty machine report");
    }
}

struct Criterion {
    int number;
    const char* title;
    std::function<void(Checker&)> run;
};

const Criterion kCriteria[] = {
    {1, "Hausdorff values match the three-case summary table on the first instance",
     criterion_hausdorff_table},
    {2, "every edged pair of the first instance passes; worked cases give 1/4 <= 4/9",
     criterion_psi1_pairs},
    {3, "range containment is refuted on the first instance with witness {1,2}",
     criterion_range_discrepancy},
    {4, "the second instance's gauge is refuted at 1/2 while its pairs still pass",
     criterion_gauge_discrepancy},
    {5, "the interval instance reproduces lhs 10, measure 40/3, bound 100/9",
     criterion_psi2_chain},
    {6, "common fixed points enumerate to {1}, {1} and [0,10] with commuting maps",
     criterion_solver_reproduction},
    {7, "Hausdorff metric axioms and oracle equivalence on 50 random spaces",
     criterion_hausdorff_axioms},
    {8, "identity reductions: measure equals distance; preimage iteration replays the orbit",
     criterion_reductions},
    {9, "random-map iterations stay within the pigeonhole budget and re-verify",
     criterion_termination},
    {10, "machine-format corpus reports are byte-identical across runs",
     criterion_determinism},
};

int run_criterion(const Criterion& criterion) {
    Checker check;
    try {
        criterion.run(check);
    } catch (const std::exception& e) {
        check.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << criterion.number << ": " << (check.ok ? "PASS" : "FAIL")
              << " - " << criterion.title << "\n";
    std::cout << check.detail.str();
    return check.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    int failures = 0;
    if (argc > 1) {
        int wanted = std::atoi(argv[1]);
        for (const Criterion& criterion : kCriteria) {
            if (criterion.number == wanted) return run_criterion(criterion);
        }
        std::cerr << "unknown criterion " << wanted << "\n";
        return 64;
    }
    for (const Criterion& criterion : kCriteria) {
        failures += run_criterion(criterion);
    }
    if (failures) std::cout << failures << " criterion(s) failing\n";
    return failures;
}
