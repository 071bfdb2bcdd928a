#include "fpgraph/certify.hpp"

#include "fpgraph/errors.hpp"
#include "fpgraph/solve.hpp"

#include <functional>

namespace fpgraph {

namespace {

const Rational kZero;
const Rational kTwo(2);

} // namespace

void Psi2Params::validate() const {
    if (alpha < kZero || beta < kZero || gamma < kZero || delta1 < kZero || delta2 < kZero)
        throw parameter_error("contraction weights must be nonnegative");
    if (delta2 < delta1) throw parameter_error("delta1 must not exceed delta2");
    if (alpha + beta + gamma + delta1 + delta2 > Rational(1))
        throw parameter_error("contraction weights must sum to at most 1");
}

namespace {

template <class Elem, class Map, class Dist>
Rational m1_of(const Elem& a, const Elem& b, const Map& s, const Map& t, Dist&& dist) {
    Elem sa = s.apply(a), sb = s.apply(b), ta = t.apply(a), tb = t.apply(b);
    Rational value = dist(ta, tb);
    value = max(value, dist(sa, ta));
    value = max(value, dist(sb, tb));
    value = max(value, (dist(sa, tb) + dist(sb, ta)) / kTwo);
    return value;
}

template <class Elem, class Map, class Dist>
Rational m2_of(const Elem& a, const Elem& b, const Map& s, const Map& t, const Psi2Params& p,
               Dist&& dist) {
    p.validate();
    Elem sa = s.apply(a), sb = s.apply(b), ta = t.apply(a), tb = t.apply(b);
    return p.alpha * dist(ta, tb) + p.beta * dist(sa, ta) + p.gamma * dist(sb, tb) +
           p.delta1 * dist(sa, tb) + p.delta2 * dist(sb, ta);
}

Rational dist_sets(const PointSet& a, const PointSet& b) {
    return hausdorff(a, b);
}

Rational dist_intervals(const ClosedInterval& a, const ClosedInterval& b) {
    return hausdorff_interval(a, b);
}

void require_same_map_space(const TableSetMap& s, const TableSetMap& t) {
    if (&s.space() != &t.space()) throw structural_error("maps are defined on different spaces");
}

} // namespace

Rational m1_measure(const PointSet& a, const PointSet& b, const TableSetMap& s,
                    const TableSetMap& t) {
    require_same_map_space(s, t);
    return m1_of(a, b, s, t, dist_sets);
}

Rational m1_measure(const ClosedInterval& a, const ClosedInterval& b, const IntervalRuleMap& s,
                    const IntervalRuleMap& t) {
    return m1_of(a, b, s, t, dist_intervals);
}

Rational m2_measure(const PointSet& a, const PointSet& b, const TableSetMap& s,
                    const TableSetMap& t, const Psi2Params& p) {
    require_same_map_space(s, t);
    return m2_of(a, b, s, t, p, dist_sets);
}

Rational m2_measure(const ClosedInterval& a, const ClosedInterval& b, const IntervalRuleMap& s,
                    const IntervalRuleMap& t, const Psi2Params& p) {
    return m2_of(a, b, s, t, p, dist_intervals);
}

const HypothesisCheck* CertificationReport::find_check(const std::string& name) const {
    for (const HypothesisCheck& check : hypothesis_checks) {
        if (check.name == name) return &check;
    }
    return nullptr;
}

bool CertificationReport::all_pairs_pass() const {
    for (const PairRecord& record : pair_records) {
        if (!record.pass) return false;
    }
    return true;
}

namespace {

std::string verdict_word(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Verified:
            return "verified";
        case CheckVerdict::Refuted:
            return "refuted";
        case CheckVerdict::Inconclusive:
            return "inconclusive";
    }
    return {};
}

std::string series_word(SeriesVerdict v) {
    switch (v) {
        case SeriesVerdict::Verified:
            return "verified";
        case SeriesVerdict::Evidence:
            return "evidence";
        case SeriesVerdict::Refuted:
            return "refuted";
        case SeriesVerdict::Inconclusive:
            return "inconclusive";
    }
    return {};
}

HypothesisVerdict from_check(CheckVerdict v) {
    switch (v) {
        case CheckVerdict::Verified:
            return HypothesisVerdict::Verified;
        case CheckVerdict::Refuted:
            return HypothesisVerdict::Refuted;
        case CheckVerdict::Inconclusive:
            return HypothesisVerdict::Inconclusive;
    }
    return HypothesisVerdict::Inconclusive;
}

HypothesisCheck gauge_check_from_verdict(const GaugeVerdict& verdict) {
    HypothesisCheck check;
    check.name = "gauge_in_Psi";
    check.verdict = from_check(verdict.in_psi);
    if (auto witness = verdict.primary_witness()) check.witness = witness->to_string();
    check.detail = "nondecreasing " + verdict_word(verdict.nondecreasing) + "; below identity " +
                   verdict_word(verdict.below_identity) + "; series " +
                   series_word(verdict.series_convergent);
    if (verdict.nondecreasing_witness) {
        check.detail += "; decreases between " + verdict.nondecreasing_witness->t1.to_string() +
                        " and " + verdict.nondecreasing_witness->t2.to_string();
    }
    return check;
}

GaugeVerdict classify_with_options(const GaugeFunction& gauge, const CertifyOptions& options) {
    std::span<const Rational> probes = options.gauge_probes.empty()
                                           ? default_gauge_probes()
                                           : std::span<const Rational>(options.gauge_probes);
    const Rational& tol =
        options.tail_tolerance ? *options.tail_tolerance : default_tail_tolerance();
    return classify_gauge(gauge, probes, options.gauge_iterations, tol);
}

// --------------------------------------------------------------------------
// Finite-space certification
// --------------------------------------------------------------------------

struct FiniteContext {
    const TableSetMap& s;
    const TableSetMap& t;
    const DirectedGraph& base;
    const DirectedGraph* effective; // base or its symmetrization
    std::optional<DirectedGraph> tilde_storage;
    std::vector<PointSet> universe;

    FiniteContext(const TableSetMap& s_map, const TableSetMap& t_map, const DirectedGraph& g,
                  bool lifted)
        : s(s_map), t(t_map), base(g), universe(all_point_sets(g.space())) {
        if (&s.space() != &g.space() || &t.space() != &g.space())
            throw structural_error("maps and graph live on different spaces");
        if (lifted) {
            tilde_storage = derived_graphs(g).tilde;
            effective = &*tilde_storage;
        } else {
            effective = &base;
        }
    }
    // `effective` may point into this object; copying would leave it dangling.
    FiniteContext(const FiniteContext&) = delete;
    FiniteContext& operator=(const FiniteContext&) = delete;
};

using MeasureFn = std::function<Rational(const PointSet&, const PointSet&)>;
using PairLhsFn = std::function<Rational(const PointSet&, const PointSet&)>;

std::vector<PairRecord> sweep_pairs(const std::vector<PointSet>& universe,
                                    const DirectedGraph& edge_graph, const PairLhsFn& lhs_fn,
                                    const MeasureFn& measure, const GaugeFunction& gauge) {
    std::vector<PairRecord> records;
    for (const PointSet& a : universe) {
        for (const PointSet& b : universe) {
            if (!set_edge(edge_graph, a, b)) continue;
            PairRecord record;
            record.a = a.to_literal();
            record.b = b.to_literal();
            record.lhs = lhs_fn(a, b);
            record.m_value = measure(a, b);
            record.bound = gauge.eval(record.m_value);
            record.pass = record.lhs <= record.bound;
            records.push_back(std::move(record));
        }
    }
    return records;
}

HypothesisCheck domain_edge_check(const FiniteContext& ctx, bool for_s) {
    HypothesisCheck check;
    check.name = for_s ? "domain_edges_S" : "domain_edges_T";
    const TableSetMap& map = for_s ? ctx.s : ctx.t;
    // Gating orientation: (S(U), U) for S and (U, T(U)) for T; the reverse
    // orientation is evaluated as well and reported in the detail, since the
    // corpus itself is not consistent about the direction.
    std::optional<PointSet> forward_witness, reverse_witness;
    for (const PointSet& u : ctx.universe) {
        PointSet image = map.apply(u);
        const PointSet& from = for_s ? image : u;
        const PointSet& to = for_s ? u : image;
        if (!forward_witness && !set_edge(*ctx.effective, from, to)) forward_witness = u;
        if (!reverse_witness && !set_edge(*ctx.effective, to, from)) reverse_witness = u;
        if (forward_witness && reverse_witness) break;
    }
    check.verdict = forward_witness ? HypothesisVerdict::Refuted : HypothesisVerdict::Verified;
    if (forward_witness) check.witness = forward_witness->to_literal();
    std::string orientation = for_s ? "(S(U),U)" : "(U,T(U))";
    std::string reverse_orientation = for_s ? "(U,S(U))" : "(T(U),U)";
    check.detail = orientation + (forward_witness ? " fails at " + forward_witness->to_literal()
                                                  : " holds for every U");
    check.detail += "; " + reverse_orientation +
                    (reverse_witness ? " fails at " + reverse_witness->to_literal()
                                     : " holds for every U");
    return check;
}

HypothesisCheck range_containment_check(const FiniteContext& ctx) {
    HypothesisCheck check;
    check.name = "range_containment";
    check.verdict = HypothesisVerdict::Verified;
    std::vector<PointSet> t_range = ctx.t.range();
    auto in_t_range = [&](const PointSet& image) {
        for (const PointSet& r : t_range) {
            if (r == image) return true;
        }
        return false;
    };
    for (const PointSet& u : ctx.universe) {
        PointSet image = ctx.s.apply(u);
        if (!in_t_range(image)) {
            check.verdict = HypothesisVerdict::Refuted;
            check.witness = image.to_literal();
            check.detail = image.to_literal() + " = S(" + u.to_literal() +
                           ") has no preimage under T";
            return check;
        }
    }
    check.detail = "range(S) is contained in range(T)";
    return check;
}

HypothesisCheck weak_connectivity_check(const DirectedGraph& base) {
    HypothesisCheck check;
    check.name = "weak_connectivity";
    bool connected = weakly_connected(base);
    check.verdict = connected ? HypothesisVerdict::Verified : HypothesisVerdict::Refuted;
    check.detail = connected ? "the symmetrized graph is connected"
                             : "the symmetrized graph is disconnected";
    return check;
}

HypothesisCheck r_transitivity_check(const FiniteContext& ctx) {
    HypothesisCheck check;
    check.name = "r_transitivity";
    TransitivityResult result = r_transitive(*ctx.effective, ctx.universe);
    check.verdict = result.transitive ? HypothesisVerdict::Verified : HypothesisVerdict::Refuted;
    if (result.counterexample) {
        const auto& [a, b, c] = *result.counterexample;
        check.witness = "(" + a.to_literal() + "," + b.to_literal() + "," + c.to_literal() + ")";
        check.detail = "R(" + a.to_literal() + "," + b.to_literal() + ") and R(" + b.to_literal() +
                       "," + c.to_literal() + ") hold but R(" + a.to_literal() + "," +
                       c.to_literal() + ") fails";
    } else {
        check.detail = "R is transitive over the full hyperspace";
    }
    return check;
}

HypothesisCheck p_star_check(const DirectedGraph& base) {
    HypothesisCheck check;
    check.name = "p_star";
    PStarResult result = property_p_star(base);
    check.verdict = result.verdict == PStarVerdict::HoldsTrivially ? HypothesisVerdict::Verified
                                                                   : HypothesisVerdict::Inconclusive;
    check.detail = result.justification;
    return check;
}

HypothesisCheck weak_compatibility_check(const TableSetMap& s, const TableSetMap& t,
                                         const std::vector<PointSet>& coincidence_points) {
    HypothesisCheck check;
    check.name = "weak_compatibility";
    check.verdict = HypothesisVerdict::Verified;
    if (coincidence_points.empty()) {
        check.detail = "no coincidence points, so the condition is vacuous";
        return check;
    }
    for (const PointSet& u : coincidence_points) {
        PointSet st = s.apply(t.apply(u));
        PointSet ts = t.apply(s.apply(u));
        if (!(st == ts)) {
            check.verdict = HypothesisVerdict::Refuted;
            check.witness = u.to_literal();
            check.detail = "S(T(" + u.to_literal() + ")) = " + st.to_literal() +
                           " but T(S(" + u.to_literal() + ")) = " + ts.to_literal();
            return check;
        }
    }
    check.detail = "S and T commute at every coincidence point";
    return check;
}

HypothesisCheck completeness_check(const FiniteContext& ctx, const std::string& name,
                                   const std::vector<PointSet>& family,
                                   const std::string& family_name) {
    HypothesisCheck check;
    check.name = name;
    if (family.empty()) {
        check.verdict = HypothesisVerdict::Verified;
        check.detail = family_name + " is empty, so completeness is vacuous";
        return check;
    }
    CompletenessResult result = subset_complete(*ctx.effective, family);
    check.verdict = result.complete ? HypothesisVerdict::Verified : HypothesisVerdict::Refuted;
    if (result.counterexample) {
        check.witness = "(" + result.counterexample->first.to_literal() + "," +
                        result.counterexample->second.to_literal() + ")";
        check.detail = "no edge for the ordered pair " + check.witness + " in " + family_name;
    } else {
        check.detail = "every ordered pair of " + family_name + " carries an edge";
    }
    return check;
}

std::vector<HypothesisCheck> finite_side_hypotheses(const FiniteContext& ctx) {
    std::vector<HypothesisCheck> checks;
    checks.push_back(domain_edge_check(ctx, /*for_s=*/true));
    checks.push_back(domain_edge_check(ctx, /*for_s=*/false));
    checks.push_back(range_containment_check(ctx));
    checks.push_back(weak_connectivity_check(ctx.base));
    checks.push_back(r_transitivity_check(ctx));
    checks.push_back(p_star_check(ctx.base));
    std::vector<PointSet> cp = enumerate_coincidence_points(ctx.s, ctx.t);
    checks.push_back(weak_compatibility_check(ctx.s, ctx.t, cp));
    checks.push_back(completeness_check(ctx, "cp_complete", cp, "CP(S,T)"));
    FixedPointSets<PointSet> fixed = enumerate_common_fixed_points(ctx.s, ctx.t);
    checks.push_back(
        completeness_check(ctx, "common_fix_complete", fixed.common, "Fix(S) n Fix(T)"));
    return checks;
}

// A refuted gauge (or, for the single-map kind, broken edge/path preservation)
// refutes the contraction itself; every other failed hypothesis downgrades the
// verdict to a caveat so the pair findings stay visible.
OverallVerdict settle_overall(const CertificationReport& report,
                              const std::vector<std::string>& defining_checks) {
    bool pairs_ok = report.all_pairs_pass();
    bool defining_refuted = false;
    bool any_caveat = false;
    for (const HypothesisCheck& check : report.hypothesis_checks) {
        bool defining = false;
        for (const std::string& name : defining_checks) {
            if (check.name == name) defining = true;
        }
        if (defining && check.verdict == HypothesisVerdict::Refuted) defining_refuted = true;
        if (check.verdict == HypothesisVerdict::Refuted ||
            check.verdict == HypothesisVerdict::Inconclusive)
            any_caveat = true;
    }
    if (!pairs_ok || defining_refuted) return OverallVerdict::Refuted;
    if (any_caveat) return OverallVerdict::CertifiedWithCaveats;
    return OverallVerdict::Certified;
}

CertificationReport certify_pair_kind(const TableSetMap& s, const TableSetMap& t,
                                      const GaugeFunction& psi, const DirectedGraph& g,
                                      const CertifyOptions& options, const std::string& kind,
                                      const MeasureFn& measure, bool params_present) {
    require_same_map_space(s, t);
    FiniteContext ctx(s, t, g, options.undirected_lift);
    PairLhsFn lhs = [&](const PointSet& a, const PointSet& b) {
        return hausdorff(s.apply(a), s.apply(b));
    };

    CertificationReport report;
    report.kind = kind;
    report.undirected_lift = options.undirected_lift;
    report.pair_records = sweep_pairs(ctx.universe, *ctx.effective, lhs, measure, psi);
    if (options.undirected_lift) {
        report.directed_pair_records = sweep_pairs(ctx.universe, ctx.base, lhs, measure, psi);
    }

    HypothesisCheck params_check;
    params_check.name = "params_valid";
    if (params_present) {
        params_check.verdict = HypothesisVerdict::Verified;
        params_check.detail = "weights are nonnegative, delta1 <= delta2, sum <= 1";
    } else {
        params_check.verdict = HypothesisVerdict::Skipped;
        params_check.detail = "this contraction kind takes no weights";
    }
    report.hypothesis_checks.push_back(std::move(params_check));
    report.hypothesis_checks.push_back(gauge_check_from_verdict(classify_with_options(psi, options)));
    for (HypothesisCheck& check : finite_side_hypotheses(ctx)) {
        report.hypothesis_checks.push_back(std::move(check));
    }

    report.overall = settle_overall(report, {"gauge_in_Psi"});
    return report;
}

} // namespace

CertificationReport certify_psi1(const TableSetMap& s, const TableSetMap& t,
                                 const GaugeFunction& psi, const DirectedGraph& g,
                                 const CertifyOptions& options) {
    MeasureFn measure = [&](const PointSet& a, const PointSet& b) {
        return m1_measure(a, b, s, t);
    };
    return certify_pair_kind(s, t, psi, g, options, "psi1", measure, /*params_present=*/false);
}

CertificationReport certify_psi2(const TableSetMap& s, const TableSetMap& t,
                                 const GaugeFunction& psi, const Psi2Params& p,
                                 const DirectedGraph& g, const CertifyOptions& options) {
    p.validate();
    MeasureFn measure = [&](const PointSet& a, const PointSet& b) {
        return m2_measure(a, b, s, t, p);
    };
    return certify_pair_kind(s, t, psi, g, options, "psi2", measure, /*params_present=*/true);
}

CertificationReport certify_phi(const TableSetMap& t, const GaugeFunction& phi,
                                const DirectedGraph& g, const CertifyOptions& options) {
    FiniteContext ctx(t, t, g, options.undirected_lift);

    CertificationReport report;
    report.kind = "phi";
    report.undirected_lift = options.undirected_lift;

    PairLhsFn lhs = [&](const PointSet& a, const PointSet& b) {
        return hausdorff(t.apply(a), t.apply(b));
    };
    MeasureFn measure = [](const PointSet& a, const PointSet& b) { return hausdorff(a, b); };
    report.pair_records = sweep_pairs(ctx.universe, *ctx.effective, lhs, measure, phi);
    if (options.undirected_lift) {
        report.directed_pair_records = sweep_pairs(ctx.universe, ctx.base, lhs, measure, phi);
    }

    HypothesisCheck edge_preservation;
    edge_preservation.name = "edge_preservation";
    edge_preservation.verdict = HypothesisVerdict::Verified;
    HypothesisCheck path_preservation;
    path_preservation.name = "path_preservation";
    path_preservation.verdict = HypothesisVerdict::Verified;
    for (const PointSet& a : ctx.universe) {
        for (const PointSet& b : ctx.universe) {
            if (edge_preservation.verdict == HypothesisVerdict::Verified &&
                set_edge(*ctx.effective, a, b) &&
                !set_edge(*ctx.effective, t.apply(a), t.apply(b))) {
                edge_preservation.verdict = HypothesisVerdict::Refuted;
                edge_preservation.witness = "(" + a.to_literal() + "," + b.to_literal() + ")";
                edge_preservation.detail = "edge between the pair, none between the images";
            }
            if (path_preservation.verdict == HypothesisVerdict::Verified &&
                relation_r(*ctx.effective, a, b) &&
                !relation_r(*ctx.effective, t.apply(a), t.apply(b))) {
                path_preservation.verdict = HypothesisVerdict::Refuted;
                path_preservation.witness = "(" + a.to_literal() + "," + b.to_literal() + ")";
                path_preservation.detail = "path between the pair, none between the images";
            }
        }
    }
    if (edge_preservation.verdict == HypothesisVerdict::Verified)
        edge_preservation.detail = "images of edged pairs stay edged";
    if (path_preservation.verdict == HypothesisVerdict::Verified)
        path_preservation.detail = "images of path-joined pairs stay path-joined";

    PhiClassVerdict phi_class = classify_phi_class(phi);
    HypothesisCheck gauge_check;
    gauge_check.name = "gauge_in_Phi";
    gauge_check.verdict = from_check(phi_class.in_class);
    if (auto witness = phi_class.primary_witness()) gauge_check.witness = witness->to_string();
    gauge_check.detail = "upper semicontinuous " + verdict_word(phi_class.upper_semicontinuous) +
                         "; nondecreasing " + verdict_word(phi_class.nondecreasing) +
                         "; below identity " + verdict_word(phi_class.below_identity);

    report.hypothesis_checks.push_back(std::move(edge_preservation));
    report.hypothesis_checks.push_back(std::move(path_preservation));
    report.hypothesis_checks.push_back(std::move(gauge_check));
    report.hypothesis_checks.push_back(weak_connectivity_check(ctx.base));
    report.hypothesis_checks.push_back(r_transitivity_check(ctx));
    report.hypothesis_checks.push_back(p_star_check(ctx.base));

    report.overall =
        settle_overall(report, {"gauge_in_Phi", "edge_preservation", "path_preservation"});
    return report;
}

namespace {

using IntervalMeasureFn = std::function<Rational(const ClosedInterval&, const ClosedInterval&)>;

CertificationReport certify_intervals_kind(const IntervalRuleMap& s, const IntervalRuleMap& t,
                                           const GaugeFunction& psi,
                                           const std::vector<ClosedInterval>& probe_family,
                                           const CertifyOptions& options, const std::string& kind,
                                           const IntervalMeasureFn& measure, bool params_present) {
    if (probe_family.empty()) throw structural_error("interval certification needs probes");

    std::vector<ClosedInterval> probes = probe_family;
    std::sort(probes.begin(), probes.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
        return a.canonical_less(b);
    });

    CertificationReport report;
    report.kind = kind;
    report.undirected_lift = options.undirected_lift;

    for (const ClosedInterval& a : probes) {
        for (const ClosedInterval& b : probes) {
            PairRecord record;
            record.a = a.to_literal();
            record.b = b.to_literal();
            record.lhs = hausdorff_interval(s.apply(a), s.apply(b));
            record.m_value = measure(a, b);
            record.bound = psi.eval(record.m_value);
            record.pass = record.lhs <= record.bound;
            report.pair_records.push_back(std::move(record));
        }
    }

    HypothesisCheck params_check;
    params_check.name = "params_valid";
    if (params_present) {
        params_check.verdict = HypothesisVerdict::Verified;
        params_check.detail = "weights are nonnegative, delta1 <= delta2, sum <= 1";
    } else {
        params_check.verdict = HypothesisVerdict::Skipped;
        params_check.detail = "this contraction kind takes no weights";
    }
    report.hypothesis_checks.push_back(std::move(params_check));
    report.hypothesis_checks.push_back(gauge_check_from_verdict(classify_with_options(psi, options)));

    auto trivially = [&](const std::string& name) {
        HypothesisCheck check;
        check.name = name;
        check.verdict = HypothesisVerdict::Verified;
        check.detail = "complete lift: every ordered pair of probes carries an edge";
        return check;
    };
    report.hypothesis_checks.push_back(trivially("domain_edges_S"));
    report.hypothesis_checks.push_back(trivially("domain_edges_T"));

    HypothesisCheck range_check;
    range_check.name = "range_containment";
    range_check.verdict = HypothesisVerdict::Skipped;
    range_check.detail =
        "probe-family certification does not decide hyperspace-wide range containment; "
        "the solver reports a range violation when the iteration hits one";
    report.hypothesis_checks.push_back(std::move(range_check));

    report.hypothesis_checks.push_back(trivially("weak_connectivity"));
    report.hypothesis_checks.push_back(trivially("r_transitivity"));
    report.hypothesis_checks.push_back(trivially("p_star"));

    std::vector<ClosedInterval> cp = enumerate_coincidence_points_intervals(s, t, probes);
    HypothesisCheck compat;
    compat.name = "weak_compatibility";
    compat.verdict = HypothesisVerdict::Verified;
    if (cp.empty()) {
        compat.detail = "no coincidence points among the probes, so the condition is vacuous";
    } else {
        compat.detail = "S and T commute at every coincidence point";
        for (const ClosedInterval& u : cp) {
            ClosedInterval st = s.apply(t.apply(u));
            ClosedInterval ts = t.apply(s.apply(u));
            if (!(st == ts)) {
                compat.verdict = HypothesisVerdict::Refuted;
                compat.witness = u.to_literal();
                compat.detail = "S(T(" + u.to_literal() + ")) = " + st.to_literal() +
                                " but T(S(" + u.to_literal() + ")) = " + ts.to_literal();
                break;
            }
        }
    }
    report.hypothesis_checks.push_back(std::move(compat));

    report.overall = settle_overall(report, {"gauge_in_Psi"});
    return report;
}

} // namespace

CertificationReport certify_psi1_intervals(const IntervalRuleMap& s, const IntervalRuleMap& t,
                                           const GaugeFunction& psi,
                                           const std::vector<ClosedInterval>& probe_family,
                                           const CertifyOptions& options) {
    IntervalMeasureFn measure = [&](const ClosedInterval& a, const ClosedInterval& b) {
        return m1_measure(a, b, s, t);
    };
    return certify_intervals_kind(s, t, psi, probe_family, options, "psi1", measure,
                                  /*params_present=*/false);
}

CertificationReport certify_psi2_intervals(const IntervalRuleMap& s, const IntervalRuleMap& t,
                                           const GaugeFunction& psi, const Psi2Params& p,
                                           const std::vector<ClosedInterval>& probe_family,
                                           const CertifyOptions& options) {
    p.validate();
    IntervalMeasureFn measure = [&](const ClosedInterval& a, const ClosedInterval& b) {
        return m2_measure(a, b, s, t, p);
    };
    return certify_intervals_kind(s, t, psi, probe_family, options, "psi2", measure,
                                  /*params_present=*/true);
}

std::vector<HypothesisCheck> check_hypotheses(const TableSetMap& s, const TableSetMap& t,
                                              const DirectedGraph& g, bool undirected_lift) {
    require_same_map_space(s, t);
    FiniteContext ctx(s, t, g, undirected_lift);
    return finite_side_hypotheses(ctx);
}

} // namespace fpgraph
