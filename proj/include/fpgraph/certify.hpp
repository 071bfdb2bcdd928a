#pragma once

#include "fpgraph/gauge.hpp"
#include "fpgraph/graph.hpp"
#include "fpgraph/setmap.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fpgraph {

// Weights of the weighted-sum contraction measure. Field names follow the
// instance file format.
struct Psi2Params {
    Rational alpha, beta, gamma, delta1, delta2;
    void validate() const; // parameter_error on violation
};

// Max-type contraction measure:
// max{ H(TA,TB), H(SA,TA), H(SB,TB), (H(SA,TB)+H(SB,TA))/2 }.
Rational m1_measure(const PointSet& a, const PointSet& b, const TableSetMap& s,
                    const TableSetMap& t);
Rational m1_measure(const ClosedInterval& a, const ClosedInterval& b, const IntervalRuleMap& s,
                    const IntervalRuleMap& t);

// Weighted-sum contraction measure:
// alpha H(TA,TB) + beta H(SA,TA) + gamma H(SB,TB) + delta1 H(SA,TB) + delta2 H(SB,TA).
Rational m2_measure(const PointSet& a, const PointSet& b, const TableSetMap& s,
                    const TableSetMap& t, const Psi2Params& p);
Rational m2_measure(const ClosedInterval& a, const ClosedInterval& b, const IntervalRuleMap& s,
                    const IntervalRuleMap& t, const Psi2Params& p);

struct PairRecord {
    std::string a, b; // element literals
    Rational lhs;     // H(S(A), S(B)) for pair kinds, H(T(A), T(B)) for phi
    Rational m_value; // the measure fed to the gauge
    Rational bound;   // gauge applied to m_value
    bool pass;        // lhs <= bound (ties pass)
};

enum class HypothesisVerdict { Verified, Refuted, Inconclusive, Skipped };

struct HypothesisCheck {
    std::string name;
    HypothesisVerdict verdict = HypothesisVerdict::Inconclusive;
    std::string witness; // element/pair/triple literal or value, empty if none
    std::string detail;  // justification or secondary findings
};

enum class OverallVerdict { Certified, Refuted, CertifiedWithCaveats };

struct CertificationReport {
    std::string kind;            // "psi1" | "psi2" | "phi"
    bool undirected_lift = false;
    std::vector<PairRecord> pair_records; // operative sweep (lifted when the flag is set)
    // Secondary sweep under the directed reading, present only when the flag
    // asked for the undirected one, so both readings are visible side by side.
    std::optional<std::vector<PairRecord>> directed_pair_records;
    std::vector<HypothesisCheck> hypothesis_checks;
    OverallVerdict overall = OverallVerdict::Refuted;

    const HypothesisCheck* find_check(const std::string& name) const;
    bool all_pairs_pass() const;
};

struct CertifyOptions {
    bool undirected_lift = false;
    std::vector<Rational> gauge_probes; // empty -> defaults
    int gauge_iterations = kDefaultGaugeIterations;
    std::optional<Rational> tail_tolerance; // absent -> default
};

// Pair certification over the full hyperspace of a finite space.
CertificationReport certify_psi1(const TableSetMap& s, const TableSetMap& t,
                                 const GaugeFunction& psi, const DirectedGraph& g,
                                 const CertifyOptions& options = {});
CertificationReport certify_psi2(const TableSetMap& s, const TableSetMap& t,
                                 const GaugeFunction& psi, const Psi2Params& p,
                                 const DirectedGraph& g, const CertifyOptions& options = {});

// Single-map certification: edge preservation, path preservation, and the
// gauge inequality on edged pairs, each reported separately.
CertificationReport certify_phi(const TableSetMap& t, const GaugeFunction& phi,
                                const DirectedGraph& g, const CertifyOptions& options = {});

// Probe-family certification for interval instances. Every ordered pair of
// probes is swept (the complete lift); hyperspace-wide hypotheses that a probe
// family cannot settle are reported as skipped rather than guessed.
CertificationReport certify_psi1_intervals(const IntervalRuleMap& s, const IntervalRuleMap& t,
                                           const GaugeFunction& psi,
                                           const std::vector<ClosedInterval>& probe_family,
                                           const CertifyOptions& options = {});
CertificationReport certify_psi2_intervals(const IntervalRuleMap& s, const IntervalRuleMap& t,
                                           const GaugeFunction& psi, const Psi2Params& p,
                                           const std::vector<ClosedInterval>& probe_family,
                                           const CertifyOptions& options = {});

// The side hypotheses alone (domain edges in both orientations, range
// containment, weak compatibility, completeness of the coincidence and common
// fixed point families), without any pair sweep.
std::vector<HypothesisCheck> check_hypotheses(const TableSetMap& s, const TableSetMap& t,
                                              const DirectedGraph& g, bool undirected_lift = false);

} // namespace fpgraph
