#pragma once

#include "fpgraph/setmap.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace fpgraph {

// One visited set during an iteration, with both images.
template <class Elem>
struct IterationStep {
    Elem current;
    Elem s_image;
    Elem t_image;
};

enum class Termination { CoincidenceFound, CycleDetected, RangeViolation, StepLimit };

template <class Elem>
struct BasicIterationTrace {
    std::vector<IterationStep<Elem>> steps;
    Termination termination = Termination::StepLimit;
    std::optional<Elem> coincidence;    // CoincidenceFound
    std::optional<Elem> missing_target; // RangeViolation: S-image outside T's range
    size_t cycle_period = 0;            // CycleDetected
};

using IterationTrace = BasicIterationTrace<PointSet>;
using IntervalIterationTrace = BasicIterationTrace<ClosedInterval>;

namespace detail {

// Shared engine for the preimage iteration S(A_n) = T(A_{n+1}). The preimage
// is searched over `universe` and ties break to the canonically smallest
// candidate so traces are reproducible.
template <class Elem, class ApplyS, class ApplyT, class Less>
BasicIterationTrace<Elem> jungck_engine(const std::vector<Elem>& universe, ApplyS&& apply_s,
                                        ApplyT&& apply_t, Elem start, size_t max_steps,
                                        Less&& less) {
    BasicIterationTrace<Elem> trace;
    std::vector<Elem> visited;
    Elem current = std::move(start);
    size_t transitions = 0;
    for (;;) {
        for (size_t i = 0; i < visited.size(); ++i) {
            if (visited[i] == current) {
                trace.termination = Termination::CycleDetected;
                trace.cycle_period = visited.size() - i;
                return trace;
            }
        }
        Elem s_image = apply_s(current);
        Elem t_image = apply_t(current);
        trace.steps.push_back({current, s_image, t_image});
        visited.push_back(current);
        if (s_image == t_image) {
            trace.termination = Termination::CoincidenceFound;
            trace.coincidence = current;
            return trace;
        }
        if (transitions == max_steps) {
            trace.termination = Termination::StepLimit;
            return trace;
        }
        std::optional<Elem> next;
        for (const Elem& candidate : universe) {
            if (apply_t(candidate) == s_image) {
                if (!next || less(candidate, *next)) next = candidate;
            }
        }
        if (!next) {
            trace.termination = Termination::RangeViolation;
            trace.missing_target = s_image;
            return trace;
        }
        current = *next;
        ++transitions;
    }
}

} // namespace detail

// Constructive iteration from the coincidence-point existence argument:
// pick A_{n+1} with T(A_{n+1}) = S(A_n) until the images meet.
IterationTrace jungck_iterate(const TableSetMap& s, const TableSetMap& t, const PointSet& start,
                              size_t max_steps);

IntervalIterationTrace jungck_iterate_intervals(const IntervalRuleMap& s, const IntervalRuleMap& t,
                                                const std::vector<ClosedInterval>& probe_family,
                                                const ClosedInterval& start, size_t max_steps);

// Plain orbit A_{n+1} = T(A_n); stops at a fixed point of the map. Trace
// slots mirror the preimage iteration with the identity in the T position.
IterationTrace picard_iterate(const TableSetMap& map, const PointSet& start, size_t max_steps);

IntervalIterationTrace picard_iterate_intervals(const IntervalRuleMap& map,
                                                const ClosedInterval& start, size_t max_steps);

// Exhaustive sweeps, canonical order.
std::vector<PointSet> enumerate_coincidence_points(const TableSetMap& s, const TableSetMap& t);
std::vector<ClosedInterval> enumerate_coincidence_points_intervals(
    const IntervalRuleMap& s, const IntervalRuleMap& t,
    const std::vector<ClosedInterval>& probe_family);

template <class Elem>
struct FixedPointSets {
    std::vector<Elem> fix_s;
    std::vector<Elem> fix_t;
    std::vector<Elem> common;
};

FixedPointSets<PointSet> enumerate_common_fixed_points(const TableSetMap& s, const TableSetMap& t);
FixedPointSets<ClosedInterval> enumerate_common_fixed_points_intervals(
    const IntervalRuleMap& s, const IntervalRuleMap& t,
    const std::vector<ClosedInterval>& probe_family);

} // namespace fpgraph
