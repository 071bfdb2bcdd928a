#include "fpgraph/solve.hpp"

#include "fpgraph/errors.hpp"

namespace fpgraph {

namespace {

void require_shared_space(const TableSetMap& s, const TableSetMap& t) {
    if (&s.space() != &t.space()) throw structural_error("maps are defined on different spaces");
}

bool point_set_less(const PointSet& a, const PointSet& b) {
    return a.canonical_less(b);
}

bool interval_less(const ClosedInterval& a, const ClosedInterval& b) {
    return a.canonical_less(b);
}

} // namespace

IterationTrace jungck_iterate(const TableSetMap& s, const TableSetMap& t, const PointSet& start,
                              size_t max_steps) {
    require_shared_space(s, t);
    if (&start.space() != &s.space()) throw domain_error("start set outside the maps' space");
    if (max_steps < 1) throw domain_error("max_steps must be at least 1");
    std::vector<PointSet> universe = all_point_sets(s.space());
    return detail::jungck_engine(
        universe, [&](const PointSet& u) { return s.apply(u); },
        [&](const PointSet& u) { return t.apply(u); }, start, max_steps, point_set_less);
}

IntervalIterationTrace jungck_iterate_intervals(const IntervalRuleMap& s, const IntervalRuleMap& t,
                                                const std::vector<ClosedInterval>& probe_family,
                                                const ClosedInterval& start, size_t max_steps) {
    if (max_steps < 1) throw domain_error("max_steps must be at least 1");
    if (probe_family.empty()) throw domain_error("empty probe family");
    return detail::jungck_engine(
        probe_family, [&](const ClosedInterval& u) { return s.apply(u); },
        [&](const ClosedInterval& u) { return t.apply(u); }, start, max_steps, interval_less);
}

namespace {

// The plain orbit reuses the engine with the identity in the T slot; the
// preimage of S(A) under the identity is S(A) itself, so each transition is
// A -> map(A) and the trace records (A, map(A), A).
template <class Elem, class Apply, class Less>
BasicIterationTrace<Elem> picard_engine(Apply&& apply, Elem start, size_t max_steps, Less&& less) {
    (void)less;
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
        Elem image = apply(current);
        trace.steps.push_back({current, image, current});
        visited.push_back(current);
        if (image == current) {
            trace.termination = Termination::CoincidenceFound;
            trace.coincidence = current;
            return trace;
        }
        if (transitions == max_steps) {
            trace.termination = Termination::StepLimit;
            return trace;
        }
        current = image;
        ++transitions;
    }
}

} // namespace

IterationTrace picard_iterate(const TableSetMap& map, const PointSet& start, size_t max_steps) {
    if (&start.space() != &map.space()) throw domain_error("start set outside the map's space");
    if (max_steps < 1) throw domain_error("max_steps must be at least 1");
    return picard_engine([&](const PointSet& u) { return map.apply(u); }, start, max_steps,
                         point_set_less);
}

IntervalIterationTrace picard_iterate_intervals(const IntervalRuleMap& map,
                                                const ClosedInterval& start, size_t max_steps) {
    if (max_steps < 1) throw domain_error("max_steps must be at least 1");
    return picard_engine([&](const ClosedInterval& u) { return map.apply(u); }, start, max_steps,
                         interval_less);
}

std::vector<PointSet> enumerate_coincidence_points(const TableSetMap& s, const TableSetMap& t) {
    require_shared_space(s, t);
    std::vector<PointSet> out;
    for (const PointSet& u : all_point_sets(s.space())) {
        if (s.apply(u) == t.apply(u)) out.push_back(u);
    }
    return out;
}

std::vector<ClosedInterval> enumerate_coincidence_points_intervals(
    const IntervalRuleMap& s, const IntervalRuleMap& t,
    const std::vector<ClosedInterval>& probe_family) {
    std::vector<ClosedInterval> sorted = probe_family;
    std::sort(sorted.begin(), sorted.end(), interval_less);
    std::vector<ClosedInterval> out;
    for (const ClosedInterval& u : sorted) {
        if (s.apply(u) == t.apply(u)) out.push_back(u);
    }
    return out;
}

FixedPointSets<PointSet> enumerate_common_fixed_points(const TableSetMap& s,
                                                       const TableSetMap& t) {
    require_shared_space(s, t);
    FixedPointSets<PointSet> result;
    for (const PointSet& u : all_point_sets(s.space())) {
        bool fs = s.apply(u) == u;
        bool ft = t.apply(u) == u;
        if (fs) result.fix_s.push_back(u);
        if (ft) result.fix_t.push_back(u);
        if (fs && ft) result.common.push_back(u);
    }
    return result;
}

FixedPointSets<ClosedInterval> enumerate_common_fixed_points_intervals(
    const IntervalRuleMap& s, const IntervalRuleMap& t,
    const std::vector<ClosedInterval>& probe_family) {
    std::vector<ClosedInterval> sorted = probe_family;
    std::sort(sorted.begin(), sorted.end(), interval_less);
    FixedPointSets<ClosedInterval> result;
    for (const ClosedInterval& u : sorted) {
        bool fs = s.apply(u) == u;
        bool ft = t.apply(u) == u;
        if (fs) result.fix_s.push_back(u);
        if (ft) result.fix_t.push_back(u);
        if (fs && ft) result.common.push_back(u);
    }
    return result;
}

} // namespace fpgraph
