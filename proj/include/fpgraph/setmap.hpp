#pragma once

#include "fpgraph/interval.hpp"
#include "fpgraph/metric.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fpgraph {

// Total self-map of the hyperspace of a finite metric space, given by an
// explicit table over all 2^n - 1 nonempty subsets. Immutable once built.
class TableSetMap {
public:
    TableSetMap(const FiniteMetricSpace& space, std::vector<std::pair<PointSet, PointSet>> rows);

    static TableSetMap identity(const FiniteMetricSpace& space);
    static TableSetMap constant(const FiniteMetricSpace& space, const PointSet& image);

    const FiniteMetricSpace& space() const { return *space_; }
    PointSet apply(const PointSet& argument) const;

    // Distinct images in canonical order.
    std::vector<PointSet> range() const;

    // All arguments mapping to target, in canonical order.
    std::vector<PointSet> preimages(const PointSet& target) const;

    bool operator==(const TableSetMap& other) const {
        return space_ == other.space_ && image_bits_ == other.image_bits_;
    }

private:
    const FiniteMetricSpace* space_;
    std::vector<uint32_t> image_bits_; // indexed by argument bitmask - 1
};

// Case-defined self-map on closed intervals. Predicates come from a closed
// vocabulary and the final rule must be the catch-all, which makes the map
// total on every closed interval.
enum class IntervalPredicateKind { SubsetOf, Equals, Otherwise };

struct IntervalRule {
    IntervalPredicateKind kind = IntervalPredicateKind::Otherwise;
    std::optional<ClosedInterval> operand; // absent exactly for Otherwise
    std::optional<ClosedInterval> image;   // optional only to allow aggregate init; required

    bool matches(const ClosedInterval& u) const;
    bool operator==(const IntervalRule&) const = default;
};

class IntervalRuleMap {
public:
    explicit IntervalRuleMap(std::vector<IntervalRule> rules);

    ClosedInterval apply(const ClosedInterval& u) const;
    const std::vector<IntervalRule>& rules() const { return rules_; }

    // Distinct rule outputs in canonical order; a superset of the map's range.
    std::vector<ClosedInterval> outputs() const;

    bool operator==(const IntervalRuleMap&) const = default;

private:
    std::vector<IntervalRule> rules_;
};

} // namespace fpgraph
