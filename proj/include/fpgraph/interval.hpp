#pragma once

#include "fpgraph/rational.hpp"

#include <string>

namespace fpgraph {

// Closed interval [lo, hi] on the half-line, the second kind of set element
// the workbench certifies over.
struct ClosedInterval {
    Rational lo;
    Rational hi;

    ClosedInterval(Rational lo_value, Rational hi_value);

    bool contains(const Rational& t) const { return lo <= t && t <= hi; }
    bool subset_of(const ClosedInterval& other) const {
        return other.lo <= lo && hi <= other.hi;
    }

    bool operator==(const ClosedInterval& other) const = default;

    // "[lo,hi]" with rational bounds.
    std::string to_literal() const;

    // Total order (lo, then hi), used for canonical probe-family sorting.
    bool canonical_less(const ClosedInterval& other) const;
};

// Hausdorff distance between closed intervals: max(|lo_a - lo_b|, |hi_a - hi_b|),
// which coincides with the sup/inf formula on intervals.
Rational hausdorff_interval(const ClosedInterval& a, const ClosedInterval& b);

// Distance of a point to a closed interval (0 inside, gap to the nearer end
// outside); exposed because tests cross-check hausdorff_interval against a
// grid evaluation of the sup/inf formula built from this.
Rational point_to_interval(const Rational& t, const ClosedInterval& b);

} // namespace fpgraph
