#include "fpgraph/interval.hpp"

#include "fpgraph/errors.hpp"

namespace fpgraph {

ClosedInterval::ClosedInterval(Rational lo_value, Rational hi_value)
    : lo(std::move(lo_value)), hi(std::move(hi_value)) {
    if (hi < lo) throw domain_error("interval with hi < lo");
}

std::string ClosedInterval::to_literal() const {
    return "[" + lo.to_string() + "," + hi.to_string() + "]";
}

bool ClosedInterval::canonical_less(const ClosedInterval& other) const {
    if (lo != other.lo) return lo < other.lo;
    return hi < other.hi;
}

Rational point_to_interval(const Rational& t, const ClosedInterval& b) {
    if (t < b.lo) return b.lo - t;
    if (t > b.hi) return t - b.hi;
    return Rational();
}

Rational hausdorff_interval(const ClosedInterval& a, const ClosedInterval& b) {
    return max((a.lo - b.lo).abs(), (a.hi - b.hi).abs());
}

} // namespace fpgraph
