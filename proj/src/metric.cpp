#include "fpgraph/metric.hpp"

#include "fpgraph/errors.hpp"

#include <algorithm>
#include <bit>

namespace fpgraph {

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> points,
                                     std::vector<std::vector<Rational>> dist)
    : points_(std::move(points)), dist_(std::move(dist)) {
    if (points_.empty()) throw structural_error("metric space needs at least one point");
    if (points_.size() > 20) throw structural_error("finite spaces are limited to 20 points");
    if (dist_.size() != points_.size())
        throw structural_error("distance matrix row count does not match point count");
    for (const auto& row : dist_) {
        if (row.size() != points_.size())
            throw structural_error("distance matrix is not square");
    }
    for (size_t i = 0; i < points_.size(); ++i) {
        for (size_t j = i + 1; j < points_.size(); ++j) {
            if (points_[i] == points_[j])
                throw structural_error("duplicate point label '" + points_[i] + "'");
        }
    }
}

std::optional<size_t> FiniteMetricSpace::index_of(const std::string& label) const {
    for (size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] == label) return i;
    }
    return std::nullopt;
}

std::string MetricViolation::describe(const FiniteMetricSpace& space) const {
    auto name = [&](size_t i) { return space.label(i); };
    switch (axiom) {
        case MetricAxiom::Identity:
            return "d(" + name(witness[0]) + "," + name(witness[0]) + ") != 0";
        case MetricAxiom::Positivity:
            return "d(" + name(witness[0]) + "," + name(witness[1]) + ") <= 0 for distinct points";
        case MetricAxiom::Symmetry:
            return "d(" + name(witness[0]) + "," + name(witness[1]) + ") != d(" + name(witness[1]) +
                   "," + name(witness[0]) + ")";
        case MetricAxiom::Triangle:
            return "d(" + name(witness[0]) + "," + name(witness[2]) + ") > d(" + name(witness[0]) +
                   "," + name(witness[1]) + ") + d(" + name(witness[1]) + "," + name(witness[2]) + ")";
    }
    return {};
}

MetricValidation validate_metric(const FiniteMetricSpace& space) {
    MetricValidation result;
    const size_t n = space.size();
    const Rational zero;
    for (size_t i = 0; i < n; ++i) {
        if (space.dist(i, i) != zero)
            result.violations.push_back({MetricAxiom::Identity, {i}});
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i != j && space.dist(i, j) <= zero)
                result.violations.push_back({MetricAxiom::Positivity, {i, j}});
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            if (space.dist(i, j) != space.dist(j, i))
                result.violations.push_back({MetricAxiom::Symmetry, {i, j}});
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) {
                if (space.dist(i, k) > space.dist(i, j) + space.dist(j, k))
                    result.violations.push_back({MetricAxiom::Triangle, {i, j, k}});
            }
        }
    }
    return result;
}

PointSet::PointSet(const FiniteMetricSpace& space, uint32_t bits) : space_(&space), bits_(bits) {
    if (bits_ == 0) throw domain_error("point set must be nonempty");
    uint32_t universe = space.size() >= 32 ? ~0u : ((1u << space.size()) - 1u);
    if ((bits_ & ~universe) != 0) throw domain_error("point set has members outside its space");
}

PointSet::PointSet(const FiniteMetricSpace& space, const std::vector<std::string>& labels)
    : space_(&space), bits_(0) {
    for (const auto& label : labels) {
        auto idx = space.index_of(label);
        if (!idx) throw domain_error("unknown point label '" + label + "'");
        bits_ |= (1u << *idx);
    }
    if (bits_ == 0) throw domain_error("point set must be nonempty");
}

size_t PointSet::count() const {
    return static_cast<size_t>(std::popcount(bits_));
}

bool PointSet::subset_of(const PointSet& other) const {
    require_same_space(*this, other);
    return (bits_ & ~other.bits_) == 0;
}

std::vector<size_t> PointSet::members() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < space_->size(); ++i) {
        if (contains(i)) out.push_back(i);
    }
    return out;
}

std::string PointSet::to_literal() const {
    std::string out = "{";
    bool first = true;
    for (size_t i : members()) {
        if (!first) out += ",";
        out += space_->label(i);
        first = false;
    }
    out += "}";
    return out;
}

bool PointSet::canonical_less(const PointSet& other) const {
    require_same_space(*this, other);
    uint32_t a = bits_;
    uint32_t b = other.bits_;
    while (a != 0 && b != 0) {
        int ia = std::countr_zero(a);
        int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0; // a strict prefix precedes its extensions
}

std::vector<PointSet> all_point_sets(const FiniteMetricSpace& space) {
    uint32_t total = (1u << space.size()) - 1u;
    std::vector<PointSet> sets;
    sets.reserve(total);
    for (uint32_t bits = 1; bits <= total; ++bits) {
        sets.emplace_back(space, bits);
    }
    std::sort(sets.begin(), sets.end(),
              [](const PointSet& a, const PointSet& b) { return a.canonical_less(b); });
    return sets;
}

void require_same_space(const PointSet& a, const PointSet& b) {
    if (&a.space() != &b.space())
        throw domain_error("point sets belong to different spaces");
}

Rational set_distance(const FiniteMetricSpace& space, size_t x, const PointSet& b) {
    if (&space != &b.space()) throw domain_error("set distance across different spaces");
    if (x >= space.size()) throw domain_error("point index outside space");
    std::optional<Rational> best;
    for (size_t m : b.members()) {
        const Rational& d = space.dist(x, m);
        if (!best || d < *best) best = d;
    }
    return *best;
}

Rational hausdorff(const PointSet& a, const PointSet& b) {
    require_same_space(a, b);
    const FiniteMetricSpace& space = a.space();
    Rational worst; // zero
    for (size_t x : a.members()) {
        Rational d = set_distance(space, x, b);
        if (d > worst) worst = d;
    }
    for (size_t x : b.members()) {
        Rational d = set_distance(space, x, a);
        if (d > worst) worst = d;
    }
    return worst;
}

} // namespace fpgraph
