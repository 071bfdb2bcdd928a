#include "fpgraph/setmap.hpp"

#include "fpgraph/errors.hpp"

#include <algorithm>

namespace fpgraph {

TableSetMap::TableSetMap(const FiniteMetricSpace& space,
                         std::vector<std::pair<PointSet, PointSet>> rows)
    : space_(&space) {
    const uint32_t total = (1u << space.size()) - 1u;
    image_bits_.assign(total, 0);
    std::vector<bool> seen(total, false);
    for (const auto& [argument, image] : rows) {
        if (&argument.space() != space_ || &image.space() != space_)
            throw structural_error("map row references a different space");
        uint32_t idx = argument.bits() - 1u;
        if (seen[idx])
            throw structural_error("map table defines " + argument.to_literal() + " twice");
        seen[idx] = true;
        image_bits_[idx] = image.bits();
    }
    for (uint32_t idx = 0; idx < total; ++idx) {
        if (!seen[idx]) {
            throw structural_error("map table is missing an image for " +
                                   PointSet(space, idx + 1u).to_literal());
        }
    }
}

TableSetMap TableSetMap::identity(const FiniteMetricSpace& space) {
    std::vector<std::pair<PointSet, PointSet>> rows;
    for (const PointSet& set : all_point_sets(space)) {
        rows.emplace_back(set, set);
    }
    return TableSetMap(space, std::move(rows));
}

TableSetMap TableSetMap::constant(const FiniteMetricSpace& space, const PointSet& image) {
    std::vector<std::pair<PointSet, PointSet>> rows;
    for (const PointSet& set : all_point_sets(space)) {
        rows.emplace_back(set, image);
    }
    return TableSetMap(space, std::move(rows));
}

PointSet TableSetMap::apply(const PointSet& argument) const {
    if (&argument.space() != space_) throw domain_error("map applied across spaces");
    return PointSet(*space_, image_bits_[argument.bits() - 1u]);
}

std::vector<PointSet> TableSetMap::range() const {
    std::vector<uint32_t> bits = image_bits_;
    std::sort(bits.begin(), bits.end());
    bits.erase(std::unique(bits.begin(), bits.end()), bits.end());
    std::vector<PointSet> out;
    out.reserve(bits.size());
    for (uint32_t b : bits) out.emplace_back(*space_, b);
    std::sort(out.begin(), out.end(),
              [](const PointSet& a, const PointSet& b) { return a.canonical_less(b); });
    return out;
}

std::vector<PointSet> TableSetMap::preimages(const PointSet& target) const {
    if (&target.space() != space_) throw domain_error("preimage across spaces");
    std::vector<PointSet> out;
    for (const PointSet& set : all_point_sets(*space_)) {
        if (image_bits_[set.bits() - 1u] == target.bits()) out.push_back(set);
    }
    return out;
}

bool IntervalRule::matches(const ClosedInterval& u) const {
    switch (kind) {
        case IntervalPredicateKind::SubsetOf:
            return u.subset_of(*operand);
        case IntervalPredicateKind::Equals:
            return u == *operand;
        case IntervalPredicateKind::Otherwise:
            return true;
    }
    return false;
}

IntervalRuleMap::IntervalRuleMap(std::vector<IntervalRule> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw structural_error("interval map needs at least one rule");
    for (size_t i = 0; i < rules_.size(); ++i) {
        const IntervalRule& rule = rules_[i];
        bool last = i + 1 == rules_.size();
        if (last && rule.kind != IntervalPredicateKind::Otherwise)
            throw structural_error("the final interval rule must be the catch-all");
        if (!last && rule.kind == IntervalPredicateKind::Otherwise)
            throw structural_error("only the final interval rule may be the catch-all");
        if (rule.kind != IntervalPredicateKind::Otherwise && !rule.operand)
            throw structural_error("interval rule predicate is missing its operand");
        if (!rule.image) throw structural_error("interval rule is missing its image");
    }
}

ClosedInterval IntervalRuleMap::apply(const ClosedInterval& u) const {
    for (const IntervalRule& rule : rules_) {
        if (rule.matches(u)) return *rule.image;
    }
    throw structural_error("interval rule list failed to match"); // unreachable: catch-all enforced
}

std::vector<ClosedInterval> IntervalRuleMap::outputs() const {
    std::vector<ClosedInterval> out;
    for (const IntervalRule& rule : rules_) out.push_back(*rule.image);
    std::sort(out.begin(), out.end(), [](const ClosedInterval& a, const ClosedInterval& b) {
        return a.canonical_less(b);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace fpgraph
