#pragma once

#include "fpgraph/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fpgraph {

// Finite labeled metric space with an explicit distance matrix. The matrix is
// stored as given; metric axioms are checked separately by validate_metric so
// deliberately broken fixtures remain representable.
class FiniteMetricSpace {
public:
    FiniteMetricSpace(std::vector<std::string> points, std::vector<std::vector<Rational>> dist);

    size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& label(size_t i) const { return points_.at(i); }
    std::optional<size_t> index_of(const std::string& label) const;
    const Rational& dist(size_t i, size_t j) const { return dist_[i][j]; }

private:
    std::vector<std::string> points_;
    std::vector<std::vector<Rational>> dist_;
};

enum class MetricAxiom { Identity, Positivity, Symmetry, Triangle };

struct MetricViolation {
    MetricAxiom axiom;
    std::vector<size_t> witness; // (i) / (i,j) / (i,j,k) depending on the axiom
    std::string describe(const FiniteMetricSpace& space) const;
};

struct MetricValidation {
    std::vector<MetricViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Full enumeration of all four metric axioms; every violated instance is
// reported with its witnessing points.
MetricValidation validate_metric(const FiniteMetricSpace& space);

// Nonempty subset of a finite space's points, bitmask-backed, canonical by
// construction. Equality is structural; sets from different spaces never
// compare equal and mixing them in binary operations is a domain error.
class PointSet {
public:
    PointSet(const FiniteMetricSpace& space, uint32_t bits);
    PointSet(const FiniteMetricSpace& space, const std::vector<std::string>& labels);

    const FiniteMetricSpace& space() const { return *space_; }
    uint32_t bits() const { return bits_; }
    size_t count() const;
    bool contains(size_t point_index) const { return (bits_ >> point_index) & 1u; }
    bool subset_of(const PointSet& other) const;
    std::vector<size_t> members() const;

    // "{a,b,c}" with labels in point order.
    std::string to_literal() const;

    bool operator==(const PointSet& other) const {
        return space_ == other.space_ && bits_ == other.bits_;
    }

    // Lexicographic order on the ascending member sequence; total on one space.
    bool canonical_less(const PointSet& other) const;

private:
    const FiniteMetricSpace* space_;
    uint32_t bits_;
};

// All 2^n - 1 nonempty subsets in canonical order.
std::vector<PointSet> all_point_sets(const FiniteMetricSpace& space);

// d(x, B) = min over members of B; x indexes a point of B's space.
Rational set_distance(const FiniteMetricSpace& space, size_t x, const PointSet& b);

// Pompeiu-Hausdorff distance max{ sup_{b in B} d(b,A), sup_{a in A} d(a,B) }.
Rational hausdorff(const PointSet& a, const PointSet& b);

void require_same_space(const PointSet& a, const PointSet& b);

} // namespace fpgraph
