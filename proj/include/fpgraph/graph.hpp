#pragma once

#include "fpgraph/metric.hpp"
#include "fpgraph/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fpgraph {

// Directed graph on the points of a finite metric space. Edges are a set (no
// parallel edges); the positive-length reachability closure is computed once
// at construction and the graph is immutable afterwards, so all queries are
// pure and safe to share across threads.
class DirectedGraph {
public:
    DirectedGraph(const FiniteMetricSpace& space, std::vector<std::pair<size_t, size_t>> edges);

    const FiniteMetricSpace& space() const { return *space_; }
    bool has_edge(size_t from, size_t to) const;
    bool reaches(size_t from, size_t to) const; // path of length >= 1
    bool has_all_loops() const { return has_all_loops_; }
    std::vector<std::pair<size_t, size_t>> edges() const; // sorted (from, to)

    static DirectedGraph complete_with_loops(const FiniteMetricSpace& space);

private:
    const FiniteMetricSpace* space_;
    std::vector<uint32_t> adjacency_; // adjacency_[i] bit j <=> edge (i, j)
    std::vector<uint32_t> closure_;   // closure_[i] bit j <=> path i -> j, length >= 1
    bool has_all_loops_ = false;
};

struct DerivedGraphs {
    DirectedGraph inverse; // every edge reversed
    DirectedGraph tilde;   // union of the graph with its reverse; symmetric
};

DerivedGraphs derived_graphs(const DirectedGraph& g);

// Lifted edge between sets: exists a in A, b in B with (a, b) an edge.
bool set_edge(const DirectedGraph& g, const PointSet& a, const PointSet& b);

// Lifted relation R: exists a in A, b in B with a directed path a -> b.
bool relation_r(const DirectedGraph& g, const PointSet& a, const PointSet& b);

struct TransitivityResult {
    bool transitive;
    // Witnessing (A, B, C) with R(A,B) and R(B,C) but not R(A,C).
    std::optional<std::array<PointSet, 3>> counterexample;
};

TransitivityResult r_transitive(const DirectedGraph& g, const std::vector<PointSet>& family);

bool weakly_connected(const DirectedGraph& g);

struct CompletenessResult {
    bool complete;
    std::optional<std::pair<PointSet, PointSet>> counterexample; // failing ordered pair
};

// Every ordered pair of family members (both orders) must carry a lifted edge.
CompletenessResult subset_complete(const DirectedGraph& g, const std::vector<PointSet>& family);

struct EpsilonChainGraph {
    DirectedGraph graph; // edges (a, b) with 0 < d(a, b) < epsilon; no loops
    bool chainable;      // every point pair joined by a chain of steps < epsilon
};

EpsilonChainGraph epsilon_chain_graph(const FiniteMetricSpace& space, const Rational& epsilon);

enum class PStarVerdict { HoldsTrivially, Inconclusive };

struct PStarResult {
    PStarVerdict verdict;
    std::string justification;
};

// Subsequence-edge stability for convergent sequences in the hyperspace. On a
// finite space with all loops it holds outright: positive Hausdorff weights
// are bounded below, so a convergent sequence is eventually constant and the
// loop supplies the required edge. Anything else is inconclusive.
PStarResult property_p_star(const DirectedGraph& g);

} // namespace fpgraph
