#include "fpgraph/graph.hpp"

#include "fpgraph/errors.hpp"

#include <algorithm>
#include <array>

namespace fpgraph {

DirectedGraph::DirectedGraph(const FiniteMetricSpace& space,
                             std::vector<std::pair<size_t, size_t>> edges)
    : space_(&space), adjacency_(space.size(), 0), closure_(space.size(), 0) {
    const size_t n = space.size();
    for (auto [from, to] : edges) {
        if (from >= n || to >= n) throw domain_error("edge endpoint outside the space");
        adjacency_[from] |= (1u << to);
    }
    has_all_loops_ = true;
    for (size_t i = 0; i < n; ++i) {
        if (!((adjacency_[i] >> i) & 1u)) has_all_loops_ = false;
    }
    // Positive-length transitive closure via iterated relational composition.
    closure_ = adjacency_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < n; ++i) {
            uint32_t row = closure_[i];
            uint32_t next = row;
            for (size_t j = 0; j < n; ++j) {
                if ((row >> j) & 1u) next |= closure_[j];
            }
            if (next != row) {
                closure_[i] = next;
                changed = true;
            }
        }
    }
}

bool DirectedGraph::has_edge(size_t from, size_t to) const {
    return (adjacency_.at(from) >> to) & 1u;
}

bool DirectedGraph::reaches(size_t from, size_t to) const {
    return (closure_.at(from) >> to) & 1u;
}

std::vector<std::pair<size_t, size_t>> DirectedGraph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < adjacency_.size(); ++i) {
        for (size_t j = 0; j < adjacency_.size(); ++j) {
            if (has_edge(i, j)) out.emplace_back(i, j);
        }
    }
    return out;
}

DirectedGraph DirectedGraph::complete_with_loops(const FiniteMetricSpace& space) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < space.size(); ++i) {
        for (size_t j = 0; j < space.size(); ++j) {
            edges.emplace_back(i, j);
        }
    }
    return DirectedGraph(space, std::move(edges));
}

DerivedGraphs derived_graphs(const DirectedGraph& g) {
    std::vector<std::pair<size_t, size_t>> reversed;
    std::vector<std::pair<size_t, size_t>> both;
    for (auto [from, to] : g.edges()) {
        reversed.emplace_back(to, from);
        both.emplace_back(from, to);
        both.emplace_back(to, from);
    }
    return DerivedGraphs{DirectedGraph(g.space(), std::move(reversed)),
                         DirectedGraph(g.space(), std::move(both))};
}

bool set_edge(const DirectedGraph& g, const PointSet& a, const PointSet& b) {
    if (&a.space() != &g.space() || &b.space() != &g.space())
        throw domain_error("set_edge across different spaces");
    for (size_t x : a.members()) {
        for (size_t y : b.members()) {
            if (g.has_edge(x, y)) return true;
        }
    }
    return false;
}

bool relation_r(const DirectedGraph& g, const PointSet& a, const PointSet& b) {
    if (&a.space() != &g.space() || &b.space() != &g.space())
        throw domain_error("relation_r across different spaces");
    for (size_t x : a.members()) {
        for (size_t y : b.members()) {
            if (g.reaches(x, y)) return true;
        }
    }
    return false;
}

TransitivityResult r_transitive(const DirectedGraph& g, const std::vector<PointSet>& family) {
    if (family.empty()) throw domain_error("r_transitive over an empty family");
    const size_t n = family.size();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            rel[i][j] = relation_r(g, family[i], family[j]);
        }
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (!rel[i][j]) continue;
            for (size_t k = 0; k < n; ++k) {
                if (rel[j][k] && !rel[i][k]) {
                    return TransitivityResult{
                        false, std::array<PointSet, 3>{family[i], family[j], family[k]}};
                }
            }
        }
    }
    return TransitivityResult{true, std::nullopt};
}

bool weakly_connected(const DirectedGraph& g) {
    const size_t n = g.space().size();
    if (n == 0) throw domain_error("connectivity of an empty vertex set");
    DerivedGraphs derived = derived_graphs(g);
    // Undirected reachability from vertex 0; loops contribute nothing.
    std::vector<bool> seen(n, false);
    std::vector<size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        for (size_t w = 0; w < n; ++w) {
            if (!seen[w] && derived.tilde.has_edge(v, w)) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

CompletenessResult subset_complete(const DirectedGraph& g, const std::vector<PointSet>& family) {
    if (family.empty()) throw domain_error("subset_complete over an empty family");
    for (const PointSet& a : family) {
        for (const PointSet& b : family) {
            if (!set_edge(g, a, b)) {
                return CompletenessResult{false, std::make_pair(a, b)};
            }
        }
    }
    return CompletenessResult{true, std::nullopt};
}

EpsilonChainGraph epsilon_chain_graph(const FiniteMetricSpace& space, const Rational& epsilon) {
    if (epsilon <= Rational()) throw domain_error("epsilon must be positive");
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < space.size(); ++i) {
        for (size_t j = 0; j < space.size(); ++j) {
            const Rational& d = space.dist(i, j);
            if (Rational() < d && d < epsilon) edges.emplace_back(i, j);
        }
    }
    DirectedGraph graph(space, std::move(edges));
    bool chainable = weakly_connected(graph);
    return EpsilonChainGraph{std::move(graph), chainable};
}

PStarResult property_p_star(const DirectedGraph& g) {
    if (g.has_all_loops()) {
        return PStarResult{PStarVerdict::HoldsTrivially,
                           "finite space: positive Hausdorff weights are bounded below, so a "
                           "convergent sequence of sets is eventually constant and the loop on "
                           "each point gives the required edge"};
    }
    return PStarResult{PStarVerdict::Inconclusive,
                       "graph lacks some loops; the finite-space argument does not apply"};
}

} // namespace fpgraph
