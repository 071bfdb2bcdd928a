#pragma once

#include "fpgraph/certify.hpp"
#include "fpgraph/gauge.hpp"
#include "fpgraph/graph.hpp"
#include "fpgraph/setmap.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fpgraph {

struct InstanceOptions {
    bool undirected_lift = false;
    std::vector<Rational> probes;
    int iterations = kDefaultGaugeIterations;
    Rational tail_tolerance;

    InstanceOptions();
    bool operator==(const InstanceOptions&) const = default;
};

// Finite-space payload. Ownership is shared so sets, maps and graphs can keep
// stable references to the space for the instance's whole lifetime.
struct FiniteInstance {
    std::shared_ptr<const FiniteMetricSpace> space;
    std::shared_ptr<const DirectedGraph> graph;
    std::shared_ptr<const TableSetMap> map_s;
    std::shared_ptr<const TableSetMap> map_t;
};

struct IntervalInstance {
    std::vector<ClosedInterval> probes; // canonical order
    std::shared_ptr<const IntervalRuleMap> map_s;
    std::shared_ptr<const IntervalRuleMap> map_t;
};

struct Instance {
    std::variant<FiniteInstance, IntervalInstance> body;
    std::shared_ptr<const GaugeFunction> gauge;
    std::optional<Psi2Params> params;
    InstanceOptions options;

    bool is_finite() const { return std::holds_alternative<FiniteInstance>(body); }
    const FiniteInstance& finite() const { return std::get<FiniteInstance>(body); }
    const IntervalInstance& intervals() const { return std::get<IntervalInstance>(body); }
};

struct ParseIssue {
    std::string path;    // location inside the document, e.g. "maps.S.table[3]"
    std::string message;
};

struct InstanceParseResult {
    std::shared_ptr<Instance> instance; // null when issues exist
    std::vector<ParseIssue> issues;
    bool ok() const { return instance != nullptr; }
};

// Parses and fully validates an instance document (structure, label
// resolution, table totality, gauge cover). Rationals parse exactly from
// "p/q" strings. Metric axioms are deliberately not a parse gate; run the
// validate command for those.
InstanceParseResult parse_instance(const std::string& text);

// Canonical serialization: fixed key order, two-space indent, sorted edge and
// table rows, trailing newline. parse(serialize(x)) reproduces x exactly.
std::string serialize_instance(const Instance& instance);

bool instances_equal(const Instance& a, const Instance& b);

// Standalone gauge document {"pieces": [...]} in the same piece schema.
GaugeFunction parse_gauge_document(const std::string& text);

} // namespace fpgraph
