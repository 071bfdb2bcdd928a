#include "fpgraph/instance.hpp"

#include "fpgraph/errors.hpp"

#include <json.hpp>

#include <algorithm>

namespace fpgraph {

using json = nlohmann::ordered_json;

InstanceOptions::InstanceOptions()
    : probes(default_gauge_probes().begin(), default_gauge_probes().end()),
      tail_tolerance(default_tail_tolerance()) {}

namespace {

// Collects located validation problems while walking the document.
struct IssueSink {
    std::vector<ParseIssue>& issues;
    void add(const std::string& path, const std::string& message) {
        issues.push_back({path, message});
    }
    bool any() const { return !issues.empty(); }
};

std::optional<Rational> parse_rational_field(const json& value, const std::string& path,
                                             IssueSink& sink) {
    if (!value.is_string()) {
        sink.add(path, "expected a rational as a string like \"3/4\"");
        return std::nullopt;
    }
    try {
        return Rational::from_string(value.get<std::string>());
    } catch (const std::exception& e) {
        sink.add(path, std::string("bad rational literal: ") + e.what());
        return std::nullopt;
    }
}

std::vector<std::string> split_set_literal(const std::string& text) {
    if (text.size() < 2 || text.front() != '{' || text.back() != '}')
        throw structural_error("set literal must look like {a,b}");
    std::vector<std::string> labels;
    std::string current;
    for (size_t i = 1; i + 1 < text.size(); ++i) {
        if (text[i] == ',') {
            labels.push_back(current);
            current.clear();
        } else if (text[i] != ' ') {
            current += text[i];
        }
    }
    labels.push_back(current);
    for (const std::string& label : labels) {
        if (label.empty()) throw structural_error("empty label in set literal");
    }
    return labels;
}

std::optional<PointSet> parse_set_literal_field(const json& value, const FiniteMetricSpace& space,
                                                const std::string& path, IssueSink& sink) {
    if (!value.is_string()) {
        sink.add(path, "expected a set literal string like \"{1,3}\"");
        return std::nullopt;
    }
    try {
        return PointSet(space, split_set_literal(value.get<std::string>()));
    } catch (const std::exception& e) {
        sink.add(path, e.what());
        return std::nullopt;
    }
}

std::optional<ClosedInterval> parse_interval_field(const json& value, const std::string& path,
                                                   IssueSink& sink) {
    if (!value.is_array() || value.size() != 2) {
        sink.add(path, "expected an interval as a two-element array [\"lo\",\"hi\"]");
        return std::nullopt;
    }
    auto lo = parse_rational_field(value[0], path + "[0]", sink);
    auto hi = parse_rational_field(value[1], path + "[1]", sink);
    if (!lo || !hi) return std::nullopt;
    try {
        return ClosedInterval(*lo, *hi);
    } catch (const std::exception& e) {
        sink.add(path, e.what());
        return std::nullopt;
    }
}

std::optional<GaugeFunction> parse_gauge_json(const json& node, const std::string& base,
                                              IssueSink& sink) {
    if (!node.is_object() || !node.contains("pieces") || !node["pieces"].is_array()) {
        sink.add(base, "gauge must be an object with a \"pieces\" array");
        return std::nullopt;
    }
    std::vector<GaugePiece> pieces;
    const json& list = node["pieces"];
    for (size_t i = 0; i < list.size(); ++i) {
        std::string path = base + ".pieces[" + std::to_string(i) + "]";
        const json& item = list[i];
        if (!item.is_object()) {
            sink.add(path, "piece must be an object");
            return std::nullopt;
        }
        for (const char* key : {"from", "to", "kind", "coefficients"}) {
            if (!item.contains(key)) {
                sink.add(path, std::string("piece is missing \"") + key + "\"");
                return std::nullopt;
            }
        }
        auto lo = parse_rational_field(item["from"], path + ".from", sink);
        std::optional<Rational> hi;
        if (item["to"].is_string() && item["to"].get<std::string>() == "inf") {
            hi = std::nullopt;
        } else {
            auto parsed = parse_rational_field(item["to"], path + ".to", sink);
            if (!parsed) return std::nullopt;
            hi = parsed;
        }
        if (!lo) return std::nullopt;

        std::string kind_word = item["kind"].is_string() ? item["kind"].get<std::string>() : "";
        FormulaKind kind;
        size_t coeff_count;
        if (kind_word == "linear") {
            kind = FormulaKind::Linear;
            coeff_count = 1;
        } else if (kind_word == "quadratic") {
            kind = FormulaKind::Quadratic;
            coeff_count = 1;
        } else if (kind_word == "rational") {
            kind = FormulaKind::Mobius;
            coeff_count = 4;
        } else {
            sink.add(path + ".kind", "unknown formula kind \"" + kind_word +
                                         "\" (expected linear, quadratic or rational)");
            return std::nullopt;
        }
        const json& coeffs = item["coefficients"];
        if (!coeffs.is_array() || coeffs.size() != coeff_count) {
            sink.add(path + ".coefficients",
                     "expected " + std::to_string(coeff_count) + " coefficient string(s)");
            return std::nullopt;
        }
        std::vector<Rational> values;
        for (size_t c = 0; c < coeff_count; ++c) {
            auto v = parse_rational_field(coeffs[c],
                                          path + ".coefficients[" + std::to_string(c) + "]", sink);
            if (!v) return std::nullopt;
            values.push_back(*v);
        }
        GaugeFormula formula;
        switch (kind) {
            case FormulaKind::Linear:
                formula = GaugeFormula::linear(values[0]);
                break;
            case FormulaKind::Quadratic:
                formula = GaugeFormula::quadratic(values[0]);
                break;
            case FormulaKind::Mobius:
                formula = GaugeFormula::mobius(values[0], values[1], values[2], values[3]);
                break;
        }
        pieces.push_back(GaugePiece{*lo, hi, formula});
    }
    try {
        return GaugeFunction(std::move(pieces));
    } catch (const std::exception& e) {
        sink.add(base, e.what());
        return std::nullopt;
    }
}

std::shared_ptr<const FiniteMetricSpace> parse_finite_space(const json& node, IssueSink& sink) {
    if (!node.contains("points") || !node["points"].is_array() || node["points"].empty()) {
        sink.add("space.points", "expected a nonempty array of point labels");
        return nullptr;
    }
    std::vector<std::string> points;
    for (size_t i = 0; i < node["points"].size(); ++i) {
        const json& p = node["points"][i];
        if (!p.is_string() || p.get<std::string>().empty()) {
            sink.add("space.points[" + std::to_string(i) + "]", "labels must be nonempty strings");
            return nullptr;
        }
        std::string label = p.get<std::string>();
        if (label.find_first_of("{},") != std::string::npos) {
            sink.add("space.points[" + std::to_string(i) + "]",
                     "labels may not contain braces or commas");
            return nullptr;
        }
        points.push_back(std::move(label));
    }
    if (!node.contains("matrix") || !node["matrix"].is_array()) {
        sink.add("space.matrix", "expected a square matrix of rational strings");
        return nullptr;
    }
    std::vector<std::vector<Rational>> matrix;
    const json& rows = node["matrix"];
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array()) {
            sink.add("space.matrix[" + std::to_string(i) + "]", "expected a row array");
            return nullptr;
        }
        std::vector<Rational> row;
        for (size_t j = 0; j < rows[i].size(); ++j) {
            auto v = parse_rational_field(
                rows[i][j], "space.matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                sink);
            if (!v) return nullptr;
            row.push_back(*v);
        }
        matrix.push_back(std::move(row));
    }
    try {
        return std::make_shared<const FiniteMetricSpace>(std::move(points), std::move(matrix));
    } catch (const std::exception& e) {
        sink.add("space", e.what());
        return nullptr;
    }
}

std::shared_ptr<const DirectedGraph> parse_graph(const json& root, const FiniteMetricSpace& space,
                                                 IssueSink& sink) {
    if (!root.contains("graph") || !root["graph"].is_object()) {
        sink.add("graph", "finite instances need a graph object");
        return nullptr;
    }
    const json& node = root["graph"];
    std::vector<std::pair<size_t, size_t>> edges;
    std::string loops = node.contains("loops") && node["loops"].is_string()
                            ? node["loops"].get<std::string>()
                            : "";
    if (loops != "all" && loops != "listed") {
        sink.add("graph.loops", "expected \"all\" or \"listed\"");
        return nullptr;
    }
    if (loops == "all") {
        for (size_t i = 0; i < space.size(); ++i) edges.emplace_back(i, i);
    }
    if (!node.contains("edges") || !node["edges"].is_array()) {
        sink.add("graph.edges", "expected an array of [from,to] label pairs");
        return nullptr;
    }
    const json& list = node["edges"];
    for (size_t i = 0; i < list.size(); ++i) {
        std::string path = "graph.edges[" + std::to_string(i) + "]";
        const json& pair = list[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
            sink.add(path, "expected a [from,to] pair of labels");
            return nullptr;
        }
        auto from = space.index_of(pair[0].get<std::string>());
        auto to = space.index_of(pair[1].get<std::string>());
        if (!from || !to) {
            sink.add(path, "edge references an unknown point label");
            return nullptr;
        }
        edges.emplace_back(*from, *to);
    }
    return std::make_shared<const DirectedGraph>(space, std::move(edges));
}

std::shared_ptr<const TableSetMap> parse_table_map(const json& node, const FiniteMetricSpace& space,
                                                   const std::string& base, IssueSink& sink) {
    if (!node.is_object() || !node.contains("table") || !node["table"].is_array()) {
        sink.add(base, "finite instances need map tables (\"table\": [...])");
        return nullptr;
    }
    std::vector<std::pair<PointSet, PointSet>> rows;
    const json& list = node["table"];
    for (size_t i = 0; i < list.size(); ++i) {
        std::string path = base + ".table[" + std::to_string(i) + "]";
        const json& row = list[i];
        if (!row.is_object() || !row.contains("set") || !row.contains("image")) {
            sink.add(path, "expected {\"set\": ..., \"image\": ...}");
            return nullptr;
        }
        auto argument = parse_set_literal_field(row["set"], space, path + ".set", sink);
        auto image = parse_set_literal_field(row["image"], space, path + ".image", sink);
        if (!argument || !image) return nullptr;
        rows.emplace_back(*argument, *image);
    }
    try {
        return std::make_shared<const TableSetMap>(space, std::move(rows));
    } catch (const std::exception& e) {
        sink.add(base + ".table", e.what());
        return nullptr;
    }
}

std::shared_ptr<const IntervalRuleMap> parse_rule_map(const json& node, const std::string& base,
                                                      IssueSink& sink) {
    if (!node.is_object() || !node.contains("rules") || !node["rules"].is_array()) {
        sink.add(base, "interval instances need rule maps (\"rules\": [...])");
        return nullptr;
    }
    std::vector<IntervalRule> rules;
    const json& list = node["rules"];
    for (size_t i = 0; i < list.size(); ++i) {
        std::string path = base + ".rules[" + std::to_string(i) + "]";
        const json& item = list[i];
        if (!item.is_object() || !item.contains("when") || !item.contains("image") ||
            !item["when"].is_string()) {
            sink.add(path, "expected {\"when\": ..., \"image\": ...}");
            return nullptr;
        }
        IntervalRule rule;
        std::string when = item["when"].get<std::string>();
        if (when == "subset_of") {
            rule.kind = IntervalPredicateKind::SubsetOf;
        } else if (when == "equals") {
            rule.kind = IntervalPredicateKind::Equals;
        } else if (when == "otherwise") {
            rule.kind = IntervalPredicateKind::Otherwise;
        } else {
            sink.add(path + ".when", "unknown predicate \"" + when +
                                         "\" (expected subset_of, equals or otherwise)");
            return nullptr;
        }
        if (rule.kind != IntervalPredicateKind::Otherwise) {
            if (!item.contains("of")) {
                sink.add(path, "predicate needs an \"of\" interval");
                return nullptr;
            }
            auto operand = parse_interval_field(item["of"], path + ".of", sink);
            if (!operand) return nullptr;
            rule.operand = operand;
        }
        auto image = parse_interval_field(item["image"], path + ".image", sink);
        if (!image) return nullptr;
        rule.image = image;
        rules.push_back(std::move(rule));
    }
    try {
        return std::make_shared<const IntervalRuleMap>(std::move(rules));
    } catch (const std::exception& e) {
        sink.add(base + ".rules", e.what());
        return nullptr;
    }
}

bool parse_options(const json& root, InstanceOptions& options, IssueSink& sink) {
    if (!root.contains("options")) return true;
    const json& node = root["options"];
    if (!node.is_object()) {
        sink.add("options", "expected an object");
        return false;
    }
    if (node.contains("undirected_lift")) {
        if (!node["undirected_lift"].is_boolean()) {
            sink.add("options.undirected_lift", "expected a boolean");
            return false;
        }
        options.undirected_lift = node["undirected_lift"].get<bool>();
    }
    if (node.contains("probes")) {
        if (!node["probes"].is_array() || node["probes"].empty()) {
            sink.add("options.probes", "expected a nonempty array of rational strings");
            return false;
        }
        std::vector<Rational> probes;
        for (size_t i = 0; i < node["probes"].size(); ++i) {
            auto v = parse_rational_field(node["probes"][i],
                                          "options.probes[" + std::to_string(i) + "]", sink);
            if (!v) return false;
            if (*v < Rational(0)) {
                sink.add("options.probes[" + std::to_string(i) + "]", "probes must be nonnegative");
                return false;
            }
            probes.push_back(*v);
        }
        options.probes = std::move(probes);
    }
    if (node.contains("iterations")) {
        if (!node["iterations"].is_number_unsigned() || node["iterations"].get<uint64_t>() < 2 ||
            node["iterations"].get<uint64_t>() > 100000) {
            sink.add("options.iterations", "expected an integer between 2 and 100000");
            return false;
        }
        options.iterations = static_cast<int>(node["iterations"].get<uint64_t>());
    }
    if (node.contains("tail_tolerance")) {
        auto v = parse_rational_field(node["tail_tolerance"], "options.tail_tolerance", sink);
        if (!v) return false;
        if (*v <= Rational(0)) {
            sink.add("options.tail_tolerance", "tolerance must be positive");
            return false;
        }
        options.tail_tolerance = *v;
    }
    return true;
}

std::optional<Psi2Params> parse_params(const json& root, IssueSink& sink) {
    if (!root.contains("params")) return std::nullopt;
    const json& node = root["params"];
    if (!node.is_object()) {
        sink.add("params", "expected an object with alpha..delta2");
        return std::nullopt;
    }
    Psi2Params params;
    struct Field {
        const char* name;
        Rational* slot;
    };
    Field fields[] = {{"alpha", &params.alpha},
                      {"beta", &params.beta},
                      {"gamma", &params.gamma},
                      {"delta1", &params.delta1},
                      {"delta2", &params.delta2}};
    for (const Field& field : fields) {
        if (!node.contains(field.name)) {
            sink.add(std::string("params.") + field.name, "missing weight");
            return std::nullopt;
        }
        auto v = parse_rational_field(node[field.name], std::string("params.") + field.name, sink);
        if (!v) return std::nullopt;
        *field.slot = *v;
    }
    try {
        params.validate();
    } catch (const std::exception& e) {
        sink.add("params", e.what());
        return std::nullopt;
    }
    return params;
}

} // namespace

InstanceParseResult parse_instance(const std::string& text) {
    InstanceParseResult result;
    IssueSink sink{result.issues};

    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        sink.add("(document)", e.what());
        return result;
    }
    if (!root.is_object() || !root.contains("space") || !root["space"].is_object()) {
        sink.add("space", "instance must be an object with a \"space\" section");
        return result;
    }
    const json& space_node = root["space"];
    std::string kind = space_node.contains("kind") && space_node["kind"].is_string()
                           ? space_node["kind"].get<std::string>()
                           : "";
    if (kind != "finite" && kind != "interval") {
        sink.add("space.kind", "expected \"finite\" or \"interval\"");
        return result;
    }
    if (!root.contains("maps") || !root["maps"].is_object() || !root["maps"].contains("S") ||
        !root["maps"].contains("T")) {
        sink.add("maps", "instance needs maps S and T");
        return result;
    }
    if (!root.contains("gauge")) {
        sink.add("gauge", "instance needs a gauge");
        return result;
    }

    auto instance = std::make_shared<Instance>();

    if (kind == "finite") {
        FiniteInstance finite;
        finite.space = parse_finite_space(space_node, sink);
        if (!finite.space) return result;
        finite.graph = parse_graph(root, *finite.space, sink);
        finite.map_s = parse_table_map(root["maps"]["S"], *finite.space, "maps.S", sink);
        finite.map_t = parse_table_map(root["maps"]["T"], *finite.space, "maps.T", sink);
        if (!finite.graph || !finite.map_s || !finite.map_t) return result;
        instance->body = std::move(finite);
    } else {
        IntervalInstance intervals;
        if (!space_node.contains("probes") || !space_node["probes"].is_array() ||
            space_node["probes"].empty()) {
            sink.add("space.probes", "interval instances need a nonempty probe family");
            return result;
        }
        for (size_t i = 0; i < space_node["probes"].size(); ++i) {
            auto probe = parse_interval_field(space_node["probes"][i],
                                              "space.probes[" + std::to_string(i) + "]", sink);
            if (!probe) return result;
            intervals.probes.push_back(*probe);
        }
        std::sort(intervals.probes.begin(), intervals.probes.end(),
                  [](const ClosedInterval& a, const ClosedInterval& b) {
                      return a.canonical_less(b);
                  });
        for (size_t i = 0; i + 1 < intervals.probes.size(); ++i) {
            if (intervals.probes[i] == intervals.probes[i + 1]) {
                sink.add("space.probes", "duplicate probe " + intervals.probes[i].to_literal());
                return result;
            }
        }
        if (root.contains("graph")) {
            sink.add("graph", "interval instances take no graph; the lift over probes is complete");
            return result;
        }
        intervals.map_s = parse_rule_map(root["maps"]["S"], "maps.S", sink);
        intervals.map_t = parse_rule_map(root["maps"]["T"], "maps.T", sink);
        if (!intervals.map_s || !intervals.map_t) return result;
        instance->body = std::move(intervals);
    }

    auto gauge = parse_gauge_json(root["gauge"], "gauge", sink);
    if (!gauge) return result;
    instance->gauge = std::make_shared<const GaugeFunction>(std::move(*gauge));

    instance->params = parse_params(root, sink);
    if (sink.any()) return result;

    if (!parse_options(root, instance->options, sink)) return result;

    result.instance = std::move(instance);
    return result;
}

namespace {

json rational_json(const Rational& r) {
    return r.to_string();
}

json interval_json(const ClosedInterval& i) {
    return json::array({rational_json(i.lo), rational_json(i.hi)});
}

json gauge_json(const GaugeFunction& gauge) {
    json pieces = json::array();
    for (const GaugePiece& piece : gauge.pieces()) {
        json item;
        item["from"] = rational_json(piece.lo);
        item["to"] = piece.hi ? rational_json(*piece.hi) : json("inf");
        switch (piece.formula.kind) {
            case FormulaKind::Linear:
                item["kind"] = "linear";
                item["coefficients"] = json::array({rational_json(piece.formula.a)});
                break;
            case FormulaKind::Quadratic:
                item["kind"] = "quadratic";
                item["coefficients"] = json::array({rational_json(piece.formula.a)});
                break;
            case FormulaKind::Mobius:
                item["kind"] = "rational";
                item["coefficients"] =
                    json::array({rational_json(piece.formula.a), rational_json(piece.formula.b),
                                 rational_json(piece.formula.c), rational_json(piece.formula.d)});
                break;
        }
        pieces.push_back(std::move(item));
    }
    json out;
    out["pieces"] = std::move(pieces);
    return out;
}

json table_map_json(const TableSetMap& map) {
    json rows = json::array();
    for (const PointSet& set : all_point_sets(map.space())) {
        json row;
        row["set"] = set.to_literal();
        row["image"] = map.apply(set).to_literal();
        rows.push_back(std::move(row));
    }
    json out;
    out["table"] = std::move(rows);
    return out;
}

json rule_map_json(const IntervalRuleMap& map) {
    json rules = json::array();
    for (const IntervalRule& rule : map.rules()) {
        json item;
        switch (rule.kind) {
            case IntervalPredicateKind::SubsetOf:
                item["when"] = "subset_of";
                item["of"] = interval_json(*rule.operand);
                break;
            case IntervalPredicateKind::Equals:
                item["when"] = "equals";
                item["of"] = interval_json(*rule.operand);
                break;
            case IntervalPredicateKind::Otherwise:
                item["when"] = "otherwise";
                break;
        }
        item["image"] = interval_json(*rule.image);
        rules.push_back(std::move(item));
    }
    json out;
    out["rules"] = std::move(rules);
    return out;
}

} // namespace

std::string serialize_instance(const Instance& instance) {
    json root;
    if (instance.is_finite()) {
        const FiniteInstance& finite = instance.finite();
        const FiniteMetricSpace& space = *finite.space;
        json space_node;
        space_node["kind"] = "finite";
        space_node["points"] = json::array();
        for (const std::string& label : space.points()) space_node["points"].push_back(label);
        json matrix = json::array();
        for (size_t i = 0; i < space.size(); ++i) {
            json row = json::array();
            for (size_t j = 0; j < space.size(); ++j)
                row.push_back(rational_json(space.dist(i, j)));
            matrix.push_back(std::move(row));
        }
        space_node["matrix"] = std::move(matrix);
        root["space"] = std::move(space_node);

        json graph_node;
        bool all_loops = finite.graph->has_all_loops();
        graph_node["loops"] = all_loops ? "all" : "listed";
        json edge_list = json::array();
        for (auto [from, to] : finite.graph->edges()) {
            if (all_loops && from == to) continue;
            edge_list.push_back(json::array({space.label(from), space.label(to)}));
        }
        graph_node["edges"] = std::move(edge_list);
        root["graph"] = std::move(graph_node);

        json maps;
        maps["S"] = table_map_json(*finite.map_s);
        maps["T"] = table_map_json(*finite.map_t);
        root["maps"] = std::move(maps);
    } else {
        const IntervalInstance& intervals = instance.intervals();
        json space_node;
        space_node["kind"] = "interval";
        json probes = json::array();
        for (const ClosedInterval& probe : intervals.probes) probes.push_back(interval_json(probe));
        space_node["probes"] = std::move(probes);
        root["space"] = std::move(space_node);

        json maps;
        maps["S"] = rule_map_json(*intervals.map_s);
        maps["T"] = rule_map_json(*intervals.map_t);
        root["maps"] = std::move(maps);
    }

    root["gauge"] = gauge_json(*instance.gauge);

    if (instance.params) {
        json params;
        params["alpha"] = rational_json(instance.params->alpha);
        params["beta"] = rational_json(instance.params->beta);
        params["gamma"] = rational_json(instance.params->gamma);
        params["delta1"] = rational_json(instance.params->delta1);
        params["delta2"] = rational_json(instance.params->delta2);
        root["params"] = std::move(params);
    }

    json options;
    options["undirected_lift"] = instance.options.undirected_lift;
    json probes = json::array();
    for (const Rational& probe : instance.options.probes) probes.push_back(rational_json(probe));
    options["probes"] = std::move(probes);
    options["iterations"] = instance.options.iterations;
    options["tail_tolerance"] = rational_json(instance.options.tail_tolerance);
    root["options"] = std::move(options);

    return root.dump(2) + "\n";
}

bool instances_equal(const Instance& a, const Instance& b) {
    return serialize_instance(a) == serialize_instance(b);
}

GaugeFunction parse_gauge_document(const std::string& text) {
    std::vector<ParseIssue> issues;
    IssueSink sink{issues};
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw structural_error(std::string("gauge document: ") + e.what());
    }
    auto gauge = parse_gauge_json(root, "gauge", sink);
    if (!gauge) {
        std::string message = "gauge document invalid";
        for (const ParseIssue& issue : issues) message += "; " + issue.path + ": " + issue.message;
        throw structural_error(message);
    }
    return std::move(*gauge);
}

} // namespace fpgraph
