#pragma once

// Shared builders for the bundled corpus instances, used by module tests that
// should not depend on the file format, plus a loader for the shipped files.

#include "fpgraph/certify.hpp"
#include "fpgraph/gauge.hpp"
#include "fpgraph/graph.hpp"
#include "fpgraph/instance.hpp"
#include "fpgraph/metric.hpp"
#include "fpgraph/setmap.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fixtures {

inline std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

inline std::string corpus_path(const std::string& name) {
    return std::string(FPGRAPH_CORPUS_DIR) + "/" + name;
}

inline std::shared_ptr<fpgraph::Instance> load_corpus_instance(const std::string& name) {
    fpgraph::InstanceParseResult parsed = fpgraph::parse_instance(read_file(corpus_path(name)));
    if (!parsed.ok()) throw std::runtime_error("corpus instance failed to parse: " + name);
    return parsed.instance;
}

// "{a,b}" -> labels, for building point sets in tests.
inline std::vector<std::string> read_literal(const fpgraph::FiniteMetricSpace&,
                                             const std::string& text) {
    std::vector<std::string> labels;
    std::string current;
    for (size_t i = 1; i + 1 < text.size(); ++i) {
        if (text[i] == ',') {
            labels.push_back(current);
            current.clear();
        } else {
            current += text[i];
        }
    }
    labels.push_back(current);
    return labels;
}

// Four-point space with d = 1/4 inside {1,2} and 4/5 elsewhere.
inline std::shared_ptr<const fpgraph::FiniteMetricSpace> space22() {
    using fpgraph::Rational;
    std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j)
                m[i][j] = Rational(0);
            else if (i < 2 && j < 2)
                m[i][j] = Rational(1, 4);
            else
                m[i][j] = Rational(4, 5);
        }
    }
    return std::make_shared<const fpgraph::FiniteMetricSpace>(
        std::vector<std::string>{"1", "2", "3", "4"}, m);
}

inline fpgraph::DirectedGraph graph22(const fpgraph::FiniteMetricSpace& space) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i; j < 4; ++j) edges.emplace_back(i, j);
    return fpgraph::DirectedGraph(space, edges);
}

inline fpgraph::DirectedGraph graph23(const fpgraph::FiniteMetricSpace& space) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t i = 0; i < 4; ++i) edges.emplace_back(i, i);
    for (size_t j = 1; j < 4; ++j) edges.emplace_back(0, j);
    return fpgraph::DirectedGraph(space, edges);
}

inline fpgraph::TableSetMap map_s22(const fpgraph::FiniteMetricSpace& space) {
    std::vector<std::pair<fpgraph::PointSet, fpgraph::PointSet>> rows;
    for (const fpgraph::PointSet& u : all_point_sets(space)) {
        uint32_t image = (u.bits() & ~0b0011u) == 0 ? 0b0001u : 0b0011u;
        rows.emplace_back(u, fpgraph::PointSet(space, image));
    }
    return fpgraph::TableSetMap(space, rows);
}

inline fpgraph::TableSetMap map_t22(const fpgraph::FiniteMetricSpace& space) {
    std::vector<std::pair<fpgraph::PointSet, fpgraph::PointSet>> rows;
    for (const fpgraph::PointSet& u : all_point_sets(space)) {
        uint32_t image;
        if (u.bits() == 0b0001u)
            image = 0b0001u;
        else if ((u.bits() & ~0b0110u) == 0)
            image = 0b0111u;
        else
            image = 0b1111u;
        rows.emplace_back(u, fpgraph::PointSet(space, image));
    }
    return fpgraph::TableSetMap(space, rows);
}

inline fpgraph::TableSetMap map_s23(const fpgraph::FiniteMetricSpace& space) {
    std::vector<std::pair<fpgraph::PointSet, fpgraph::PointSet>> rows;
    for (const fpgraph::PointSet& u : all_point_sets(space)) {
        uint32_t image = u.bits() == 0b0001u ? 0b0001u : 0b0011u;
        rows.emplace_back(u, fpgraph::PointSet(space, image));
    }
    return fpgraph::TableSetMap(space, rows);
}

inline fpgraph::TableSetMap map_t23(const fpgraph::FiniteMetricSpace& space) {
    std::vector<std::pair<fpgraph::PointSet, fpgraph::PointSet>> rows;
    for (const fpgraph::PointSet& u : all_point_sets(space)) {
        uint32_t image = u.bits() == 0b0001u ? 0b0001u : 0b1111u;
        rows.emplace_back(u, fpgraph::PointSet(space, image));
    }
    return fpgraph::TableSetMap(space, rows);
}

inline fpgraph::GaugeFunction gauge22() {
    using fpgraph::GaugeFormula;
    using fpgraph::GaugePiece;
    using fpgraph::Rational;
    return fpgraph::GaugeFunction(
        {GaugePiece{Rational(0), Rational(1, 2), GaugeFormula::quadratic(Rational(1, 2))},
         GaugePiece{Rational(1, 2), std::nullopt,
                    GaugeFormula::mobius(Rational(1), Rational(0), Rational(1), Rational(1))}});
}

inline fpgraph::GaugeFunction gauge23() {
    using fpgraph::GaugeFormula;
    using fpgraph::GaugePiece;
    using fpgraph::Rational;
    return fpgraph::GaugeFunction(
        {GaugePiece{Rational(0), Rational(1, 4), GaugeFormula::linear(Rational(1, 8))},
         GaugePiece{Rational(1, 4), std::nullopt,
                    GaugeFormula::mobius(Rational(1), Rational(1), Rational(1), Rational(2))}});
}

inline fpgraph::GaugeFunction gauge27() {
    using fpgraph::GaugeFormula;
    using fpgraph::GaugePiece;
    using fpgraph::Rational;
    return fpgraph::GaugeFunction(
        {GaugePiece{Rational(0), Rational(1), GaugeFormula::linear(Rational(3, 4))},
         GaugePiece{Rational(1), std::nullopt, GaugeFormula::linear(Rational(5, 6))}});
}

// Random validated metric: entries in [1, 2] scaled by a positive rational,
// which satisfies the triangle inequality outright.
template <class Rng>
std::shared_ptr<const fpgraph::FiniteMetricSpace> random_space(Rng& rng, size_t n) {
    using fpgraph::Rational;
    std::vector<std::string> points;
    for (size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    Rational scale(1 + static_cast<long long>(rng() % 5), 1 + static_cast<long long>(rng() % 3));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Rational base(static_cast<long long>(16 + rng() % 17), 16); // in [1, 2]
            m[i][j] = base * scale;
            m[j][i] = m[i][j];
        }
    }
    return std::make_shared<const fpgraph::FiniteMetricSpace>(std::move(points), std::move(m));
}

template <class Rng>
fpgraph::TableSetMap random_table_map(Rng& rng, const fpgraph::FiniteMetricSpace& space) {
    uint32_t total = (1u << space.size()) - 1u;
    std::vector<std::pair<fpgraph::PointSet, fpgraph::PointSet>> rows;
    for (const fpgraph::PointSet& u : all_point_sets(space)) {
        uint32_t image = 1u + static_cast<uint32_t>(rng() % total);
        rows.emplace_back(u, fpgraph::PointSet(space, image));
    }
    return fpgraph::TableSetMap(space, rows);
}

} // namespace fixtures
