#include "fpgraph/errors.hpp"
#include "fpgraph/instance.hpp"
#include "fpgraph/report.hpp"

#include <doctest.h>

#include "fixtures.hpp"

#include <cstdio>
#include <cstdlib>

using namespace fpgraph;

TEST_CASE("corpus instances parse and round-trip byte-exactly") {
    for (const char* name : {"example_2_2.instance", "example_2_3.instance",
                             "example_2_7.instance",
                             "fixtures/example_2_2_asymmetric.instance"}) {
        std::string text = fixtures::read_file(fixtures::corpus_path(name));
        InstanceParseResult parsed = parse_instance(text);
        REQUIRE_MESSAGE(parsed.ok(), name);
        CHECK(serialize_instance(*parsed.instance) == text);
        InstanceParseResult reparsed = parse_instance(serialize_instance(*parsed.instance));
        REQUIRE(reparsed.ok());
        CHECK(instances_equal(*parsed.instance, *reparsed.instance));
    }
}

TEST_CASE("the first corpus instance carries the full 15-row tables") {
    auto inst = fixtures::load_corpus_instance("example_2_2.instance");
    REQUIRE(inst->is_finite());
    const auto& finite = inst->finite();
    CHECK(finite.space->size() == 4);
    CHECK(validate_metric(*finite.space).ok());
    CHECK(all_point_sets(*finite.space).size() == 15);
    CHECK(finite.graph->has_all_loops());
    CHECK(finite.map_s->apply(PointSet(*finite.space, {"3"})).to_literal() == "{1,2}");
    CHECK_FALSE(inst->params.has_value());
    CHECK(inst->options.undirected_lift == false);
    CHECK(inst->options.iterations == 64);
}

TEST_CASE("the interval corpus instance carries the five probes and weights") {
    auto inst = fixtures::load_corpus_instance("example_2_7.instance");
    REQUIRE_FALSE(inst->is_finite());
    CHECK(inst->intervals().probes.size() == 5);
    REQUIRE(inst->params.has_value());
    CHECK(inst->params->alpha == Rational(5, 6));
    CHECK(inst->params->gamma == Rational(1, 6));
}

TEST_CASE("a missing table row is reported with the absent subset") {
    std::string text = fixtures::read_file(fixtures::corpus_path("example_2_2.instance"));
    // Drop the {2,4} row from the S table.
    const std::string row = "{\n          \"set\": \"{2,4}\",\n          \"image\": \"{1,2}\"\n        },\n        ";
    size_t pos = text.find(row);
    REQUIRE(pos != std::string::npos);
    text.erase(pos, row.size());
    InstanceParseResult parsed = parse_instance(text);
    REQUIRE_FALSE(parsed.ok());
    bool mentioned = false;
    for (const ParseIssue& issue : parsed.issues) {
        if (issue.message.find("{2,4}") != std::string::npos) mentioned = true;
    }
    CHECK(mentioned);
}

TEST_CASE("parse failures carry locations") {
    InstanceParseResult bad_json = parse_instance("{ not json");
    REQUIRE_FALSE(bad_json.ok());
    CHECK(bad_json.issues[0].path == "(document)");

    std::string text = fixtures::read_file(fixtures::corpus_path("example_2_2.instance"));

    SUBCASE("unknown formula kind") {
        std::string mutated = text;
        size_t pos = mutated.find("\"quadratic\"");
        REQUIRE(pos != std::string::npos);
        mutated.replace(pos, 11, "\"cubic\"");
        InstanceParseResult parsed = parse_instance(mutated);
        REQUIRE_FALSE(parsed.ok());
        CHECK(parsed.issues[0].path == "gauge.pieces[0].kind");
    }

    SUBCASE("dangling point label") {
        std::string mutated = text;
        size_t pos = mutated.find("\"image\": \"{1,2,3,4}\"");
        REQUIRE(pos != std::string::npos);
        mutated.replace(pos, std::string("\"image\": \"{1,2,3,4}\"").size(),
                        "\"image\": \"{1,2,3,9}\"");
        InstanceParseResult parsed = parse_instance(mutated);
        REQUIRE_FALSE(parsed.ok());
        CHECK(parsed.issues[0].path.find("maps.") == 0);
        CHECK(parsed.issues[0].message.find("9") != std::string::npos);
    }

    SUBCASE("bad rational") {
        std::string mutated = text;
        size_t pos = mutated.find("\"4/5\"");
        REQUIRE(pos != std::string::npos);
        mutated.replace(pos, 5, "\"4//5\"");
        InstanceParseResult parsed = parse_instance(mutated);
        REQUIRE_FALSE(parsed.ok());
        CHECK(parsed.issues[0].path.find("space.matrix") == 0);
    }
}

TEST_CASE("the standalone gauge fixture parses and is the refuted corpus gauge") {
    GaugeFunction gauge = parse_gauge_document(
        fixtures::read_file(fixtures::corpus_path("fixtures/example_2_3_gauge.json")));
    CHECK(gauge == fixtures::gauge23());
    GaugeVerdict verdict = classify_gauge(gauge);
    CHECK(verdict.in_psi == CheckVerdict::Refuted);
    CHECK(*verdict.below_identity_witness == Rational(1, 2));
    CHECK_THROWS_AS(parse_gauge_document("{}"), structural_error);
}

TEST_CASE("run_command maps verdicts to exit statuses") {
    auto inst22 = fixtures::load_corpus_instance("example_2_2.instance");
    auto inst23 = fixtures::load_corpus_instance("example_2_3.instance");
    auto inst27 = fixtures::load_corpus_instance("example_2_7.instance");

    RunRequest certify;
    certify.command = CommandKind::Certify;
    certify.certify_kind = ContractionKind::Psi1;
    CHECK(run_command(*inst22, certify).exit_status == kExitCaveats);
    CHECK(run_command(*inst23, certify).exit_status == kExitRefuted);

    certify.certify_kind = ContractionKind::Psi2;
    CHECK(run_command(*inst27, certify).exit_status == kExitCertified);
    // psi2 without params is a usage error.
    CHECK(run_command(*inst22, certify).exit_status == kExitUsage);

    certify.certify_kind = ContractionKind::Phi;
    CHECK(run_command(*inst27, certify).exit_status == kExitUsage);

    RunRequest solve;
    solve.command = CommandKind::Solve;
    solve.start_literal = "{1}";
    CHECK(run_command(*inst22, solve).exit_status == kExitCertified);
    solve.start_literal = "{3}";
    CHECK(run_command(*inst22, solve).exit_status == kExitRefuted);

    RunRequest enumerate;
    enumerate.command = CommandKind::Enumerate;
    CHECK(run_command(*inst22, enumerate).exit_status == kExitCertified);

    RunRequest validate;
    validate.command = CommandKind::Validate;
    CHECK(run_command(*inst22, validate).exit_status == kExitCertified);
    auto asym =
        fixtures::load_corpus_instance("fixtures/example_2_2_asymmetric.instance");
    CHECK(run_command(*asym, validate).exit_status == kExitRefuted);
    // Anything beyond validate refuses to run on a broken metric.
    CHECK(run_command(*asym, certify).exit_status == kExitStructural);
}

TEST_CASE("solve documents carry the trace") {
    auto inst = fixtures::load_corpus_instance("example_2_2.instance");
    RunRequest solve;
    solve.command = CommandKind::Solve;
    solve.start_literal = "{3}";
    RunOutcome outcome = run_command(*inst, solve);
    CHECK(outcome.document.find("RangeViolation") != std::string::npos);
    CHECK(outcome.document.find("{1,2}") != std::string::npos);

    solve.format = ReportFormat::Machine;
    RunOutcome machine = run_command(*inst, solve);
    CHECK(machine.document.find("\"termination\": \"RangeViolation\"") != std::string::npos);
    CHECK(machine.document.find("\"missing_target\": \"{1,2}\"") != std::string::npos);
}

TEST_CASE("machine reports for the corpus are byte-identical across runs") {
    struct Case {
        const char* file;
        ContractionKind kind;
    };
    Case cases[] = {{"example_2_2.instance", ContractionKind::Psi1},
                    {"example_2_3.instance", ContractionKind::Psi1},
                    {"example_2_7.instance", ContractionKind::Psi2}};
    for (const Case& c : cases) {
        RunRequest request;
        request.command = CommandKind::Certify;
        request.certify_kind = c.kind;
        request.format = ReportFormat::Machine;
        auto first_instance = fixtures::load_corpus_instance(c.file);
        auto second_instance = fixtures::load_corpus_instance(c.file);
        RunOutcome first = run_command(*first_instance, request);
        RunOutcome second = run_command(*second_instance, request);
        CHECK(first.document == second.document);
        CHECK(first.exit_status == second.exit_status);
    }
}

#ifdef FPGRAPH_CLI_PATH
namespace {

int run_cli(const std::string& args) {
    std::string command = std::string(FPGRAPH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int raw = std::system(command.c_str());
    return WEXITSTATUS(raw);
}

} // namespace

TEST_CASE("the command line maps corpus runs to the documented statuses") {
    std::string c22 = fixtures::corpus_path("example_2_2.instance");
    std::string c23 = fixtures::corpus_path("example_2_3.instance");
    std::string c27 = fixtures::corpus_path("example_2_7.instance");
    std::string asym = fixtures::corpus_path("fixtures/example_2_2_asymmetric.instance");

    CHECK(run_cli("validate " + c22) == 0);
    CHECK(run_cli("validate " + asym) == 1);
    CHECK(run_cli("certify --kind psi1 " + c22) == 2);
    CHECK(run_cli("certify --kind psi1 --undirected-lift " + c22) == 2);
    CHECK(run_cli("certify --kind psi1 " + c23) == 1);
    CHECK(run_cli("certify --kind psi2 " + c27) == 0);
    CHECK(run_cli("certify --kind psi2 " + c22) == 64);
    CHECK(run_cli("--format machine certify --kind psi1 " + c22) == 2);
    CHECK(run_cli("solve --start {1} " + c22) == 0);
    CHECK(run_cli("solve --start {3} " + c22) == 1);
    CHECK(run_cli("solve --start [11,12] " + c27) == 1);
    CHECK(run_cli("solve --start [0,10] " + c27) == 0);
    CHECK(run_cli("enumerate " + c27) == 0);
    CHECK(run_cli("certify --kind cubic " + c22) == 64);
    CHECK(run_cli("certify --kind psi1 /nonexistent.instance") == 3);
}
#endif
