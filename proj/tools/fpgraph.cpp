// fpgraph: batch certification workbench for set-valued fixed point instances.
//
// Subcommands mirror the library surface: validate the metric, certify a
// contraction kind, run the coincidence-point iteration, or enumerate fixed
// points. Exit status encodes the verdict (0 certified/solved, 1 refuted,
// 2 caveats/inconclusive, 3 structural error, 64 usage error).

#include "fpgraph/errors.hpp"
#include "fpgraph/instance.hpp"
#include "fpgraph/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int load_instance(const std::string& path, std::shared_ptr<fpgraph::Instance>& out) {
    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open " << path << "\n";
        return fpgraph::kExitStructural;
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    fpgraph::InstanceParseResult parsed = fpgraph::parse_instance(buffer.str());
    if (!parsed.ok()) {
        std::cerr << "error: " << path << " is not a valid instance\n";
        for (const fpgraph::ParseIssue& issue : parsed.issues) {
            std::cerr << "  at " << issue.path << ": " << issue.message << "\n";
        }
        return fpgraph::kExitStructural;
    }
    out = parsed.instance;
    return 0;
}

int execute(const std::string& path, const fpgraph::RunRequest& request) {
    std::shared_ptr<fpgraph::Instance> instance;
    if (int status = load_instance(path, instance)) return status;
    try {
        fpgraph::RunOutcome outcome = fpgraph::run_command(*instance, request);
        std::cout << outcome.document;
        return outcome.exit_status;
    } catch (const fpgraph::parameter_error& e) {
        std::cerr << "parameter error: " << e.what() << "\n";
        return fpgraph::kExitStructural;
    } catch (const fpgraph::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return fpgraph::kExitStructural;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return fpgraph::kExitStructural;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"certification workbench for set-valued fixed point instances"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    std::string validate_file;
    CLI::App* validate = app.add_subcommand("validate", "check the metric axioms");
    validate->add_option("file", validate_file, "instance file")->required();

    std::string certify_file;
    std::string kind;
    bool lift = false;
    CLI::App* certify = app.add_subcommand("certify", "certify a contraction condition");
    certify->add_option("--kind", kind, "contraction kind")
        ->required()
        ->check(CLI::IsMember({"psi1", "psi2", "phi"}));
    certify->add_flag("--undirected-lift", lift, "evaluate set edges on the symmetrized graph");
    certify->add_option("file", certify_file, "instance file")->required();

    std::string solve_file;
    std::string start;
    unsigned long long max_steps = 0;
    CLI::App* solve = app.add_subcommand("solve", "run the coincidence-point iteration");
    solve->add_option("--start", start, "start set, e.g. {1,3} or [0,10]")->required();
    solve->add_option("--max-steps", max_steps, "step budget (default: hyperspace size + 1)");
    solve->add_option("file", solve_file, "instance file")->required();

    std::string enumerate_file;
    CLI::App* enumerate = app.add_subcommand("enumerate", "list coincidence and fixed points");
    enumerate->add_option("file", enumerate_file, "instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : fpgraph::kExitUsage;
    }

    fpgraph::RunRequest request;
    request.format =
        format == "machine" ? fpgraph::ReportFormat::Machine : fpgraph::ReportFormat::Text;

    if (validate->parsed()) {
        request.command = fpgraph::CommandKind::Validate;
        return execute(validate_file, request);
    }
    if (certify->parsed()) {
        request.command = fpgraph::CommandKind::Certify;
        request.certify_kind = kind == "psi1"   ? fpgraph::ContractionKind::Psi1
                               : kind == "psi2" ? fpgraph::ContractionKind::Psi2
                                                : fpgraph::ContractionKind::Phi;
        if (lift) request.lift_override = true;
        return execute(certify_file, request);
    }
    if (solve->parsed()) {
        request.command = fpgraph::CommandKind::Solve;
        request.start_literal = start;
        if (max_steps > 0) request.max_steps = max_steps;
        return execute(solve_file, request);
    }
    request.command = fpgraph::CommandKind::Enumerate;
    return execute(enumerate_file, request);
}
