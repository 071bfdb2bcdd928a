#pragma once

#include "fpgraph/certify.hpp"
#include "fpgraph/instance.hpp"
#include "fpgraph/solve.hpp"

#include <optional>
#include <string>

namespace fpgraph {

enum class CommandKind { Validate, Certify, Solve, Enumerate };
enum class ContractionKind { Psi1, Psi2, Phi };
enum class ReportFormat { Text, Machine };

struct RunRequest {
    CommandKind command = CommandKind::Validate;
    ContractionKind certify_kind = ContractionKind::Psi1;
    ReportFormat format = ReportFormat::Text;
    std::optional<bool> lift_override; // CLI flag overriding the instance option
    std::string start_literal;         // solve: "{1,3}" or "[0,10]"
    std::optional<size_t> max_steps;   // solve: defaults to the pigeonhole bound
};

struct RunOutcome {
    std::string document; // newline-terminated report
    int exit_status;
};

// Exit status contract: 0 certified/solved, 1 refuted, 2 caveats or
// inconclusive outcomes, 3 structural problems, 64 usage errors.
inline constexpr int kExitCertified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitCaveats = 2;
inline constexpr int kExitStructural = 3;
inline constexpr int kExitUsage = 64;

// Executes one workbench command against a parsed instance. The document is a
// pure function of (instance, request): reports are byte-stable across runs.
RunOutcome run_command(const Instance& instance, const RunRequest& request);

int exit_status_for(OverallVerdict verdict);
int exit_status_for(Termination termination);

} // namespace fpgraph
