#include "fpgraph/report.hpp"

#include "fpgraph/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace fpgraph {

using json = nlohmann::ordered_json;

namespace {

std::string verdict_name(OverallVerdict verdict) {
    switch (verdict) {
        case OverallVerdict::Certified:
            return "Certified";
        case OverallVerdict::Refuted:
            return "Refuted";
        case OverallVerdict::CertifiedWithCaveats:
            return "CertifiedWithCaveats";
    }
    return {};
}

std::string hypothesis_verdict_name(HypothesisVerdict verdict) {
    switch (verdict) {
        case HypothesisVerdict::Verified:
            return "Verified";
        case HypothesisVerdict::Refuted:
            return "Refuted";
        case HypothesisVerdict::Inconclusive:
            return "Inconclusive";
        case HypothesisVerdict::Skipped:
            return "Skipped";
    }
    return {};
}

std::string termination_name(Termination termination) {
    switch (termination) {
        case Termination::CoincidenceFound:
            return "CoincidenceFound";
        case Termination::CycleDetected:
            return "CycleDetected";
        case Termination::RangeViolation:
            return "RangeViolation";
        case Termination::StepLimit:
            return "StepLimit";
    }
    return {};
}

json pair_records_json(const std::vector<PairRecord>& records) {
    json list = json::array();
    for (const PairRecord& record : records) {
        json item;
        item["A"] = record.a;
        item["B"] = record.b;
        item["lhs"] = record.lhs.to_string();
        item["m_value"] = record.m_value.to_string();
        item["bound"] = record.bound.to_string();
        item["pass"] = record.pass;
        list.push_back(std::move(item));
    }
    return list;
}

json hypotheses_json(const std::vector<HypothesisCheck>& checks) {
    json list = json::array();
    for (const HypothesisCheck& check : checks) {
        json item;
        item["name"] = check.name;
        item["verdict"] = hypothesis_verdict_name(check.verdict);
        item["witness"] = check.witness;
        item["detail"] = check.detail;
        list.push_back(std::move(item));
    }
    return list;
}

void append_pair_table(std::ostringstream& out, const std::vector<PairRecord>& records) {
    size_t passing = 0;
    for (const PairRecord& record : records) {
        if (record.pass) ++passing;
    }
    out << "pairs swept: " << records.size() << ", passing: " << passing << "\n";
    for (const PairRecord& record : records) {
        out << "  " << (record.pass ? "pass" : "FAIL") << "  (" << record.a << ", " << record.b
            << ")  lhs=" << record.lhs.to_string() << "  m=" << record.m_value.to_string()
            << "  bound=" << record.bound.to_string() << "\n";
    }
}

RunOutcome render_certification(const CertificationReport& report, ReportFormat format) {
    int status = exit_status_for(report.overall);
    if (format == ReportFormat::Machine) {
        json doc;
        doc["command"] = "certify";
        doc["kind"] = report.kind;
        doc["undirected_lift"] = report.undirected_lift;
        doc["overall"] = verdict_name(report.overall);
        doc["exit_status"] = status;
        doc["pair_records"] = pair_records_json(report.pair_records);
        if (report.directed_pair_records) {
            doc["directed_pair_records"] = pair_records_json(*report.directed_pair_records);
        }
        doc["hypotheses"] = hypotheses_json(report.hypothesis_checks);
        return {doc.dump(2) + "\n", status};
    }
    std::ostringstream out;
    out << "certify " << report.kind
        << (report.undirected_lift ? " (undirected lift)" : "") << "\n";
    out << "overall: " << verdict_name(report.overall) << "\n";
    append_pair_table(out, report.pair_records);
    if (report.directed_pair_records) {
        out << "directed-reading sweep:\n";
        append_pair_table(out, *report.directed_pair_records);
    }
    out << "hypotheses:\n";
    for (const HypothesisCheck& check : report.hypothesis_checks) {
        out << "  " << check.name << ": " << hypothesis_verdict_name(check.verdict);
        if (!check.witness.empty()) out << "  witness " << check.witness;
        if (!check.detail.empty()) out << "  -- " << check.detail;
        out << "\n";
    }
    return {out.str(), status};
}

template <class Elem>
RunOutcome render_trace(const BasicIterationTrace<Elem>& trace, const std::string& start,
                        size_t max_steps, ReportFormat format) {
    int status = exit_status_for(trace.termination);
    if (format == ReportFormat::Machine) {
        json doc;
        doc["command"] = "solve";
        doc["start"] = start;
        doc["max_steps"] = max_steps;
        json steps = json::array();
        for (const auto& step : trace.steps) {
            json item;
            item["A"] = step.current.to_literal();
            item["S"] = step.s_image.to_literal();
            item["T"] = step.t_image.to_literal();
            steps.push_back(std::move(item));
        }
        doc["steps"] = std::move(steps);
        doc["termination"] = termination_name(trace.termination);
        if (trace.coincidence) doc["coincidence"] = trace.coincidence->to_literal();
        if (trace.missing_target) doc["missing_target"] = trace.missing_target->to_literal();
        if (trace.termination == Termination::CycleDetected) doc["cycle_period"] = trace.cycle_period;
        doc["exit_status"] = status;
        return {doc.dump(2) + "\n", status};
    }
    std::ostringstream out;
    out << "solve from " << start << " (max steps " << max_steps << ")\n";
    for (size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        out << "  step " << i << ": A = " << step.current.to_literal()
            << "  S(A) = " << step.s_image.to_literal() << "  T(A) = " << step.t_image.to_literal()
            << "\n";
    }
    out << "termination: " << termination_name(trace.termination);
    if (trace.coincidence) out << " at " << trace.coincidence->to_literal();
    if (trace.missing_target)
        out << " -- " << trace.missing_target->to_literal() << " has no preimage under T";
    if (trace.termination == Termination::CycleDetected) out << " (period " << trace.cycle_period << ")";
    out << "\n";
    return {out.str(), status};
}

template <class Elem>
json literals_json(const std::vector<Elem>& elements) {
    json list = json::array();
    for (const Elem& element : elements) list.push_back(element.to_literal());
    return list;
}

template <class Elem>
RunOutcome render_enumeration(const std::vector<Elem>& coincidence,
                              const FixedPointSets<Elem>& fixed, ReportFormat format) {
    if (format == ReportFormat::Machine) {
        json doc;
        doc["command"] = "enumerate";
        doc["coincidence_points"] = literals_json(coincidence);
        doc["fix_S"] = literals_json(fixed.fix_s);
        doc["fix_T"] = literals_json(fixed.fix_t);
        doc["common_fixed_points"] = literals_json(fixed.common);
        doc["exit_status"] = kExitCertified;
        return {doc.dump(2) + "\n", kExitCertified};
    }
    std::ostringstream out;
    auto line = [&](const char* label, const std::vector<Elem>& elements) {
        out << label << ":";
        if (elements.empty()) out << " (none)";
        for (const Elem& element : elements) out << " " << element.to_literal();
        out << "\n";
    };
    line("coincidence points", coincidence);
    line("fixed points of S", fixed.fix_s);
    line("fixed points of T", fixed.fix_t);
    line("common fixed points", fixed.common);
    return {out.str(), kExitCertified};
}

std::string axiom_name(MetricAxiom axiom) {
    switch (axiom) {
        case MetricAxiom::Identity:
            return "identity";
        case MetricAxiom::Positivity:
            return "positivity";
        case MetricAxiom::Symmetry:
            return "symmetry";
        case MetricAxiom::Triangle:
            return "triangle";
    }
    return {};
}

RunOutcome run_validate(const Instance& instance, ReportFormat format) {
    if (!instance.is_finite()) {
        // Interval structure was fully validated at parse time.
        if (format == ReportFormat::Machine) {
            json doc;
            doc["command"] = "validate";
            doc["ok"] = true;
            doc["violations"] = json::array();
            doc["exit_status"] = kExitCertified;
            return {doc.dump(2) + "\n", kExitCertified};
        }
        return {"instance ok: interval probe family is structurally valid\n", kExitCertified};
    }
    const FiniteMetricSpace& space = *instance.finite().space;
    MetricValidation validation = validate_metric(space);
    int status = validation.ok() ? kExitCertified : kExitRefuted;
    if (format == ReportFormat::Machine) {
        json doc;
        doc["command"] = "validate";
        doc["ok"] = validation.ok();
        json list = json::array();
        for (const MetricViolation& violation : validation.violations) {
            json item;
            item["axiom"] = axiom_name(violation.axiom);
            json witness = json::array();
            for (size_t index : violation.witness) witness.push_back(space.label(index));
            item["witness"] = std::move(witness);
            item["detail"] = violation.describe(space);
            list.push_back(std::move(item));
        }
        doc["violations"] = std::move(list);
        doc["exit_status"] = status;
        return {doc.dump(2) + "\n", status};
    }
    std::ostringstream out;
    if (validation.ok()) {
        out << "metric ok: all axioms hold on " << space.size() << " points\n";
    } else {
        out << "metric INVALID: " << validation.violations.size() << " violation(s)\n";
        for (const MetricViolation& violation : validation.violations) {
            out << "  " << axiom_name(violation.axiom) << ": " << violation.describe(space) << "\n";
        }
    }
    return {out.str(), status};
}

CertifyOptions options_for(const Instance& instance, const RunRequest& request) {
    CertifyOptions options;
    options.undirected_lift =
        request.lift_override.value_or(instance.options.undirected_lift);
    options.gauge_probes = instance.options.probes;
    options.gauge_iterations = instance.options.iterations;
    options.tail_tolerance = instance.options.tail_tolerance;
    return options;
}

RunOutcome run_certify(const Instance& instance, const RunRequest& request) {
    CertifyOptions options = options_for(instance, request);
    if (request.certify_kind == ContractionKind::Psi2 && !instance.params) {
        return {"usage error: psi2 certification needs a params section\n", kExitUsage};
    }
    CertificationReport report;
    if (instance.is_finite()) {
        const FiniteInstance& finite = instance.finite();
        switch (request.certify_kind) {
            case ContractionKind::Psi1:
                report = certify_psi1(*finite.map_s, *finite.map_t, *instance.gauge, *finite.graph,
                                      options);
                break;
            case ContractionKind::Psi2:
                report = certify_psi2(*finite.map_s, *finite.map_t, *instance.gauge,
                                      *instance.params, *finite.graph, options);
                break;
            case ContractionKind::Phi:
                report = certify_phi(*finite.map_t, *instance.gauge, *finite.graph, options);
                break;
        }
    } else {
        const IntervalInstance& intervals = instance.intervals();
        switch (request.certify_kind) {
            case ContractionKind::Psi1:
                report = certify_psi1_intervals(*intervals.map_s, *intervals.map_t, *instance.gauge,
                                                intervals.probes, options);
                break;
            case ContractionKind::Psi2:
                report = certify_psi2_intervals(*intervals.map_s, *intervals.map_t, *instance.gauge,
                                                *instance.params, intervals.probes, options);
                break;
            case ContractionKind::Phi:
                return {"usage error: phi certification needs a finite (table-map) instance\n",
                        kExitUsage};
        }
    }
    return render_certification(report, request.format);
}

RunOutcome run_solve(const Instance& instance, const RunRequest& request) {
    if (request.start_literal.empty()) {
        return {"usage error: solve needs a start set\n", kExitUsage};
    }
    if (instance.is_finite()) {
        const FiniteInstance& finite = instance.finite();
        size_t default_steps = (1u << finite.space->size());
        size_t max_steps = request.max_steps.value_or(default_steps);
        std::vector<std::string> labels;
        {
            // Reuse the instance literal syntax: {a,b,...}.
            std::string text = request.start_literal;
            if (text.size() < 2 || text.front() != '{' || text.back() != '}')
                throw structural_error("start set literal must look like {a,b}");
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
        }
        PointSet start(*finite.space, labels);
        IterationTrace trace = jungck_iterate(*finite.map_s, *finite.map_t, start, max_steps);
        return render_trace(trace, start.to_literal(), max_steps, request.format);
    }
    const IntervalInstance& intervals = instance.intervals();
    size_t max_steps = request.max_steps.value_or(intervals.probes.size() + 1);
    std::string text = request.start_literal;
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw structural_error("start interval literal must look like [lo,hi]");
    size_t comma = text.find(',');
    if (comma == std::string::npos) throw structural_error("start interval needs two bounds");
    Rational lo = Rational::from_string(text.substr(1, comma - 1));
    Rational hi = Rational::from_string(text.substr(comma + 1, text.size() - comma - 2));
    ClosedInterval start(lo, hi);
    IntervalIterationTrace trace = jungck_iterate_intervals(*intervals.map_s, *intervals.map_t,
                                                            intervals.probes, start, max_steps);
    return render_trace(trace, start.to_literal(), max_steps, request.format);
}

RunOutcome run_enumerate(const Instance& instance, const RunRequest& request) {
    if (instance.is_finite()) {
        const FiniteInstance& finite = instance.finite();
        auto coincidence = enumerate_coincidence_points(*finite.map_s, *finite.map_t);
        auto fixed = enumerate_common_fixed_points(*finite.map_s, *finite.map_t);
        return render_enumeration(coincidence, fixed, request.format);
    }
    const IntervalInstance& intervals = instance.intervals();
    auto coincidence = enumerate_coincidence_points_intervals(*intervals.map_s, *intervals.map_t,
                                                              intervals.probes);
    auto fixed = enumerate_common_fixed_points_intervals(*intervals.map_s, *intervals.map_t,
                                                         intervals.probes);
    return render_enumeration(coincidence, fixed, request.format);
}

} // namespace

int exit_status_for(OverallVerdict verdict) {
    switch (verdict) {
        case OverallVerdict::Certified:
            return kExitCertified;
        case OverallVerdict::Refuted:
            return kExitRefuted;
        case OverallVerdict::CertifiedWithCaveats:
            return kExitCaveats;
    }
    return kExitStructural;
}

int exit_status_for(Termination termination) {
    switch (termination) {
        case Termination::CoincidenceFound:
            return kExitCertified;
        case Termination::RangeViolation:
            return kExitRefuted;
        case Termination::CycleDetected:
        case Termination::StepLimit:
            return kExitCaveats;
    }
    return kExitStructural;
}

RunOutcome run_command(const Instance& instance, const RunRequest& request) {
    // Commands beyond plain validation need a sound metric to mean anything.
    if (request.command != CommandKind::Validate && instance.is_finite()) {
        MetricValidation validation = validate_metric(*instance.finite().space);
        if (!validation.ok()) {
            return {"structural error: the instance distance matrix violates the metric axioms; "
                    "run the validate command for the witness list\n",
                    kExitStructural};
        }
    }
    switch (request.command) {
        case CommandKind::Validate:
            return run_validate(instance, request.format);
        case CommandKind::Certify:
            return run_certify(instance, request);
        case CommandKind::Solve:
            return run_solve(instance, request);
        case CommandKind::Enumerate:
            return run_enumerate(instance, request);
    }
    return {"usage error: unknown command\n", kExitUsage};
}

} // namespace fpgraph
