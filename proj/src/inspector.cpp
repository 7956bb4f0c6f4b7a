#include "slx/inspector.hpp"

#include <algorithm>

namespace slx {

std::vector<ScopeRecord> snapshot_scopes(const MachineState& state) {
    std::vector<ScopeRecord> records;
    for (auto it = state.stack.rbegin(); it != state.stack.rend(); ++it) {
        const Frame& frame = **it;
        for (const auto& [name, value] : frame.bindings) {
            if (std::holds_alternative<RoutineValue>(value)) continue;
            records.push_back({frame.label, name, value_text(value)});
        }
    }
    return records;
}

std::string format_snapshot(const std::vector<ScopeRecord>& records) {
    std::string out;
    for (const ScopeRecord& record : records) {
        out += record.scope;
        out += ' ';
        out += record.name;
        out += ' ';
        out += record.value_text;
        out += '\n';
    }
    return out;
}

namespace {

std::string error_summary(const std::optional<RunError>& error) {
    if (!error) return "<none>";
    return std::string(error_kind_name(error->kind)) + " line " + std::to_string(error->line) +
           ": " + error->message;
}

}  // namespace

DivergenceReport compare_disciplines(std::string_view source, DefaultsMode defaults) {
    RunConfig config;
    config.defaults = defaults;
    config.trace = false;
    config.discipline = Discipline::Dynamic;
    RunOutcome dynamic_run = run_program(source, config);
    config.discipline = Discipline::Lexical;
    RunOutcome lexical_run = run_program(source, config);

    DivergenceReport report;

    const auto& dyn_out = dynamic_run.stdout_lines;
    const auto& lex_out = lexical_run.stdout_lines;
    std::size_t common = std::min(dyn_out.size(), lex_out.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (dyn_out[i] != lex_out[i]) {
            report.stdout_divergence = {i, dyn_out[i], lex_out[i]};
            break;
        }
    }
    if (!report.stdout_divergence && dyn_out.size() != lex_out.size()) {
        report.stdout_divergence = {common, common < dyn_out.size() ? dyn_out[common] : "<absent>",
                                    common < lex_out.size() ? lex_out[common] : "<absent>"};
    }

    // Both lists are sorted by name; merge-walk them.
    std::size_t di = 0;
    std::size_t li = 0;
    const auto& dg = dynamic_run.final_globals;
    const auto& lg = lexical_run.final_globals;
    while (di < dg.size() || li < lg.size()) {
        if (di < dg.size() && (li >= lg.size() || dg[di].first < lg[li].first)) {
            report.global_divergences.push_back({dg[di].first, dg[di].second, "<absent>"});
            ++di;
        } else if (li < lg.size() && (di >= dg.size() || lg[li].first < dg[di].first)) {
            report.global_divergences.push_back({lg[li].first, "<absent>", lg[li].second});
            ++li;
        } else {
            if (dg[di].second != lg[li].second) {
                report.global_divergences.push_back({dg[di].first, dg[di].second, lg[li].second});
            }
            ++di;
            ++li;
        }
    }

    bool errors_equal = true;
    if (dynamic_run.error || lexical_run.error) {
        report.errors = {error_summary(dynamic_run.error), error_summary(lexical_run.error)};
        errors_equal = report.errors->first == report.errors->second;
    }

    report.identical =
        !report.stdout_divergence && report.global_divergences.empty() && errors_equal;
    return report;
}

std::string render_divergence_report(const DivergenceReport& report) {
    std::string out = report.identical ? "IDENTICAL\n" : "DIVERGENT\n";
    if (report.stdout_divergence) {
        const auto& d = *report.stdout_divergence;
        out += "stdout[" + std::to_string(d.line_index) + "]: dynamic=" + d.dynamic_line +
               " lexical=" + d.lexical_line + "\n";
    }
    for (const auto& g : report.global_divergences) {
        out += "global " + g.name + ": dynamic=" + g.dynamic_text + " lexical=" + g.lexical_text +
               "\n";
    }
    if (report.errors) {
        out += "errors: dynamic=" + report.errors->first + " lexical=" + report.errors->second +
               "\n";
    }
    return out;
}

}  // namespace slx
