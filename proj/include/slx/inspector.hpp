#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slx/interpreter.hpp"

namespace slx {

struct ScopeRecord {
    std::string scope;       // frame label
    std::string name;        // binding name
    std::string value_text;  // rendered value; promises show their source text
};

// Rows for every live frame, innermost first and GLOBAL last; names in
// ascending order within a frame. Variables only: routine bindings are
// definitions, not data, and stay out of the listing.
std::vector<ScopeRecord> snapshot_scopes(const MachineState& state);

// One line per record (scope, name, value joined by single spaces), each
// ending in a newline. Byte-stable for golden tests.
std::string format_snapshot(const std::vector<ScopeRecord>& records);

struct DivergenceReport {
    struct StdoutDivergence {
        std::size_t line_index;
        std::string dynamic_line;
        std::string lexical_line;
    };
    struct GlobalDivergence {
        std::string name;
        std::string dynamic_text;
        std::string lexical_text;
    };

    std::optional<StdoutDivergence> stdout_divergence;  // first differing line
    std::vector<GlobalDivergence> global_divergences;   // sorted by name
    // Present when either run failed; equal summaries leave the report
    // identical (a parse error shows up the same way under both rules).
    std::optional<std::pair<std::string, std::string>> errors;
    bool identical = true;
};

// Runs `source` twice, once per discipline, holding everything else
// fixed, and compares stdout line-by-line and final globals name-by-name.
DivergenceReport compare_disciplines(std::string_view source, DefaultsMode defaults);

// CLI rendering: IDENTICAL/DIVERGENT header, then stdout[i] and
// global-name lines, then an errors line when a run failed.
std::string render_divergence_report(const DivergenceReport& report);

}  // namespace slx
