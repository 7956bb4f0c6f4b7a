// scopelab: run SLX scripts under a dynamic or lexical scoping discipline,
// dump final global scope, or diff one script's behavior across both rules.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "slx/inspector.hpp"
#include "slx/interpreter.hpp"

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

slx::Discipline parse_discipline(const std::string& text) {
    return text == "lexical" ? slx::Discipline::Lexical : slx::Discipline::Dynamic;
}

slx::DefaultsMode parse_defaults(const std::string& text) {
    return text == "lazy" ? slx::DefaultsMode::Lazy : slx::DefaultsMode::Eager;
}

int run_script(const std::string& path, const slx::RunConfig& config, bool dump_globals) {
    auto source = read_file(path);
    if (!source) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return 2;
    }
    slx::RunOutcome outcome = slx::run_program(*source, config);
    for (const std::string& line : outcome.stdout_lines) {
        std::cout << line << '\n';
    }
    if (dump_globals) {
        for (const auto& [name, value] : outcome.final_globals) {
            std::cout << "GLOBAL " << name << ' ' << value << '\n';
        }
    }
    for (const std::string& line : outcome.trace_lines) {
        std::cerr << line << '\n';
    }
    if (outcome.error) {
        std::cerr << "error[" << slx::error_kind_name(outcome.error->kind) << "] line "
                  << outcome.error->line << ": " << outcome.error->message << '\n';
        return 1;
    }
    return 0;
}

int diff_script(const std::string& path, slx::DefaultsMode defaults) {
    auto source = read_file(path);
    if (!source) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return 2;
    }
    slx::DivergenceReport report = slx::compare_disciplines(*source, defaults);
    std::cout << slx::render_divergence_report(report);
    return report.identical ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scopelab: execute SLX scripts under dynamic or lexical scoping"};
    app.require_subcommand(1);

    std::string script;
    std::string discipline = "dynamic";
    std::string defaults = "eager";
    bool trace = false;

    auto add_script_arg = [&](CLI::App* sub) {
        sub->add_option("script", script, "SLX script file")->required();
        sub->add_option("--defaults", defaults, "default-argument evaluation: eager|lazy")
            ->check(CLI::IsMember({"eager", "lazy"}));
    };
    auto add_run_flags = [&](CLI::App* sub) {
        sub->add_option("--discipline", discipline, "scoping discipline: dynamic|lexical")
            ->check(CLI::IsMember({"dynamic", "lexical"}));
        sub->add_flag("--trace", trace, "write resolution trace lines to stderr");
    };

    CLI::App* run_cmd = app.add_subcommand("run", "execute a script");
    add_script_arg(run_cmd);
    add_run_flags(run_cmd);

    CLI::App* dump_cmd =
        app.add_subcommand("dump", "execute a script, then print the final global scope");
    add_script_arg(dump_cmd);
    add_run_flags(dump_cmd);

    CLI::App* diff_cmd =
        app.add_subcommand("diff", "run under both disciplines and report divergence");
    add_script_arg(diff_cmd);
    // Accepted for symmetry with run/dump, but diff always runs both.
    diff_cmd->add_option("--discipline", discipline, "ignored; diff runs both disciplines")
        ->check(CLI::IsMember({"dynamic", "lexical"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (diff_cmd->parsed()) {
        return diff_script(script, parse_defaults(defaults));
    }
    slx::RunConfig config;
    config.discipline = parse_discipline(discipline);
    config.defaults = parse_defaults(defaults);
    config.trace = trace;
    return run_script(script, config, dump_cmd->parsed());
}
