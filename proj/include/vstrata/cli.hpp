#ifndef VSTRATA_CLI_HPP
#define VSTRATA_CLI_HPP

#include "vstrata/json_io.hpp"
#include "vstrata/schemes.hpp"
#include "vstrata/strata.hpp"
#include "vstrata/terracini.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace vstrata::cli {

enum class Command { stratify, construct, certify, terracini, h1, sylvester, gamma };

enum class Format { json, table };

struct RunConfig {
    Command command = Command::stratify;
    unsigned m = 0;
    unsigned d = 0;
    unsigned t = 0;
    std::optional<StratumLabel> label;
    // construct: "stratum", "e2plus", "f2" or "conic".
    std::string variant = "stratum";
    bool non_collinear = false;
    unsigned t1 = 0;
    unsigned s1 = 0;
    std::optional<StratumLabel> a_parts;
    std::optional<StratumLabel> b_parts;
    JoinKind kind = JoinKind::secant;
    std::string point_path;
    std::string scheme_path;
    std::string form_path;
    std::uint64_t seed = 0;
    unsigned bound = 50;
    Format format = Format::json;
    std::optional<std::string> out_path;
    bool exact_only = false;
};

enum ExitCode : int { ok = 0, refused = 1, malformed = 2, internal = 3 };

struct RunResult {
    int exit_code = ok;
    Json report;
    // Diagnostic for nonzero exit codes.
    std::string message;
};

// Dispatches one command. Never throws: errors become exit codes with a message.
RunResult run(const RunConfig& config);

// Parses and validates SchemeSpec JSON text.
SchemeSpec parse_scheme(const std::string& json_text);

// JSON (sorted keys, two-space indent, trailing newline) or a plain-text table.
std::string emit_report(const Json& report, Format format);

// Full command line entry point: parse argv, run, write output. Returns the exit status.
int main_entry(int argc, char** argv);

} // namespace vstrata::cli

#endif // VSTRATA_CLI_HPP
