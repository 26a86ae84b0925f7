#pragma once

#include <string>

#include "ltlab/cli/config.hpp"

namespace ltlab::cli {

// Exit statuses of the command-line front end.
enum ExitCode { kPass = 0, kClaimFailure = 1, kPrecisionExhausted = 2, kConfigError = 3 };

// {"params", "N_used", "claims": {id: {"pass", "achieved_precision", ...}}}
// or an "error" entry {"kind", "message"}.  Precision failures are retried
// at a higher N when the case is adaptive.
json run_case(const std::string& suite, const CaseConfig& c);

// {"suite", "cases": {key: case}, "summary": {...}}; "all" nests every suite.
json run_suite(const std::string& suite, const RunConfig& rc);

// 0 when every asserted claim passes; see ExitCode.
int exit_code(const json& report);

// Serializes one object: fg, log, exp, e_p, curly_e, witt, tower.
json compute_target(const std::string& target, const CaseConfig& c);

// Flattened "key: value" lines of a JSON document.
std::string to_text(const json& j);

}  // namespace ltlab::cli
