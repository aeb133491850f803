#pragma once

#include <string>

#include "hyperops/bundle.hpp"

namespace hyperops {

/// Exit codes shared by the driver, the C API and the command-line tool.
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2, kPreconditionError = 3, kInternalError = 4 };

struct Outcome {
  int exit_code = kPass;
  json report;
};

/// Runs one request against a bundle. Requests are JSON objects:
///   {"command": "check", "what": W, "args": [names]}
///   {"command": "classify-hyper", "triple": T, "flavor": F?}
///   {"command": "suite", "triple": T, "which": S}
///   {"command": "decompose", "triple": T}
///   {"command": "reconstruct", "hflat": M, "i1": M, "i2": M}
///   {"command": "search-forms", "algebra": A, "target": G}
///   {"command": "correspond", "form": F, "maps": [3 names], "setting": "lie-b"|"prelie-omega"}
/// Never throws; errors become reports with exit code 2, 3 or 4.
Outcome run_request(const Bundle& bundle, const json& request);

/// Parses `bundle_text` first; a malformed bundle gives exit code 2.
Outcome run_request_text(const std::string& bundle_text, const json& request);

/// Renders a report as terminal text, with ANSI colors when `color` is set.
std::string render_text(const json& report, bool color);

}  // namespace hyperops
