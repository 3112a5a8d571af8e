#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "comsep/json_io.hpp"

namespace comsep::cli {

/// Exit codes: 0 affirmative or clean, 1 negative or counterexample found,
/// 2 input error.
enum ExitCode : int { ok = 0, negative = 1, input_error = 2 };

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Re-checks a single certificate object. Returns the reasons it was
/// rejected; empty means accepted.
std::vector<std::string> verify_certificate(const json& certificate);

/// Accepts a full --json report (its "certificates" array), an array of
/// certificates, or one certificate.
std::vector<std::string> verify_document(const json& document);

}  // namespace comsep::cli
