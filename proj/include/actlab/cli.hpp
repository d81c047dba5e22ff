#pragma once

#include <string>
#include <vector>

namespace actlab {

/// Dispatches one CLI invocation (without the program name). Exit codes:
/// 0 success / property holds, 1 property fails or a counterexample was
/// found, 2 bounded-true or partial, 64 usage error, 65 parse or validation
/// error, 66 size guard.
int run(const std::vector<std::string>& args);

}  // namespace actlab
