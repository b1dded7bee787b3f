#pragma once

#include <string>
#include <vector>

namespace opradius {

/// Entry point behind the opradius binary; `args` excludes the program name.
/// Exit codes: 0 success (verify/check: no violations), 2 violations found,
/// 1 usage or input errors.
int run_cli(std::vector<std::string> args);

} // namespace opradius
