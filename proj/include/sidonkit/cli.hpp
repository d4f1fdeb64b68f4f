#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sidonkit {

// Exit codes returned by dispatch.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

// Run one command line (without the program name). Reports go to `out`
// unless --output names a file; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sidonkit
