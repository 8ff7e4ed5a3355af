#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tqft::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

// Runs one invocation; args excludes the program name. The report goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

} // namespace tqft::cli
