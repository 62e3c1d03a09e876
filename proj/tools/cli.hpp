#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gft::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit status: 0 verdict holds or computation succeeded, 1 verdict
/// violated, 2 usage or evaluation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gft::cli
