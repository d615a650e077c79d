#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mct::cli {

// Exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;

// Runs one command line (without the program name). Results go to out as JSON
// (or a text report for `verify all`); errors go to err as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mct::cli
