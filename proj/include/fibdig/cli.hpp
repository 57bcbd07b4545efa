#pragma once

#include <ostream>
#include <span>
#include <string>

namespace fibdig {

inline constexpr const char* kToolName = "fibdig";
inline constexpr const char* kToolVersion = "1.0.0";

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapExceeded = 3;
}  // namespace exit_code

/// Runs one command line (without the program name). Normal output goes to
/// `out` unless -o names a file; diagnostics go to `err`.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fibdig
