// Command-line front end. Subcommands: gen, oracle, verify, crosscheck,
// gould, eval.
//
// Exit codes: 0 success or pass, 1 verification/crosscheck failure,
// 2 usage or parse error, 3 uncertified result.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace complement::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUncertified = 3;

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace complement::cli
