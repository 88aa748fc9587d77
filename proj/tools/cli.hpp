#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cherrylab::cli {

// Exit codes.
inline constexpr int kOk = 0;            // success or claim certified
inline constexpr int kRefuted = 1;       // claim refuted or embedding failed
inline constexpr int kInconclusive = 2;  // search budget exhausted
inline constexpr int kUsage = 3;         // usage or I/O error

// Runs one command line (args excludes the program name). Reports go to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cherrylab::cli
