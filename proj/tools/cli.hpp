#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ffr::cli {

enum ExitCode : int {
  kOk = 0,            // a verdict was computed, positive or negative
  kInternal = 1,      // anything not covered below
  kSchemaError = 2,   // malformed JSON, bad flags, unparsable polynomial
  kRingMismatch = 3,  // arity/ring mismatch or a violated precondition
  kVerification = 4,  // a produced certificate failed its re-check
};

// Runs one job. `args` excludes the program name. The report goes to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace ffr::cli
