#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace entrobound::golden {

/// Run the paper-value regression suite described by the data file,
/// printing one PASS/FAIL line per check.  Returns 0 when every check
/// passes, 1 otherwise.  Output is byte-identical for a fixed seed.
int run_suite(const std::string& data_path, std::uint64_t seed,
              std::ostream& out);

}  // namespace entrobound::golden
