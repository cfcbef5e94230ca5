#pragma once

#include <iosfwd>

namespace bilat::tools {

// Runs the bundled example corpus and the invariant suites at small sizes,
// printing one pass/fail line per check. Returns the number of failures.
int run_selftest(std::ostream& os);

}  // namespace bilat::tools
