#pragma once

#include "bgp/instance.hpp"
#include "bgp/report.hpp"

namespace bgp {

// Default table-size cutoff (vertex count). Overridable via the
// BGP_EXACT_LIMIT environment variable; clamped to [0, 30].
int default_exact_limit();

struct ExactOptions {
  int size_limit = default_exact_limit();
  // Fill the table grouped by subset size instead of in numeric mask
  // order. Both schedules must produce bit-identical tables.
  bool layered = false;
};

// Exhaustive dynamic program over closed vertex subsets. Exact for every
// instance, exponential space: two 8-byte entries per subset. Throws
// UnknownResult (with a memory estimate) above the size limit.
SolveReport exact_budget(const Instance& inst, const ExactOptions& opt = {});

// Digest of the full table, for schedule-equivalence checks.
std::uint64_t exact_table_digest(const Instance& inst, bool layered);

}  // namespace bgp
