#pragma once

#include <optional>
#include <vector>

#include "bgp/instance.hpp"
#include "bgp/report.hpp"

namespace bgp {

struct OracleOptions {
  int size_limit = 14;
  // Sellable sold vertices are taken immediately; appending one never
  // raises any prefix, so this cannot change the optimum.
  bool greedy_sell = true;
  // Abandon branches whose running peak already matches the incumbent.
  bool branch_cut = true;
  // When set, these global vertex indices must fill the first positions
  // of the ordering (in the best internal order the search finds).
  std::optional<std::vector<int>> first_block;
};

// Exhaustive search over valid orderings. Ground truth for small instances.
SolveReport brute_force_budget(const Instance& inst,
                               const OracleOptions& opt = {});

bool brute_force_feasible(const Instance& inst, Weight k,
                          const OracleOptions& opt = {});

}  // namespace bgp
