#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bgp/instance.hpp"
#include "bgp/recognition.hpp"
#include "bgp/report.hpp"

namespace bgp {

// Closed-form and greedy strategies for the easy graph shapes. Each checks
// its own precondition and throws ClassMismatch when the instance is outside
// the class it handles.

// Complete bipartite: buy everything, then sell everything.
SolveReport solve_biclique(const Instance& inst);

// Disjoint union of bicliques, scheduled component by component.
SolveReport solve_biclique_union(const Instance& inst);

// Unit-weight path or cycle; the answer is always 0, 1, or 2.
SolveReport solve_path_cycle(const Instance& inst);

// Unit-weight forest: satisfy sold leaves greedily, open up internal sold
// vertices cheapest-first, leave never-needed bought vertices for the end.
SolveReport solve_forest_unit(const Instance& inst);

// A schedule cut into fully ordered chunks. A block's `peak` is its own
// worst running total (empty prefix included, so never negative) and `net`
// the position change after running it. Blocks over disjoint vertex sets
// may be interleaved; the order inside a block is fixed.
struct Strategy {
  struct Block {
    std::vector<int> order;  // global vertex indices
    Weight peak = 0;
    Weight net = 0;
  };
  std::vector<Block> blocks;

  Weight peak() const;
  Weight net() const;
  std::vector<int> flat() const;
  void append(Strategy tail);
};

// Evaluates a chunk's running totals against the instance.
Strategy::Block make_block(const Instance& inst, std::vector<int> order);

// Interleaves two block sequences over disjoint vertex sets within budget k,
// preserving each sequence's internal order. Exhaustive over block
// boundaries (block nets commute, so a cell's running total is
// position-free); ties prefer pulling from `a`.
std::optional<Strategy> combine(const Strategy& a, const Strategy& b,
                                Weight k);

// Budget-k feasibility for instances certified by a decomposition tree.
// Returns a witness strategy or nothing. Throws std::invalid_argument when
// the tree does not certify the instance, UnknownResult when the bounded
// structural search cannot settle a sub-question.
std::optional<Strategy> feasible_trivially_perfect(const Instance& inst,
                                                   const DecompTree& tree,
                                                   Weight k);
std::optional<Strategy> feasible_co_bipartite(const Instance& inst,
                                              const DecompTree& tree,
                                              Weight k);

// Optimum by bisection over the feasibility procedures. Throw ClassMismatch
// when the instance does not decompose.
SolveReport solve_trivially_perfect(const Instance& inst);
SolveReport solve_co_bipartite(const Instance& inst);

// Specialization of the prime-set search to instances carrying a verified
// min-max bought order; the order certifies the class, the search drains
// positive minimal sets and absorbs prime closures. The one-argument form
// finds the order itself and throws ClassMismatch when none exists.
SolveReport solve_permutation(const Instance& inst);
SolveReport solve_permutation(const Instance& inst, const MinMaxOrdering& mm);

struct GeneralOptions {
  std::uint64_t max_work = 2000000;  // budget-backend calls before giving up
  int max_depth = 48;  // recursion depth before sub-solves fall back to the
                       // exhaustive table
};

// Prime-set elimination for arbitrary instances: drain affordable positive
// minimal sets, otherwise process the closure of the first prime set the
// precedence ranking lets run. Exact when it answers; throws UnknownResult
// when the work budget runs out or a bounded search gives up.
std::optional<Strategy> general_budget(const Instance& inst, Weight k,
                                       const GeneralOptions& opt = {});
SolveReport solve_general(const Instance& inst,
                          const GeneralOptions& opt = {});

// Routing front end. `algorithm` is one of: auto, oracle, exact, simple,
// tp, cobip, perm, general. "auto" normalizes isolated vertices away, then
// runs the cheapest solver whose class test passes, falling through on
// bounded-search refusals; class-specific names throw ClassMismatch when
// the instance is outside the class.
SolveReport solve(const Instance& inst, const std::string& algorithm = "auto");

}  // namespace bgp
