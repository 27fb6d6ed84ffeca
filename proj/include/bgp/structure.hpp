#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "bgp/bits.hpp"
#include "bgp/instance.hpp"
#include "bgp/report.hpp"

namespace bgp {

// Budget backend for sub-instances. Injected so the same machinery can run
// against the brute-force oracle in tests and the real solvers in production.
using BudgetFn = std::function<Weight(const Instance&)>;

// A live subgraph of the top instance: masks over its bought/sold universes.
// Neighborhoods are implicitly restricted to the view.
struct GraphView {
  Bits bought, sold;
};

struct ClosureResult {
  Bits members;             // the closed bought set, seed included
  std::vector<Bits> steps;  // absorbed sets, in absorption order
  Weight residual;          // K - cost(members) + gain(n_star(members))
};

struct PosMinResult {
  std::vector<Bits> sets;  // the positive minimal sets w.r.t. the given budget
  bool complete;           // false when the bounded search gave up
  bool positives_exist;    // meaningful only when complete
};

// Combinatorial machinery shared by the polynomial solvers and the general
// algorithm. Holds per-session memo tables; single-threaded use.
class StructureCtx {
 public:
  StructureCtx(const Instance& top, BudgetFn budget);

  const Instance& top() const { return *top_; }
  GraphView full_view() const;

  // Neighborhood of sold s inside the view's bought side.
  Bits nbr_mask(const GraphView& v, int s) const;
  // All live sold vertices whose entire live neighborhood lies in I.
  Bits n_star(const GraphView& v, const Bits& I) const;

  Weight set_cost(const Bits& bought_set) const;
  Weight set_gain(const Bits& sold_set) const;

  bool is_prime(const GraphView& v, const Bits& I) const;
  // Distinct inclusion-minimal nonempty live neighborhoods, lex-sorted.
  std::vector<Bits> prime_sets(const GraphView& v) const;

  bool is_positive(const GraphView& v, const Bits& I) const;

  // Minimum budget of H[I  n_star(I)] induced by the view; memoized across
  // the whole session (keys are vertex masks, so results survive budget
  // sweeps and view changes).
  Weight bg_of(const GraphView& v, const Bits& I);
  // Same, for an explicit bought/sold pair. Sold neighborhoods are cut down
  // to the bought set, which models vertices bought in an earlier block.
  Weight pair_budget(const Bits& bought, const Bits& sold);

  // Every positive minimal set w.r.t. budget k. All such sets are unions of
  // sold neighborhoods, so the search enumerates those unions; beyond
  // kUnionExactBits distinct neighborhoods it degrades to unions of at most
  // kUnionBoundedParts parts and flags the result incomplete.
  PosMinResult positive_minimal_all(const GraphView& v, Weight k);

  // Selection rule: largest gain(n_star) - cost surplus, ties lex-first.
  // Throws UnknownResult when the bounded search found nothing.
  std::optional<Bits> find_positive_minimal(const GraphView& v, Weight k);

  ClosureResult closure(const GraphView& v, const Bits& I, Weight k);

  // Accumulated closures walked from J until closure(I) is covered.
  Bits superset_of(const GraphView& v, const Bits& J, const Bits& I, Weight k);

  // The ranking on prime sets: I cannot come before J under budget k.
  bool is_after(const GraphView& v, const Bits& I, const Bits& J, Weight k);

  std::uint64_t budget_calls() const { return budget_calls_; }

  static constexpr int kUnionExactBits = 20;
  static constexpr int kUnionBoundedParts = 4;
  static constexpr std::size_t kUnionCap = 400000;

 private:
  struct Hood {
    Bits mask;
    Weight gain;
  };
  // Distinct nonempty live neighborhoods with aggregated gains, lex-sorted;
  // iso_gain collects sold vertices with no live neighbor.
  std::vector<Hood> hoods(const GraphView& v, Weight* iso_gain) const;

  const Instance* top_;
  BudgetFn budget_;
  std::uint64_t budget_calls_ = 0;

  struct MaskPair {
    Bits a, b;
    bool operator==(const MaskPair& o) const { return a == o.a && b == o.b; }
  };
  struct MaskPairHash {
    std::size_t operator()(const MaskPair& p) const {
      return p.a.hash() * 1000003u ^ p.b.hash();
    }
  };
  std::unordered_map<MaskPair, Weight, MaskPairHash> bg_cache_;
};

}  // namespace bgp
