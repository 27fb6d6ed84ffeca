#pragma once

// Property suites for the ordering facts the solvers rely on. Shared between
// the unit tests and the acceptance runner.

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "bgp/oracle.hpp"
#include "bgp/structure.hpp"
#include "testutil.hpp"

namespace suites {

struct SuiteResult {
  int trials = 0;    // instances actually checked
  int vacuous = 0;   // instances where the property had nothing to say
  int failures = 0;  // counterexamples
};

inline bgp::BudgetFn oracle_backend() {
  return [](const bgp::Instance& i) { return bgp::brute_force_budget(i).budget; };
}

inline bgp::Instance random_no_isolated(std::mt19937_64& rng, int max_p,
                                        int max_q, bgp::Weight wmax) {
  std::uniform_int_distribution<int> pd(1, max_p), qd(1, max_q);
  for (;;) {
    bgp::Instance inst = random_instance(rng, pd(rng), qd(rng), 0.5, wmax);
    bool ok = true;
    for (int b = 0; ok && b < inst.bought_count(); ++b)
      if (inst.bought_nbrs(b).empty()) ok = false;
    for (int s = 0; ok && s < inst.sold_count(); ++s)
      if (inst.sold_nbrs(s).empty()) ok = false;
    if (ok) return inst;
  }
}

inline std::vector<int> block_of(const bgp::Instance& inst, const bgp::Bits& I,
                                 const bgp::Bits& ns) {
  std::vector<int> block;
  I.for_each([&](int b) { block.push_back(b); });
  ns.for_each([&](int s) { block.push_back(inst.sold_global(s)); });
  return block;
}

// Some optimal ordering opens with a prime set and everything it covers.
inline SuiteResult first_prime_suite(unsigned seed, int trials) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (int t = 0; t < trials; ++t) {
    bgp::Instance inst = random_no_isolated(rng, 5, 5, 3);
    bgp::Weight k = bgp::brute_force_budget(inst).budget;
    bgp::StructureCtx ctx(inst, oracle_backend());
    bgp::GraphView v = ctx.full_view();
    std::vector<bgp::Bits> primes = ctx.prime_sets(v);
    if (primes.empty()) {
      ++r.vacuous;
      continue;
    }
    bgp::Weight best = std::numeric_limits<bgp::Weight>::max();
    for (const bgp::Bits& p : primes) {
      bgp::OracleOptions opt;
      opt.first_block = block_of(inst, p, ctx.n_star(v, p));
      best = std::min(best, bgp::brute_force_budget(inst, opt).budget);
    }
    ++r.trials;
    if (best != k) ++r.failures;
  }
  return r;
}

// When a positive minimal set fits the optimum budget, opening with it and
// its covered sold vertices is still optimal.
inline SuiteResult minpos_suite(unsigned seed, int trials) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (int t = 0; t < trials; ++t) {
    bgp::Instance inst = random_no_isolated(rng, 5, 5, 3);
    bgp::Weight k = bgp::brute_force_budget(inst).budget;
    bgp::StructureCtx ctx(inst, oracle_backend());
    bgp::GraphView v = ctx.full_view();
    std::optional<bgp::Bits> sel = ctx.find_positive_minimal(v, k);
    if (!sel) {
      ++r.vacuous;
      continue;
    }
    bgp::OracleOptions opt;
    opt.first_block = block_of(inst, *sel, ctx.n_star(v, *sel));
    ++r.trials;
    if (bgp::brute_force_budget(inst, opt).budget != k) ++r.failures;
  }
  return r;
}

// A positive set over budget that meets a fitting non-positive set cannot be
// neutralized by it: their union stays positive whenever it fits the budget.
inline SuiteResult correctness_suite(unsigned seed, int instances) {
  std::mt19937_64 rng(seed);
  SuiteResult r;
  for (int t = 0; t < instances; ++t) {
    bgp::Instance inst = random_no_isolated(rng, 5, 5, 3);
    bgp::Weight k = bgp::brute_force_budget(inst).budget;
    bgp::StructureCtx ctx(inst, oracle_backend());
    bgp::GraphView v = ctx.full_view();
    const int p = inst.bought_count();
    const std::uint32_t all = (std::uint32_t(1) << p) - 1;
    std::vector<bgp::Bits> sets(all + 1, bgp::Bits(p));
    std::vector<char> pos(all + 1);
    std::vector<bgp::Weight> bgv(all + 1);
    for (std::uint32_t m = 1; m <= all; ++m) {
      for (int b = 0; b < p; ++b)
        if (m >> b & 1) sets[m].set(b);
      pos[m] = ctx.is_positive(v, sets[m]);
      bgv[m] = ctx.bg_of(v, sets[m]);
    }
    bool checked = false;
    for (std::uint32_t a = 1; a <= all; ++a) {
      if (!pos[a] || bgv[a] <= k) continue;
      for (std::uint32_t b = 1; b <= all; ++b) {
        if (pos[b] || bgv[b] > k) continue;
        if (!(a & b)) continue;
        if (bgv[a | b] > k) continue;
        checked = true;
        if (!pos[a | b]) ++r.failures;
      }
    }
    if (checked)
      ++r.trials;
    else
      ++r.vacuous;
  }
  return r;
}

}  // namespace suites
