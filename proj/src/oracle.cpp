#include "bgp/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace bgp {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

struct Dfs {
  const Instance& inst;
  const OracleOptions& opt;
  int p, q, n;
  std::vector<std::uint32_t> need;  // per sold: mask of bought requirements
  std::uint32_t all_mask, block_mask = 0;
  std::vector<int> cur_order, best_order;
  Weight best = kInf;       // strict upper bound the search tries to beat
  Weight accept_cap = kInf; // feasibility mode: peaks above this are dead
  bool stop_at_first = false;
  bool found = false;
  std::uint64_t nodes = 0;

  Dfs(const Instance& i, const OracleOptions& o) : inst(i), opt(o) {
    p = inst.bought_count();
    q = inst.sold_count();
    n = p + q;
    if (n > opt.size_limit)
      throw UnknownResult("instance too large for exhaustive search (" +
                          std::to_string(n) + " vertices, limit " +
                          std::to_string(opt.size_limit) + ")");
    need.resize(q, 0);
    for (int s = 0; s < q; ++s)
      for (int b : inst.sold_nbrs(s)) need[s] |= std::uint32_t(1) << b;
    all_mask = n == 32 ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);
    if (opt.first_block) {
      for (int g : *opt.first_block) {
        if (g < 0 || g >= n)
          throw std::invalid_argument("restriction names an unknown vertex");
        block_mask |= std::uint32_t(1) << g;
      }
    }
    cur_order.reserve(n);
  }

  bool in_block_phase(std::uint32_t done) const {
    return block_mask && (done & block_mask) != block_mask;
  }

  // -1 when no sold vertex is currently placeable
  int first_available_sold(std::uint32_t done, std::uint32_t allowed) const {
    for (int s = 0; s < q; ++s) {
      std::uint32_t bit = std::uint32_t(1) << (p + s);
      if (done & bit) continue;
      if (!(allowed & bit)) continue;
      if ((need[s] & ~done) == 0) return s;
    }
    return -1;
  }

  void place(std::uint32_t done, int g, Weight run, Weight peak) {
    Weight nrun = run + (inst.is_sold_global(g)
                             ? -inst.gain(inst.sold_local(g))
                             : inst.cost(g));
    cur_order.push_back(g);
    go(done | (std::uint32_t(1) << g), nrun, std::max(peak, nrun));
    cur_order.pop_back();
  }

  void go(std::uint32_t done, Weight run, Weight peak) {
    if (stop_at_first && found) return;
    ++nodes;
    if (peak > accept_cap) return;
    if (opt.branch_cut && peak >= best) return;
    if (done == all_mask) {
      if (peak < best || (!found && peak <= accept_cap)) {
        best = std::min(best, peak);
        best_order = cur_order;
        found = true;
      }
      return;
    }
    std::uint32_t allowed = ~done & all_mask;
    if (in_block_phase(done)) allowed &= block_mask;
    if (!allowed) return;  // over-restricted: no continuation

    if (opt.greedy_sell) {
      int s = first_available_sold(done, allowed);
      if (s >= 0) {
        place(done, p + s, run, peak);
        return;
      }
      for (int b = 0; b < p; ++b)
        if (allowed & (std::uint32_t(1) << b)) place(done, b, run, peak);
      return;
    }
    for (int b = 0; b < p; ++b)
      if (allowed & (std::uint32_t(1) << b)) place(done, b, run, peak);
    for (int s = 0; s < q; ++s) {
      std::uint32_t bit = std::uint32_t(1) << (p + s);
      if ((allowed & bit) && (need[s] & ~done) == 0) place(done, p + s, run, peak);
    }
  }
};

}  // namespace

SolveReport brute_force_budget(const Instance& inst, const OracleOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  Dfs dfs(inst, opt);
  dfs.go(0, 0, 0);
  if (!dfs.found)
    throw std::invalid_argument("restriction admits no valid ordering");
  SolveReport rep;
  rep.budget = dfs.best;
  rep.witness.seq = dfs.best_order;
  rep.algorithm = "oracle";
  rep.states = dfs.nodes;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return rep;
}

bool brute_force_feasible(const Instance& inst, Weight k,
                          const OracleOptions& opt) {
  if (k < 0) return false;
  Dfs dfs(inst, opt);
  dfs.accept_cap = k;
  dfs.stop_at_first = true;
  dfs.go(0, 0, 0);
  return dfs.found;
}

}  // namespace bgp
