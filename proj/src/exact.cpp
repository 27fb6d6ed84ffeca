#include "bgp/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

namespace bgp {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

struct Tables {
  int p = 0, n = 0;
  std::uint32_t full = 0;
  std::vector<std::uint32_t> need;      // sold local -> mask of its bought side
  std::vector<std::uint32_t> sold_adj;  // bought local -> mask of adjacent sold
  std::vector<Weight> step;             // per vertex: cost, or -gain
  std::vector<Weight> dp, pc;
  std::uint64_t states = 0;

  explicit Tables(const Instance& inst) {
    p = inst.bought_count();
    n = inst.vertex_count();
    full = n == 0 ? 0 : (n == 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << n) - 1);
    need.assign(inst.sold_count(), 0);
    sold_adj.assign(p, 0);
    for (int s = 0; s < inst.sold_count(); ++s)
      for (int b : inst.sold_nbrs(s)) {
        need[s] |= std::uint32_t(1) << b;
        sold_adj[b] |= std::uint32_t(1) << inst.sold_global(s);
      }
    step.resize(n);
    for (int b = 0; b < p; ++b) step[b] = inst.cost(b);
    for (int s = 0; s < inst.sold_count(); ++s)
      step[inst.sold_global(s)] = -inst.gain(s);
    dp.assign(std::size_t(1) << n, kInf);
    pc.assign(std::size_t(1) << n, 0);
    dp[0] = 0;
  }

  bool closed(std::uint32_t mask) const {
    std::uint32_t sold_bits = mask >> p;
    while (sold_bits) {
      int s = std::countr_zero(sold_bits);
      sold_bits &= sold_bits - 1;
      if (need[s] & ~mask) return false;
    }
    return true;
  }

  bool removable(std::uint32_t mask, int v) const {
    return v >= p || (sold_adj[v] & mask) == 0;
  }

  void fill_one(std::uint32_t mask) {
    pc[mask] = pc[mask & (mask - 1)] + step[std::countr_zero(mask)];
    if (!closed(mask)) return;
    ++states;
    Weight best = kInf;
    std::uint32_t rest = mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (removable(mask, v)) best = std::min(best, dp[mask ^ (std::uint32_t(1) << v)]);
    }
    dp[mask] = std::max(pc[mask], best);
  }

  void fill(bool layered) {
    ++states;  // the empty subset
    if (n == 0) return;
    if (!layered) {
      for (std::uint32_t mask = 1;; ++mask) {
        fill_one(mask);
        if (mask == full) break;
      }
      return;
    }
    for (int k = 1; k <= n; ++k) {
      std::uint32_t mask = (std::uint32_t(1) << k) - 1;
      while (true) {
        fill_one(mask);
        // Gosper's hack; stops once the next mask would leave the universe
        std::uint32_t c = mask & -mask, r = mask + c;
        std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
        if (next > full) break;
        mask = next;
      }
    }
  }

  Ordering backtrack() const {
    Ordering ord;
    std::uint32_t cur = full;
    while (cur) {
      int pick = -1;
      Weight pick_dp = kInf;
      std::uint32_t rest = cur;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (!removable(cur, v)) continue;
        Weight cand = dp[cur ^ (std::uint32_t(1) << v)];
        if (cand < pick_dp) {
          pick_dp = cand;
          pick = v;
        }
      }
      ord.seq.push_back(pick);
      cur ^= std::uint32_t(1) << pick;
    }
    std::reverse(ord.seq.begin(), ord.seq.end());
    return ord;
  }
};

void check_size(const Instance& inst, int limit) {
  int n = inst.vertex_count();
  if (n <= limit) return;
  double mib = double(16) * std::ldexp(1.0, n) / (1024.0 * 1024.0);
  throw UnknownResult("exhaustive table for " + std::to_string(n) +
                      " vertices needs about " + std::to_string(std::llround(mib)) +
                      " MiB; limit is " + std::to_string(limit) +
                      " vertices (BGP_EXACT_LIMIT raises it)");
}

}  // namespace

int default_exact_limit() {
  int limit = 26;
  if (const char* env = std::getenv("BGP_EXACT_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0') limit = int(std::clamp(v, 0L, 30L));
  }
  return limit;
}

SolveReport exact_budget(const Instance& inst, const ExactOptions& opt) {
  check_size(inst, opt.size_limit);
  auto t0 = std::chrono::steady_clock::now();
  Tables t(inst);
  t.fill(opt.layered);
  SolveReport rep;
  rep.budget = t.dp[t.full];
  rep.witness = t.backtrack();
  rep.algorithm = "exact-dp";
  rep.states = t.states;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return rep;
}

std::uint64_t exact_table_digest(const Instance& inst, bool layered) {
  check_size(inst, default_exact_limit());
  Tables t(inst);
  t.fill(layered);
  std::uint64_t h = 1469598103934665603ull;
  for (Weight w : t.dp) {
    h ^= std::uint64_t(w);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace bgp
