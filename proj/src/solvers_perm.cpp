#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "bgp/recognition.hpp"
#include "bgp/structure.hpp"
#include "engine_util.hpp"

namespace bgp {
namespace {

using detail::ViewKey;
using detail::ViewKeyHash;

// Budget engine for instances carrying a verified min-max bought order:
// drain affordable positive minimal sets, then try every prime set as the
// head of the schedule and recurse on what its closure leaves behind.
//
// The order is what keeps this polynomial. Sold neighbourhoods start out
// consecutive in it, and every removal the engine performs (a bought
// interval together with the sold vertices it captures) keeps the
// surviving neighbourhoods consecutive and nested sets ending together.
// Under those two properties a minimal positive set can never split
// across a gap, so the only candidates worth enumerating are the
// O(p^2) intervals of the surviving order.
class PrimeEngine {
 public:
  PrimeEngine(const Instance& top, const MinMaxOrdering& mm)
      : top_(top),
        ctx_(top,
             [](const Instance&) -> Weight {
               throw std::logic_error("budget callback unused");
             }),
        pos_(top.bought_count()) {
    for (int r = 0; r < top.bought_count(); ++r)
      pos_[mm.bought_order[r]] = r;
  }

  struct Value {
    Weight bg = 0;
    Strategy strat;
  };

  GraphView full() const {
    return {Bits::full(top_.bought_count()), Bits::full(top_.sold_count())};
  }

  const Value& value(const GraphView& v);
  std::optional<Strategy> feasible(GraphView v, Weight k);
  std::uint64_t steps() const { return steps_; }

 private:
  struct PosInterval {
    Bits set, ns;
    Weight surplus = 0;
  };
  struct Head {
    Bits members, covered;
    Strategy::Block block;
  };

  std::vector<PosInterval> pos_min_intervals(const GraphView& v, Weight limit,
                                             bool include_whole);
  Head closure_head(const GraphView& v, const Bits& seed, Weight k);

  const Instance& top_;
  StructureCtx ctx_;
  std::vector<int> pos_;  // bought index -> rank in the min-max order
  std::uint64_t steps_ = 0;
  std::unordered_map<ViewKey, Value, ViewKeyHash> vals_;
};

// All positive minimal subsets of the view, each with the sold set it
// captures, filtered down to those solvable within `limit`. Enumeration
// walks the intervals of the surviving min-max order; the shortest
// positive interval at each start already covers every minimal set, since
// a longer positive interval from the same start strictly contains it.
// The whole view shows up as its own candidate only on request: drain
// callers must skip it (processing the entire view is the head search's
// job, and pricing it here would ask for the value being computed).
std::vector<PrimeEngine::PosInterval> PrimeEngine::pos_min_intervals(
    const GraphView& v, Weight limit, bool include_whole) {
  std::vector<int> seq = v.bought.indices();
  std::sort(seq.begin(), seq.end(),
            [&](int a, int b) { return pos_[a] < pos_[b]; });
  const int p = static_cast<int>(seq.size());

  std::vector<std::pair<int, Bits>> hoods;
  v.sold.for_each(
      [&](int s) { hoods.emplace_back(s, detail::nbr_in(top_, v, s)); });

  struct Raw {
    int i, j;
    PosInterval cand;
  };
  std::vector<Raw> raw;
  for (int i = 0; i < p; ++i) {
    Bits mask(top_.bought_count());
    Weight cost = 0;
    for (int j = i; j < p; ++j) {
      ++steps_;
      mask.set(seq[j]);
      cost += top_.cost(seq[j]);
      Bits ns(top_.sold_count());
      Weight gain = 0;
      for (const auto& [s, hood] : hoods)
        if (hood.subset_of(mask)) {
          ns.set(s);
          gain += top_.gain(s);
        }
      if (gain > cost) {
        if (include_whole || mask != v.bought || ns != v.sold)
          raw.push_back({i, j, {mask, ns, gain - cost}});
        break;
      }
    }
  }

  std::vector<PosInterval> out;
  for (const Raw& a : raw) {
    bool minimal = true;
    for (const Raw& b : raw)
      if (b.i > a.i && b.j <= a.j) minimal = false;
    if (minimal && value(GraphView{a.cand.set, a.cand.ns}).bg <= limit)
      out.push_back(a.cand);
  }
  std::sort(out.begin(), out.end(), [](const PosInterval& a,
                                       const PosInterval& b) {
    return lex_set_less(a.set, b.set);
  });
  return out;
}

// Closure of a prime set, realized as one ordered chunk: the seed bought
// whole (its sold vertices all need exactly the seed), then each absorbed
// positive minimal set through its own solved sub-strategy. Absorption
// keeps going while some positive minimal set of the remainder fits the
// running residual, taking the lexicographically first fit each round.
PrimeEngine::Head PrimeEngine::closure_head(const GraphView& v,
                                            const Bits& seed, Weight k) {
  Bits members = seed;
  Bits covered = ctx_.n_star(v, members);
  std::vector<int> order = seed.indices();
  covered.for_each([&](int s) { order.push_back(top_.sold_global(s)); });
  Weight resid = k - ctx_.set_cost(members) + ctx_.set_gain(covered);
  for (;;) {
    ++steps_;
    GraphView sub{minus(v.bought, members), minus(v.sold, covered)};
    if (sub.bought.none()) break;
    auto cands = pos_min_intervals(sub, resid, true);
    if (cands.empty()) break;
    const PosInterval& step = cands.front();
    const Value& sv = value(GraphView{step.set, step.ns});
    for (int g : sv.strat.flat()) order.push_back(g);
    members |= step.set;
    covered |= step.ns;
    resid = k - ctx_.set_cost(members) + ctx_.set_gain(covered);
  }
  return {members, covered, make_block(top_, std::move(order))};
}

std::optional<Strategy> PrimeEngine::feasible(GraphView v, Weight k) {
  ++steps_;
  Strategy out;
  if (auto pre = detail::strip_free_sells(top_, v)) {
    k -= pre->net;
    out.blocks.push_back(std::move(*pre));
  }
  for (;;) {
    ++steps_;
    if (v.bought.none() && v.sold.none()) return out;
    if (v.sold.none() || detail::is_biclique_view(top_, v)) {
      if (detail::view_cost(top_, v.bought) > k) return std::nullopt;
      out.blocks.push_back(make_block(top_, detail::buy_sell_order(top_, v)));
      return out;
    }
    auto pms = pos_min_intervals(v, k, false);
    const PosInterval* pick = nullptr;
    for (const PosInterval& c : pms)
      if (!pick || c.surplus > pick->surplus ||
          (c.surplus == pick->surplus && lex_set_less(c.set, pick->set)))
        pick = &c;
    if (!pick) break;
    const Value& dval = value(GraphView{pick->set, pick->ns});
    Strategy::Block blk = detail::as_single_block(top_, dval.strat);
    if (blk.peak > k) return std::nullopt;  // filter said it fits
    k -= blk.net;
    v.bought.subtract(pick->set);
    v.sold.subtract(pick->ns);
    out.blocks.push_back(std::move(blk));
  }
  // no affordable positive set is left aside from possibly the whole view;
  // some prime set must head the schedule
  for (const Bits& seed : ctx_.prime_sets(v)) {
    if (ctx_.set_cost(seed) > k) continue;
    Head head = closure_head(v, seed, k);
    if (head.block.peak > k) continue;
    GraphView rest{minus(v.bought, head.members),
                   minus(v.sold, head.covered)};
    Weight k2 = k - head.block.net;
    std::optional<Strategy> merged{Strategy{}};
    for (const GraphView& part : detail::view_components(top_, rest)) {
      const Value& pv = value(part);
      if (merged->blocks.empty())
        merged = pv.strat;
      else
        merged = combine(*merged, pv.strat, k2);
      if (!merged) break;
    }
    if (!merged || merged->peak() > k2) continue;
    out.blocks.push_back(std::move(head.block));
    out.append(std::move(*merged));
    return out;
  }
  return std::nullopt;
}

const PrimeEngine::Value& PrimeEngine::value(const GraphView& v) {
  ViewKey key{v.bought, v.sold};
  auto it = vals_.find(key);
  if (it != vals_.end()) return it->second;
  ++steps_;
  Weight lo = std::max<Weight>(0, detail::view_cost(top_, v.bought) -
                                      detail::view_gain(top_, v.sold));
  Weight hi = detail::view_cost(top_, v.bought);
  while (lo < hi) {
    Weight mid = lo + (hi - lo) / 2;
    if (feasible(v, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto strat = feasible(v, lo);
  if (!strat) throw UnknownResult("budget search lost its witness");
  Value val{lo, std::move(*strat)};
  assert(val.strat.peak() == val.bg);
  return vals_.emplace(std::move(key), std::move(val)).first->second;
}

}  // namespace

SolveReport solve_permutation(const Instance& inst, const MinMaxOrdering& mm) {
  Stopwatch sw;
  if (!is_min_max_ordering(inst, mm))
    throw ClassMismatch("ordering is not min-max for the instance");
  PrimeEngine eng(inst, mm);
  const auto& val = eng.value(eng.full());
  return finish_report(inst, val.strat.flat(), "perm", eng.steps(), sw);
}

SolveReport solve_permutation(const Instance& inst) {
  auto mm = find_min_max_ordering(inst);
  if (!mm) throw ClassMismatch("no min-max ordering found");
  return solve_permutation(inst, *mm);
}

}  // namespace bgp
