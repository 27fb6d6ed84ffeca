#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "bgp/exact.hpp"
#include "bgp/structure.hpp"
#include "engine_util.hpp"

namespace bgp {
namespace {

thread_local int g_sub_depth = 0;

struct DepthGuard {
  DepthGuard() { ++g_sub_depth; }
  ~DepthGuard() { --g_sub_depth; }
};

// Prime-set elimination for arbitrary instances. Sub-questions go back
// through the routing front end, so recognizable fragments are solved by
// their own class procedures; past the depth limit they fall back to the
// exhaustive table.
class GeneralEngine {
 public:
  GeneralEngine(const Instance& top, const GeneralOptions& opt)
      : top_(top),
        opt_(opt),
        ctx_(top, [this](const Instance& sub) { return sub_budget(sub); }) {}

  GraphView full() const {
    return {Bits::full(top_.bought_count()), Bits::full(top_.sold_count())};
  }

  std::optional<Strategy> feasible(GraphView v, Weight k);
  std::uint64_t work() const { return steps_ + ctx_.budget_calls(); }

 private:
  void charge() {
    ++steps_;
    if (steps_ + ctx_.budget_calls() > opt_.max_work)
      throw UnknownResult("work budget exhausted");
  }

  SolveReport sub_solve(const Instance& sub);
  Weight sub_budget(const Instance& sub) { return sub_solve(sub).budget; }
  // solved order of the sub-instance on (bought, sold), as one block
  Strategy::Block set_block(const Bits& bought, const Bits& sold);
  Strategy::Block closure_block(const GraphView& v, const Bits& seed,
                                const ClosureResult& cl);

  const Instance& top_;
  GeneralOptions opt_;
  StructureCtx ctx_;
  std::uint64_t steps_ = 0;
};

SolveReport GeneralEngine::sub_solve(const Instance& sub) {
  charge();
  if (g_sub_depth >= opt_.max_depth) return exact_budget(sub);
  if (sub.vertex_count() == top_.vertex_count()) {
    // a set query can cover the whole instance; recursing into the router
    // would come straight back here
    GraphView v = detail::view_of_sub(top_, sub);
    if (v.bought.count() == top_.bought_count() &&
        v.sold.count() == top_.sold_count())
      return exact_budget(sub);
  }
  DepthGuard guard;
  return solve(sub, "auto");
}

Strategy::Block GeneralEngine::set_block(const Bits& bought,
                                         const Bits& sold) {
  SubInstance si = induced_instance(top_, bought, sold);
  SolveReport rep = sub_solve(si.inst);
  return make_block(top_, lift_order(si, top_, rep.witness.seq));
}

Strategy::Block GeneralEngine::closure_block(const GraphView& v,
                                             const Bits& seed,
                                             const ClosureResult& cl) {
  std::vector<int> order = seed.indices();
  Bits members = seed;
  Bits covered = ctx_.n_star(v, members);
  covered.for_each([&](int s) { order.push_back(top_.sold_global(s)); });
  for (const Bits& step : cl.steps) {
    GraphView rem{minus(v.bought, members), minus(v.sold, covered)};
    Bits enabled = ctx_.n_star(rem, step);
    SubInstance si = induced_instance(top_, step, enabled);
    SolveReport rep = sub_solve(si.inst);
    for (int g : lift_order(si, top_, rep.witness.seq)) order.push_back(g);
    members |= step;
    covered |= enabled;
  }
  assert(members == cl.members);
  return make_block(top_, std::move(order));
}

std::optional<Strategy> GeneralEngine::feasible(GraphView v, Weight k) {
  Strategy out;
  if (auto pre = detail::strip_free_sells(top_, v)) {
    k -= pre->net;
    out.blocks.push_back(std::move(*pre));
  }
  for (;;) {
    charge();
    if (v.bought.none() && v.sold.none()) return out;
    if (v.sold.none() || detail::is_biclique_view(top_, v)) {
      if (detail::view_cost(top_, v.bought) > k) return std::nullopt;
      out.blocks.push_back(make_block(top_, detail::buy_sell_order(top_, v)));
      return out;
    }
    PosMinResult pm = ctx_.positive_minimal_all(v, k);
    if (!pm.complete && pm.sets.empty())
      throw UnknownResult("positive-set search gave up");
    const Bits* pick = nullptr;
    Bits pick_ns;
    Weight best_surplus = 0;
    for (const Bits& c : pm.sets) {
      Bits ns = ctx_.n_star(v, c);
      if (c == v.bought && ns == v.sold) continue;  // head case realizes it
      Weight sur = ctx_.set_gain(ns) - ctx_.set_cost(c);
      if (!pick || sur > best_surplus ||
          (sur == best_surplus && lex_set_less(c, *pick))) {
        pick = &c;
        pick_ns = ns;
        best_surplus = sur;
      }
    }
    if (pick) {
      Strategy::Block blk = set_block(*pick, pick_ns);
      if (blk.peak > k) return std::nullopt;  // filter said it fits
      k -= blk.net;
      v.bought.subtract(*pick);
      v.sold.subtract(pick_ns);
      out.blocks.push_back(std::move(blk));
      continue;
    }
    if (pm.complete && pm.positives_exist && pm.sets.empty())
      return std::nullopt;  // positive sets exist but none is affordable
    // head selection: the first prime set the precedence ranking lets run
    std::vector<Bits> primes = ctx_.prime_sets(v);
    const Bits* chosen = nullptr;
    for (const Bits& cand : primes) {
      bool blocked = false;
      for (const Bits& other : primes) {
        if (&other == &cand || other == cand) continue;
        if (ctx_.is_after(v, cand, other, k)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        chosen = &cand;
        break;
      }
    }
    if (!chosen || ctx_.set_cost(*chosen) > k) return std::nullopt;
    ClosureResult cl = ctx_.closure(v, *chosen, k);
    Strategy::Block head = closure_block(v, *chosen, cl);
    if (head.peak > k) return std::nullopt;
    Bits covered = ctx_.n_star(v, cl.members);
    k -= head.net;
    v.bought.subtract(cl.members);
    v.sold.subtract(covered);
    out.blocks.push_back(std::move(head));
  }
}

}  // namespace

std::optional<Strategy> general_budget(const Instance& inst, Weight k,
                                       const GeneralOptions& opt) {
  if (k < 0) return std::nullopt;
  GeneralEngine eng(inst, opt);
  return eng.feasible(eng.full(), k);
}

SolveReport solve_general(const Instance& inst, const GeneralOptions& opt) {
  Stopwatch sw;
  GeneralEngine eng(inst, opt);
  GraphView full = eng.full();
  Weight lo = std::max<Weight>(0, inst.total_cost() - inst.total_gain());
  Weight hi = inst.total_cost();
  while (lo < hi) {
    Weight mid = lo + (hi - lo) / 2;
    if (eng.feasible(full, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto strat = eng.feasible(full, lo);
  if (!strat) throw UnknownResult("budget search lost its witness");
  return finish_report(inst, strat->flat(), "general", eng.work(), sw);
}

}  // namespace bgp
