#include <algorithm>
#include <numeric>
#include <vector>

#include "bgp/solvers.hpp"
#include "solver_util.hpp"

namespace bgp {

namespace {

bool is_complete_pair(const Instance& inst, const Bits& bought,
                      const Bits& sold) {
  bool ok = true;
  sold.for_each([&](int s) {
    if (!bought.subset_of(inst.sold_nbr_mask(s)) ||
        !inst.sold_nbr_mask(s).subset_of(bought))
      ok = false;
  });
  return ok;
}

void require_unit(const Instance& inst, const char* who) {
  for (int b = 0; b < inst.bought_count(); ++b)
    if (inst.cost(b) != 1) throw ClassMismatch(std::string(who) + ": weights are not all 1");
  for (int s = 0; s < inst.sold_count(); ++s)
    if (inst.gain(s) != 1) throw ClassMismatch(std::string(who) + ": weights are not all 1");
}

// all bought then all sold, both in canonical order
std::vector<int> buy_all_sell_all(const Instance& inst, const Bits& bought,
                                  const Bits& sold) {
  std::vector<int> order;
  bought.for_each([&](int b) { order.push_back(b); });
  sold.for_each([&](int s) { order.push_back(inst.sold_global(s)); });
  return order;
}

}  // namespace

SolveReport solve_biclique(const Instance& inst) {
  Stopwatch sw;
  Bits all_b = Bits::full(inst.bought_count());
  Bits all_s = Bits::full(inst.sold_count());
  if (!is_complete_pair(inst, all_b, all_s))
    throw ClassMismatch("solve_biclique: some edge is missing");
  return finish_report(inst, buy_all_sell_all(inst, all_b, all_s), "biclique",
                       1, sw);
}

SolveReport solve_biclique_union(const Instance& inst) {
  Stopwatch sw;
  std::vector<SeqBlock> blocks;
  for (auto& [cb, cs] : components(inst)) {
    if (!is_complete_pair(inst, cb, cs))
      throw ClassMismatch("solve_biclique_union: a component is not complete");
    SeqBlock blk;
    blk.order = buy_all_sell_all(inst, cb, cs);
    Weight cost = 0, gain = 0;
    cb.for_each([&](int b) { cost += inst.cost(b); });
    cs.for_each([&](int s) { gain += inst.gain(s); });
    blk.peak = cost;
    blk.net = cost - gain;
    blocks.push_back(std::move(blk));
  }
  std::uint64_t states = blocks.size();
  schedule_blocks(blocks);
  std::vector<int> order;
  for (auto& blk : blocks)
    order.insert(order.end(), blk.order.begin(), blk.order.end());
  return finish_report(inst, order, "biclique-union", states, sw);
}

SolveReport solve_path_cycle(const Instance& inst) {
  Stopwatch sw;
  require_unit(inst, "solve_path_cycle");
  const int p = inst.bought_count(), n = p + inst.sold_count();
  if (n == 0) throw ClassMismatch("solve_path_cycle: empty instance");
  std::vector<std::vector<int>> adj(n);
  for (int s = 0; s < inst.sold_count(); ++s)
    for (int b : inst.sold_nbrs(s)) {
      adj[inst.sold_global(s)].push_back(b);
      adj[b].push_back(inst.sold_global(s));
    }
  auto comp = components(inst);
  if (comp.size() != 1)
    throw ClassMismatch("solve_path_cycle: graph is not connected");
  for (int g = 0; g < n; ++g)
    if (adj[g].size() > 2)
      throw ClassMismatch("solve_path_cycle: a vertex has degree above 2");

  std::vector<int> ends;
  for (int g = 0; g < n; ++g)
    if (adj[g].size() < 2) ends.push_back(g);

  // lay the vertices out along the path or around the cycle
  std::vector<int> line;
  int start;
  if (ends.empty()) {  // cycle; enter at the first bought vertex
    start = 0;
    if (inst.is_sold_global(start))
      throw ClassMismatch("solve_path_cycle: malformed cycle");
  } else if (ends.size() == 2 || n == 1) {
    start = ends[0];
    for (int e : ends)  // prefer opening at a sold endpoint
      if (inst.is_sold_global(e)) {
        start = e;
        break;
      }
  } else {
    throw ClassMismatch("solve_path_cycle: not a single path or cycle");
  }
  std::vector<char> used(n, 0);
  int cur = start, prev = -1;
  for (int step = 0; step < n; ++step) {
    line.push_back(cur);
    used[cur] = 1;
    int next = -1;
    for (int nb : adj[cur])
      if (nb != prev && !used[nb] && (next < 0 || nb < next)) next = nb;
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(line.size()) != n)
    throw ClassMismatch("solve_path_cycle: not a single path or cycle");

  std::vector<int> order;
  std::size_t i = 0;
  if (!inst.is_sold_global(line[0])) {
    order.push_back(line[0]);  // bought opener: cycle, or path with bought ends
    i = 1;
  }
  for (; i + 1 < line.size(); i += 2) {
    order.push_back(line[i + 1]);
    order.push_back(line[i]);
  }
  if (i < line.size()) order.push_back(line[i]);  // trailing sold vertex
  return finish_report(inst, order, "path-cycle", 1, sw);
}

SolveReport solve_forest_unit(const Instance& inst) {
  Stopwatch sw;
  require_unit(inst, "solve_forest_unit");
  const int p = inst.bought_count();
  auto comp = components(inst);
  int edge_total = inst.edge_count();
  int vert_total = p + inst.sold_count();
  if (edge_total != vert_total - static_cast<int>(comp.size()))
    throw ClassMismatch("solve_forest_unit: graph has a cycle");

  std::vector<SeqBlock> blocks;
  std::vector<char> bought_done(p, 0);
  for (auto& [cb, cs] : comp) {
    SeqBlock blk;
    auto unbought_degree = [&](int s) {
      int u = 0;
      for (int b : inst.sold_nbrs(s))
        if (!bought_done[b]) ++u;
      return u;
    };
    auto emit_sell = [&](int s) {
      for (int b : inst.sold_nbrs(s))
        if (!bought_done[b]) {
          bought_done[b] = 1;
          blk.order.push_back(b);
        }
      blk.order.push_back(inst.sold_global(s));
    };
    Bits alive = cs;
    while (alive.any()) {
      // satisfy cheap sold vertices while they last
      for (bool drained = false; !drained;) {
        drained = true;
        for (int pass = 0; pass <= 1 && drained; ++pass) {
          int found = -1;
          alive.for_each([&](int s) {
            if (found < 0 && unbought_degree(s) == pass) found = s;
          });
          if (found >= 0) {
            emit_sell(found);
            alive.reset(found);
            drained = false;
          }
        }
      }
      if (!alive.any()) break;
      // open up the internal sold vertex that needs the fewest purchases
      int pick = -1, pick_u = 0;
      alive.for_each([&](int s) {
        int u = unbought_degree(s);
        if (pick < 0 || u < pick_u) {
          pick = s;
          pick_u = u;
        }
      });
      emit_sell(pick);
      alive.reset(pick);
    }
    cb.for_each([&](int b) {  // never-needed purchases close the block
      if (!bought_done[b]) {
        bought_done[b] = 1;
        blk.order.push_back(b);
      }
    });
    Weight run = 0;
    for (int g : blk.order) {
      run += inst.is_sold_global(g) ? -inst.gain(inst.sold_local(g))
                                    : inst.cost(g);
      blk.peak = std::max(blk.peak, run);
    }
    blk.net = run;
    blocks.push_back(std::move(blk));
  }
  std::uint64_t states = blocks.size();
  schedule_blocks(blocks);
  std::vector<int> order;
  for (auto& blk : blocks)
    order.insert(order.end(), blk.order.begin(), blk.order.end());
  return finish_report(inst, order, "forest", states, sw);
}

}  // namespace bgp
