#include "solver_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgp {

SolveReport finish_report(const Instance& inst, std::vector<int> order,
                          std::string algorithm, std::uint64_t states,
                          const Stopwatch& sw) {
  SolveReport rep;
  rep.witness.seq = std::move(order);
  rep.budget = budget_of_ordering(inst, rep.witness);
  rep.algorithm = std::move(algorithm);
  rep.states = states;
  rep.elapsed_ms = sw.ms();
  return rep;
}

void schedule_blocks(std::vector<SeqBlock>& blocks) {
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const SeqBlock& a, const SeqBlock& b) {
                     bool an = a.net <= 0, bn = b.net <= 0;
                     if (an != bn) return an;
                     if (an) return a.peak < b.peak;
                     return a.peak - a.net > b.peak - b.net;
                   });
}

std::vector<std::pair<Bits, Bits>> components(const Instance& inst) {
  const int p = inst.bought_count(), n = p + inst.sold_count();
  std::vector<int> label(n, -1);
  std::vector<std::pair<Bits, Bits>> out;
  for (int start = 0; start < n; ++start) {
    if (label[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back(Bits(p), Bits(inst.sold_count()));
    std::vector<int> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      if (inst.is_sold_global(g)) {
        int s = inst.sold_local(g);
        out[id].second.set(s);
        for (int b : inst.sold_nbrs(s))
          if (label[b] < 0) {
            label[b] = id;
            stack.push_back(b);
          }
      } else {
        out[id].first.set(g);
        for (int s : inst.bought_nbrs(g)) {
          int sg = inst.sold_global(s);
          if (label[sg] < 0) {
            label[sg] = id;
            stack.push_back(sg);
          }
        }
      }
    }
  }
  return out;
}

std::vector<int> lift_order(const SubInstance& sub, const Instance& parent,
                            const std::vector<int>& order) {
  std::vector<int> out;
  out.reserve(order.size());
  for (int g : order) {
    if (sub.inst.is_sold_global(g))
      out.push_back(
          parent.sold_global(sub.parent_sold[sub.inst.sold_local(g)]));
    else
      out.push_back(sub.parent_bought[g]);
  }
  return out;
}

}  // namespace bgp
