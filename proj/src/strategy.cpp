#include <algorithm>
#include <limits>

#include "solver_util.hpp"

namespace bgp {

Weight Strategy::peak() const {
  Weight run = 0, pk = 0;
  for (const Block& b : blocks) {
    pk = std::max(pk, run + b.peak);
    run += b.net;
  }
  return pk;
}

Weight Strategy::net() const {
  Weight run = 0;
  for (const Block& b : blocks) run += b.net;
  return run;
}

std::vector<int> Strategy::flat() const {
  std::vector<int> out;
  for (const Block& b : blocks)
    out.insert(out.end(), b.order.begin(), b.order.end());
  return out;
}

void Strategy::append(Strategy tail) {
  for (Block& b : tail.blocks) blocks.push_back(std::move(b));
}

Strategy::Block make_block(const Instance& inst, std::vector<int> order) {
  Strategy::Block blk;
  Weight run = 0;
  for (int g : order) {
    run += inst.is_sold_global(g) ? -inst.gain(inst.sold_local(g))
                                  : inst.cost(g);
    blk.peak = std::max(blk.peak, run);
  }
  blk.net = run;
  blk.order = std::move(order);
  return blk;
}

std::optional<Strategy> combine(const Strategy& a, const Strategy& b,
                                Weight k) {
  const std::size_t na = a.blocks.size(), nb = b.blocks.size();
  constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

  // F[i][j]: smallest achievable worst prefix of any merge of a[i..] with
  // b[j..], measured from a zero base. The running total before cell (i,j)
  // is the same for every path there, so this single table is exact.
  std::vector<std::vector<Weight>> F(na + 1, std::vector<Weight>(nb + 1, 0));
  for (std::size_t i = na + 1; i-- > 0;) {
    for (std::size_t j = nb + 1; j-- > 0;) {
      if (i == na && j == nb) continue;
      Weight best = kInf;
      if (i < na)
        best = std::min(best, std::max(a.blocks[i].peak,
                                       a.blocks[i].net + F[i + 1][j]));
      if (j < nb)
        best = std::min(best, std::max(b.blocks[j].peak,
                                       b.blocks[j].net + F[i][j + 1]));
      F[i][j] = best;
    }
  }
  if (F[0][0] > k) return std::nullopt;

  Strategy out;
  std::size_t i = 0, j = 0;
  while (i < na || j < nb) {
    if (i < na &&
        std::max(a.blocks[i].peak, a.blocks[i].net + F[i + 1][j]) == F[i][j])
      out.blocks.push_back(a.blocks[i++]);
    else
      out.blocks.push_back(b.blocks[j++]);
  }
  return out;
}

}  // namespace bgp
