#include "bgp/recognition.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>

#include "solver_util.hpp"

namespace bgp {

namespace {

constexpr int kNoNbr = std::numeric_limits<int>::max();

Bits bought_nbr_mask(const Instance& inst, int b) {
  Bits m(inst.sold_count());
  for (int s : inst.bought_nbrs(b)) m.set(s);
  return m;
}

struct SubPart {
  Bits bought, sold;
};

// Connected components of the induced sub-instance, ordered by first vertex.
std::vector<SubPart> sub_components(const Instance& inst, const Bits& bought,
                                    const Bits& sold) {
  const int p = inst.bought_count(), q = inst.sold_count();
  std::vector<int> label(p + q, -1);
  std::vector<SubPart> out;
  for (int start = 0; start < p + q; ++start) {
    bool start_sold = start >= p;
    if (start_sold ? !sold.test(start - p) : !bought.test(start)) continue;
    if (label[start] >= 0) continue;
    int id = int(out.size());
    out.push_back({Bits(p), Bits(q)});
    std::vector<int> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      if (g >= p) {
        int s = g - p;
        out[id].sold.set(s);
        for (int b : inst.sold_nbrs(s))
          if (bought.test(b) && label[b] < 0) {
            label[b] = id;
            stack.push_back(b);
          }
      } else {
        out[id].bought.set(g);
        for (int s : inst.bought_nbrs(g))
          if (sold.test(s) && label[p + s] < 0) {
            label[p + s] = id;
            stack.push_back(p + s);
          }
      }
    }
  }
  return out;
}

// Components of the bipartite complement (missing bought/sold pairs become
// the edges), restricted to the given sub-instance.
std::vector<SubPart> complement_components(const Instance& inst,
                                           const Bits& bought,
                                           const Bits& sold) {
  const int p = inst.bought_count(), q = inst.sold_count();
  std::vector<Bits> co_b(p), co_s(q);
  bought.for_each(
      [&](int b) { co_b[b] = minus(sold, bought_nbr_mask(inst, b)); });
  sold.for_each(
      [&](int s) { co_s[s] = minus(bought, inst.sold_nbr_mask(s)); });
  std::vector<int> label(p + q, -1);
  std::vector<SubPart> out;
  for (int start = 0; start < p + q; ++start) {
    bool start_sold = start >= p;
    if (start_sold ? !sold.test(start - p) : !bought.test(start)) continue;
    if (label[start] >= 0) continue;
    int id = int(out.size());
    out.push_back({Bits(p), Bits(q)});
    std::vector<int> stack{start};
    label[start] = id;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      if (g >= p) {
        int s = g - p;
        out[id].sold.set(s);
        co_s[s].for_each([&](int b) {
          if (label[b] < 0) {
            label[b] = id;
            stack.push_back(b);
          }
        });
      } else {
        out[id].bought.set(g);
        co_b[g].for_each([&](int s) {
          if (label[p + s] < 0) {
            label[p + s] = id;
            stack.push_back(p + s);
          }
        });
      }
    }
  }
  return out;
}

bool complete_sub(const Instance& inst, const Bits& bought, const Bits& sold) {
  for (int s : sold.indices())
    if ((inst.sold_nbr_mask(s) & bought) != bought) return false;
  return true;
}

}  // namespace

DecompOutcome decompose_trivially_perfect(const Instance& inst) {
  const int p = inst.bought_count(), q = inst.sold_count();
  DecompOutcome out{DecompTree{}, Bits(p), Bits(q)};
  DecompTree& tree = *out.tree;
  bool failed = false;

  std::function<int(const Bits&, const Bits&)> build =
      [&](const Bits& bought, const Bits& sold) -> int {
    if (failed) return -1;
    const int bc = bought.count(), sc = sold.count();
    if (bc + sc <= 1 ||
        (bc >= 1 && sc >= 1 && complete_sub(inst, bought, sold))) {
      tree.nodes.push_back({DecompTree::NodeOp::leaf, bought, sold, -1, -1});
      return int(tree.nodes.size()) - 1;
    }
    auto comps = sub_components(inst, bought, sold);
    if (comps.size() > 1) {
      // components that lean sold go left; when none (or all) do, one
      // component is peeled off to keep both children nonempty
      std::size_t light = 0;
      for (auto& c : comps)
        if (c.bought.count() < c.sold.count()) ++light;
      SubPart h1{Bits(p), Bits(q)}, h2{Bits(p), Bits(q)};
      if (light == 0) {
        h1 = comps[0];
        for (std::size_t i = 1; i < comps.size(); ++i) {
          h2.bought |= comps[i].bought;
          h2.sold |= comps[i].sold;
        }
      } else if (light == comps.size()) {
        h2 = comps.back();
        for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
          h1.bought |= comps[i].bought;
          h1.sold |= comps[i].sold;
        }
      } else {
        for (auto& c : comps) {
          SubPart& h = c.bought.count() < c.sold.count() ? h1 : h2;
          h.bought |= c.bought;
          h.sold |= c.sold;
        }
      }
      int l = build(h1.bought, h1.sold);
      int r = build(h2.bought, h2.sold);
      if (l < 0 || r < 0) return -1;
      tree.nodes.push_back(
          {DecompTree::NodeOp::disjoint_union, bought, sold, l, r});
      return int(tree.nodes.size()) - 1;
    }
    // connected: split below / at-or-above a degree threshold, largest
    // workable threshold first
    std::vector<int> bs = bought.indices();
    std::vector<Bits> live_nbr;
    live_nbr.reserve(bs.size());
    int maxdeg = 0;
    for (int b : bs) {
      live_nbr.push_back(bought_nbr_mask(inst, b) & sold);
      maxdeg = std::max(maxdeg, live_nbr.back().count());
    }
    for (int m = std::min(maxdeg, sc); m >= 1; --m) {
      Bits b2(p), s1 = sold;
      for (std::size_t i = 0; i < bs.size(); ++i)
        if (live_nbr[i].count() >= m) {
          b2.set(bs[i]);
          s1 &= live_nbr[i];
        }
      if (b2.none() || s1.count() < m) continue;
      Bits b1 = minus(bought, b2);
      bool contained = true;
      Bits nb1(q);
      for (std::size_t i = 0; i < bs.size() && contained; ++i) {
        if (b2.test(bs[i])) continue;
        if (!live_nbr[i].subset_of(s1))
          contained = false;
        else
          nb1 |= live_nbr[i];
      }
      if (!contained) continue;
      // every bought vertex cleared the threshold: the left child keeps
      // only the common neighbours (sold side alone)
      if (b1.none()) nb1 = s1;
      int l = build(b1, nb1);
      int r = build(b2, minus(sold, nb1));
      if (l < 0 || r < 0) return -1;
      tree.nodes.push_back(
          {DecompTree::NodeOp::complete_join, bought, sold, l, r});
      return int(tree.nodes.size()) - 1;
    }
    failed = true;
    out.blocked_bought = bought;
    out.blocked_sold = sold;
    return -1;
  };

  int root = build(Bits::full(p), Bits::full(q));
  if (root < 0) {
    out.tree.reset();
    return out;
  }
  tree.root = root;
  return out;
}

DecompOutcome decompose_co_bipartite(const Instance& inst) {
  const int p = inst.bought_count(), q = inst.sold_count();
  DecompOutcome out{DecompTree{}, Bits(p), Bits(q)};
  DecompTree& tree = *out.tree;
  tree.joins_both_ways = true;
  bool failed = false;

  std::function<int(const Bits&, const Bits&)> build =
      [&](const Bits& bought, const Bits& sold) -> int {
    if (failed) return -1;
    if (bought.count() + sold.count() <= 1) {
      tree.nodes.push_back({DecompTree::NodeOp::leaf, bought, sold, -1, -1});
      return int(tree.nodes.size()) - 1;
    }
    // peel the first part off a multi-way split; the rest splits again
    auto split = [&](const std::vector<SubPart>& parts,
                     DecompTree::NodeOp op) -> int {
      SubPart rest{Bits(p), Bits(q)};
      for (std::size_t i = 1; i < parts.size(); ++i) {
        rest.bought |= parts[i].bought;
        rest.sold |= parts[i].sold;
      }
      int l = build(parts[0].bought, parts[0].sold);
      int r = build(rest.bought, rest.sold);
      if (l < 0 || r < 0) return -1;
      tree.nodes.push_back({op, bought, sold, l, r});
      return int(tree.nodes.size()) - 1;
    };
    auto comps = sub_components(inst, bought, sold);
    if (comps.size() > 1)
      return split(comps, DecompTree::NodeOp::disjoint_union);
    auto co = complement_components(inst, bought, sold);
    if (co.size() > 1) return split(co, DecompTree::NodeOp::complete_join);
    failed = true;
    out.blocked_bought = bought;
    out.blocked_sold = sold;
    return -1;
  };

  int root = build(Bits::full(p), Bits::full(q));
  if (root < 0) {
    out.tree.reset();
    return out;
  }
  tree.root = root;
  return out;
}

bool decomp_tree_valid(const Instance& inst, const DecompTree& tree) {
  const int p = inst.bought_count(), q = inst.sold_count();
  const int n = int(tree.nodes.size());
  if (tree.root < 0 || tree.root >= n) return false;
  const auto& rt = tree.nodes[tree.root];
  if (rt.bought != Bits::full(p) || rt.sold != Bits::full(q)) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{tree.root};
  int visited = 0;
  while (!stack.empty()) {
    int idx = stack.back();
    stack.pop_back();
    if (idx < 0 || idx >= n || seen[idx]) return false;
    seen[idx] = 1;
    ++visited;
    const auto& nd = tree.nodes[idx];
    if (nd.op == DecompTree::NodeOp::leaf) {
      if (nd.left != -1 || nd.right != -1) return false;
      if (!complete_sub(inst, nd.bought, nd.sold)) return false;
      continue;
    }
    if (nd.left < 0 || nd.left >= n || nd.right < 0 || nd.right >= n)
      return false;
    const auto& L = tree.nodes[nd.left];
    const auto& R = tree.nodes[nd.right];
    if (L.bought.intersects(R.bought) || L.sold.intersects(R.sold))
      return false;
    if ((L.bought | R.bought) != nd.bought || (L.sold | R.sold) != nd.sold)
      return false;
    if (L.bought.none() && L.sold.none()) return false;
    if (R.bought.none() && R.sold.none()) return false;
    if (nd.op == DecompTree::NodeOp::disjoint_union) {
      for (int s : L.sold.indices())
        if (inst.sold_nbr_mask(s).intersects(R.bought)) return false;
      for (int s : R.sold.indices())
        if (inst.sold_nbr_mask(s).intersects(L.bought)) return false;
    } else {
      for (int s : L.sold.indices())
        if (!R.bought.subset_of(inst.sold_nbr_mask(s))) return false;
      for (int s : R.sold.indices()) {
        if (tree.joins_both_ways) {
          if (!L.bought.subset_of(inst.sold_nbr_mask(s))) return false;
        } else if (inst.sold_nbr_mask(s).intersects(L.bought)) {
          return false;
        }
      }
    }
    stack.push_back(nd.left);
    stack.push_back(nd.right);
  }
  return visited == n;
}

namespace {

bool perm_of(const std::vector<int>& v, int n) {
  if (int(v.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> derive_sold_order(const Instance& inst,
                                   const std::vector<int>& b_order) {
  const int p = inst.bought_count(), q = inst.sold_count();
  std::vector<int> bpos(p);
  for (int i = 0; i < int(b_order.size()); ++i) bpos[b_order[i]] = i;
  std::vector<std::pair<std::pair<int, int>, int>> keyed(q);
  for (int s = 0; s < q; ++s) {
    int lo = kNoNbr, hi = kNoNbr;
    for (int b : inst.sold_nbrs(s)) {
      lo = std::min(lo, bpos[b]);
      hi = hi == kNoNbr ? bpos[b] : std::max(hi, bpos[b]);
    }
    keyed[s] = {{lo, hi}, s};
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out(q);
  for (int i = 0; i < q; ++i) out[i] = keyed[i].second;
  return out;
}

std::vector<int> refine_bought_order(const Instance& inst,
                                     std::vector<int> s_order) {
  const int p = inst.bought_count(), q = inst.sold_count();
  std::vector<int> b_order(p);
  std::iota(b_order.begin(), b_order.end(), 0);
  for (int round = 0; round < 2 * (p + q) + 4; ++round) {
    std::vector<int> spos(q);
    for (int i = 0; i < q; ++i) spos[s_order[i]] = i;
    std::vector<std::pair<std::pair<int, int>, int>> keyed(p);
    for (int b = 0; b < p; ++b) {
      int lo = kNoNbr, hi = kNoNbr;
      for (int s : inst.bought_nbrs(b)) {
        lo = std::min(lo, spos[s]);
        hi = hi == kNoNbr ? spos[s] : std::max(hi, spos[s]);
      }
      keyed[b] = {{lo, hi}, b};
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> nb(p);
    for (int i = 0; i < p; ++i) nb[i] = keyed[i].second;
    auto ns = derive_sold_order(inst, nb);
    if (nb == b_order && ns == s_order) break;
    b_order = std::move(nb);
    s_order = std::move(ns);
  }
  return b_order;
}

}  // namespace

bool is_min_max_ordering(const Instance& inst, const MinMaxOrdering& mm) {
  const int p = inst.bought_count(), q = inst.sold_count();
  if (!perm_of(mm.bought_order, p) || !perm_of(mm.sold_order, q)) return false;
  std::vector<int> bpos(p), spos(q);
  for (int i = 0; i < p; ++i) bpos[mm.bought_order[i]] = i;
  for (int i = 0; i < q; ++i) spos[mm.sold_order[i]] = i;

  std::vector<int> first(q, kNoNbr), last(q, -1), deg(q, 0);
  for (int s = 0; s < q; ++s) {
    for (int b : inst.sold_nbrs(s)) {
      first[s] = std::min(first[s], bpos[b]);
      last[s] = std::max(last[s], bpos[b]);
      ++deg[s];
    }
    if (deg[s] > 0 && last[s] - first[s] + 1 != deg[s]) return false;
  }
  for (int s1 = 0; s1 < q; ++s1) {
    if (deg[s1] == 0) continue;
    Bits m1 = inst.sold_nbr_mask(s1);
    for (int s2 = 0; s2 < q; ++s2)
      if (s2 != s1 && m1.proper_subset_of(inst.sold_nbr_mask(s2)) &&
          last[s1] != last[s2])
        return false;
  }
  for (int i = 0; i + 1 < q; ++i)
    if (first[mm.sold_order[i]] > first[mm.sold_order[i + 1]]) return false;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(inst.edge_count());
  for (int s = 0; s < q; ++s)
    for (int b : inst.sold_nbrs(s)) edges.push_back({s, b});
  for (auto [s, b] : edges)
    for (auto [s2, b2] : edges)
      if (spos[s] < spos[s2] && bpos[b2] < bpos[b] &&
          (!inst.has_edge(s, b2) || !inst.has_edge(s2, b)))
        return false;
  return true;
}

std::optional<MinMaxOrdering> find_min_max_ordering(const Instance& inst) {
  const int p = inst.bought_count(), q = inst.sold_count();
  auto finish = [&](const std::vector<int>& b_order)
      -> std::optional<MinMaxOrdering> {
    MinMaxOrdering mm{b_order, derive_sold_order(inst, b_order)};
    if (is_min_max_ordering(inst, mm)) return mm;
    return std::nullopt;
  };
  if (inst.order_hint())
    if (auto mm = finish(*inst.order_hint())) return mm;
  std::vector<int> canon(q);
  std::iota(canon.begin(), canon.end(), 0);
  auto deg = [&](int s) { return int(inst.sold_nbrs(s).size()); };
  std::vector<std::vector<int>> seeds{canon, canon, canon};
  std::sort(seeds[1].begin(), seeds[1].end(), [&](int a, int b) {
    return deg(a) != deg(b) ? deg(a) > deg(b) : a < b;
  });
  std::sort(seeds[2].begin(), seeds[2].end(), [&](int a, int b) {
    return deg(a) != deg(b) ? deg(a) < deg(b) : a < b;
  });
  for (auto& sd : seeds)
    if (auto mm = finish(refine_bought_order(inst, sd))) return mm;
  if (p + q <= 10) {
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (auto mm = finish(perm)) return mm;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

bool obstruction_holds(const Instance& inst, const Obstruction& obs) {
  if (obs.walk.size() != 6) return false;
  std::array<int, 3> bl{}, sl{};
  for (int i = 0; i < 6; ++i) {
    int g = obs.walk[i];
    if (g < 0 || g >= inst.vertex_count()) return false;
    if (i % 2 == 0) {
      if (inst.is_sold_global(g)) return false;
      bl[i / 2] = g;
    } else {
      if (!inst.is_sold_global(g)) return false;
      sl[i / 2] = inst.sold_local(g);
    }
  }
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (bl[i] == bl[j] || sl[i] == sl[j]) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      bool want = j == i || j == i + 1 || (obs.cycle && i == 2 && j == 0);
      if (inst.has_edge(sl[i], bl[j]) != want) return false;
    }
  return true;
}

std::optional<Obstruction> find_tp_obstruction(const Instance& inst,
                                               const Bits& bought,
                                               const Bits& sold) {
  std::vector<int> bs = bought.indices(), ss = sold.indices();
  const int nb = int(bs.size()), ns = int(ss.size());
  if (nb < 3 || ns < 3) return std::nullopt;
  auto choose3 = [](std::int64_t n) { return n * (n - 1) * (n - 2) / 6; };
  if (choose3(nb) * choose3(ns) > 2'000'000) return std::nullopt;

  static constexpr std::array<std::array<int, 3>, 6> kPerms{
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  std::array<int, 3> tb{}, ts{};
  std::array<std::array<bool, 3>, 3> adj{};  // [sold][bought]

  auto match = [&](bool cycle) -> std::optional<Obstruction> {
    for (const auto& ps : kPerms)
      for (const auto& pb : kPerms) {
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i)
          for (int j = 0; j < 3 && ok; ++j) {
            bool want = j == i || j == i + 1 || (cycle && i == 2 && j == 0);
            if (adj[ps[i]][pb[j]] != want) ok = false;
          }
        if (ok) {
          Obstruction obs;
          obs.cycle = cycle;
          for (int i = 0; i < 3; ++i) {
            obs.walk.push_back(tb[pb[i]]);
            obs.walk.push_back(inst.sold_global(ts[ps[i]]));
          }
          return obs;
        }
      }
    return std::nullopt;
  };

  for (int i = 0; i < nb; ++i)
    for (int j = i + 1; j < nb; ++j)
      for (int k = j + 1; k < nb; ++k) {
        tb = {bs[i], bs[j], bs[k]};
        for (int x = 0; x < ns; ++x)
          for (int y = x + 1; y < ns; ++y)
            for (int z = y + 1; z < ns; ++z) {
              ts = {ss[x], ss[y], ss[z]};
              int total = 0;
              for (int a = 0; a < 3; ++a)
                for (int c = 0; c < 3; ++c) {
                  adj[a][c] = inst.has_edge(ts[a], tb[c]);
                  total += adj[a][c];
                }
              if (total == 6) {
                if (auto obs = match(true)) return obs;
              } else if (total == 5) {
                if (auto obs = match(false)) return obs;
              }
            }
      }
  return std::nullopt;
}

bool has_unit_weights(const Instance& inst) {
  for (int b = 0; b < inst.bought_count(); ++b)
    if (inst.cost(b) != 1) return false;
  for (int s = 0; s < inst.sold_count(); ++s)
    if (inst.gain(s) != 1) return false;
  return true;
}

bool is_biclique(const Instance& inst) {
  Bits all = Bits::full(inst.bought_count());
  for (int s = 0; s < inst.sold_count(); ++s)
    if (inst.sold_nbr_mask(s) != all) return false;
  return true;
}

bool is_biclique_union(const Instance& inst) {
  for (auto& [cb, cs] : components(inst))
    for (int s : cs.indices())
      if (inst.sold_nbr_mask(s) != cb) return false;
  return true;
}

bool is_forest_shape(const Instance& inst) {
  return inst.edge_count() ==
         inst.vertex_count() - int(components(inst).size());
}

bool is_path_or_cycle_shape(const Instance& inst) {
  if (inst.vertex_count() == 0) return false;
  if (components(inst).size() != 1) return false;
  for (int b = 0; b < inst.bought_count(); ++b)
    if (inst.bought_nbrs(b).size() > 2) return false;
  for (int s = 0; s < inst.sold_count(); ++s)
    if (inst.sold_nbrs(s).size() > 2) return false;
  return true;
}

bool is_chain(const Instance& inst) {
  const int q = inst.sold_count();
  std::vector<int> ord(q);
  std::iota(ord.begin(), ord.end(), 0);
  std::vector<Bits> hood(q);
  for (int s = 0; s < q; ++s) hood[s] = inst.sold_nbr_mask(s);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) {
    int ca = hood[a].count(), cb = hood[b].count();
    return ca != cb ? ca > cb : a < b;
  });
  for (int i = 0; i + 1 < q; ++i)
    if (!hood[ord[i + 1]].subset_of(hood[ord[i]])) return false;
  return true;
}

GraphClassReport classify(const Instance& inst) {
  GraphClassReport rep;
  rep.unit_weights = has_unit_weights(inst);
  rep.biclique = is_biclique(inst);
  rep.biclique_union = is_biclique_union(inst);
  rep.forest = is_forest_shape(inst);
  rep.path_or_cycle = is_path_or_cycle_shape(inst);
  rep.chain = is_chain(inst);
  auto tp = decompose_trivially_perfect(inst);
  if (tp.tree) {
    rep.trivially_perfect = true;
    rep.tp_tree = std::move(tp.tree);
  } else {
    rep.obstruction =
        find_tp_obstruction(inst, tp.blocked_bought, tp.blocked_sold);
  }
  auto cb = decompose_co_bipartite(inst);
  if (cb.tree) {
    rep.co_bipartite = true;
    rep.cobip_tree = std::move(cb.tree);
  }
  if (auto mm = find_min_max_ordering(inst)) {
    rep.permutation = true;
    rep.min_max = std::move(mm);
  }
  return rep;
}

}  // namespace bgp
