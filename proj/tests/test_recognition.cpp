#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <vector>

#include "bgp/recognition.hpp"
#include "testutil.hpp"

using namespace bgp;

namespace {

std::vector<std::pair<int, int>> complete_edges(int p, int q) {
  std::vector<std::pair<int, int>> e;
  for (int s = 1; s <= q; ++s)
    for (int b = 1; b <= p; ++b) e.push_back({s, b});
  return e;
}

Instance p6() {
  return unit_instance(3, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}});
}
Instance c6() {
  return unit_instance(3, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 1}});
}
Instance p5() {
  return unit_instance(2, 3, {{1, 1}, {2, 1}, {2, 2}, {3, 2}});
}
Instance c8() {
  return unit_instance(
      4, 4, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {4, 1}});
}
Instance staircase4() {
  return unit_instance(4, 3, {{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}});
}
// sold neighbourhoods strictly nested: s1 ~ all, s2 ~ b1 b2, s3 ~ b1
Instance chain3() {
  return unit_instance(3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}});
}
Instance fano() {
  std::vector<std::array<int, 3>> lines = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7},
                                           {2, 4, 6}, {2, 5, 7}, {3, 4, 7},
                                           {3, 5, 6}};
  std::vector<std::pair<int, int>> e;
  for (int li = 0; li < 7; ++li)
    for (int pt : lines[li]) e.push_back({li + 1, pt});
  return unit_instance(7, 7, e);
}

Bits bset(int universe, const std::vector<int>& idx) {
  return Bits::of(universe, idx);
}

const DecompTree::Node& root_of(const DecompTree& t) {
  return t.nodes[t.root];
}

int count_leaves(const DecompTree& t) {
  int c = 0;
  for (const auto& nd : t.nodes)
    if (nd.op == DecompTree::NodeOp::leaf) ++c;
  return c;
}

}  // namespace

TEST_CASE("trivially perfect decomposition") {
  auto bic = weighted_instance({2, 3}, {1, 4}, complete_edges(2, 2));
  auto r = decompose_trivially_perfect(bic);
  REQUIRE(r.tree.has_value());
  CHECK(root_of(*r.tree).op == DecompTree::NodeOp::leaf);
  CHECK(decomp_tree_valid(bic, *r.tree));

  auto two = unit_instance(3, 2, {{1, 1}, {2, 2}, {2, 3}});
  r = decompose_trivially_perfect(two);
  REQUIRE(r.tree.has_value());
  CHECK(root_of(*r.tree).op == DecompTree::NodeOp::disjoint_union);
  CHECK(count_leaves(*r.tree) == 2);
  CHECK(decomp_tree_valid(two, *r.tree));

  // the sold-heavy component goes left
  auto mixed = unit_instance(3, 3, {{1, 1}, {1, 2}, {2, 3}, {3, 3}});
  r = decompose_trivially_perfect(mixed);
  REQUIRE(r.tree.has_value());
  {
    const auto& rt = root_of(*r.tree);
    REQUIRE(rt.op == DecompTree::NodeOp::disjoint_union);
    const auto& left = r.tree->nodes[rt.left];
    CHECK(left.bought == bset(3, {2}));
    CHECK(left.sold == bset(3, {1, 2}));
  }

  auto nested = unit_instance(2, 2, {{1, 1}, {2, 1}, {2, 2}});
  r = decompose_trivially_perfect(nested);
  REQUIRE(r.tree.has_value());
  CHECK(decomp_tree_valid(nested, *r.tree));
  {
    const auto& rt = root_of(*r.tree);
    REQUIRE(rt.op == DecompTree::NodeOp::complete_join);
    const auto& left = r.tree->nodes[rt.left];
    const auto& right = r.tree->nodes[rt.right];
    CHECK(left.bought == bset(2, {1}));
    CHECK(left.sold == bset(2, {1}));
    CHECK(right.bought == bset(2, {0}));
    CHECK(right.sold == bset(2, {0}));
  }

  r = decompose_trivially_perfect(chain3());
  REQUIRE(r.tree.has_value());
  CHECK(root_of(*r.tree).op == DecompTree::NodeOp::complete_join);
  CHECK(count_leaves(*r.tree) == 3);
  CHECK(decomp_tree_valid(chain3(), *r.tree));

  // a five-vertex path splits with a sold-only left child
  r = decompose_trivially_perfect(p5());
  REQUIRE(r.tree.has_value());
  CHECK(decomp_tree_valid(p5(), *r.tree));
  {
    const auto& rt = root_of(*r.tree);
    REQUIRE(rt.op == DecompTree::NodeOp::complete_join);
    const auto& left = r.tree->nodes[rt.left];
    CHECK(left.bought.none());
    CHECK(left.sold == bset(3, {1}));
  }

  r = decompose_trivially_perfect(p6());
  CHECK(!r.tree.has_value());
  CHECK(r.blocked_bought == Bits::full(3));
  CHECK(r.blocked_sold == Bits::full(3));

  CHECK(!decompose_trivially_perfect(c6()).tree.has_value());

  auto solds = weighted_instance({}, {1, 2}, {});
  r = decompose_trivially_perfect(solds);
  REQUIRE(r.tree.has_value());
  CHECK(root_of(*r.tree).op == DecompTree::NodeOp::disjoint_union);
  CHECK(decomp_tree_valid(solds, *r.tree));

  auto empty = weighted_instance({}, {}, {});
  r = decompose_trivially_perfect(empty);
  REQUIRE(r.tree.has_value());
  CHECK(decomp_tree_valid(empty, *r.tree));
}

TEST_CASE("co-bipartite decomposition") {
  auto bic = weighted_instance({2, 3}, {1, 4}, complete_edges(2, 2));
  auto r = decompose_co_bipartite(bic);
  REQUIRE(r.tree.has_value());
  CHECK(r.tree->joins_both_ways);
  CHECK(count_leaves(*r.tree) == 4);
  for (const auto& nd : r.tree->nodes)
    if (nd.op == DecompTree::NodeOp::leaf)
      CHECK(nd.bought.count() + nd.sold.count() == 1);
  CHECK(decomp_tree_valid(bic, *r.tree));

  // the six-cycle's complement is a perfect matching, so it splits
  r = decompose_co_bipartite(c6());
  REQUIRE(r.tree.has_value());
  CHECK(decomp_tree_valid(c6(), *r.tree));
  CHECK(root_of(*r.tree).op == DecompTree::NodeOp::complete_join);

  r = decompose_co_bipartite(p6());
  REQUIRE(r.tree.has_value());
  CHECK(decomp_tree_valid(p6(), *r.tree));

  // the eight-cycle's complement is again connected
  r = decompose_co_bipartite(c8());
  CHECK(!r.tree.has_value());
  CHECK(r.blocked_bought == Bits::full(4));
  CHECK(r.blocked_sold == Bits::full(4));

  auto two = unit_instance(2, 2, {{1, 1}, {2, 2}});
  r = decompose_co_bipartite(two);
  REQUIRE(r.tree.has_value());
  CHECK(root_of(*r.tree).op == DecompTree::NodeOp::disjoint_union);
  CHECK(decomp_tree_valid(two, *r.tree));

  auto one = weighted_instance({5}, {}, {});
  r = decompose_co_bipartite(one);
  REQUIRE(r.tree.has_value());
  CHECK(root_of(*r.tree).op == DecompTree::NodeOp::leaf);
}

TEST_CASE("decomposition trees certify themselves") {
  auto bic = weighted_instance({2, 3}, {1, 4}, complete_edges(2, 2));
  auto cb = decompose_co_bipartite(bic);
  REQUIRE(cb.tree.has_value());
  CHECK(decomp_tree_valid(bic, *cb.tree));
  // claiming one-way joins makes the biclique tree inconsistent
  auto oneway = *cb.tree;
  oneway.joins_both_ways = false;
  CHECK(!decomp_tree_valid(bic, oneway));

  auto nested = unit_instance(2, 2, {{1, 1}, {2, 1}, {2, 2}});
  auto tp = decompose_trivially_perfect(nested);
  REQUIRE(tp.tree.has_value());
  auto flipped = *tp.tree;
  std::swap(flipped.nodes[flipped.root].left, flipped.nodes[flipped.root].right);
  CHECK(!decomp_tree_valid(nested, flipped));

  auto torn = *tp.tree;
  torn.nodes[torn.nodes[torn.root].left].sold = Bits(2);
  CHECK(!decomp_tree_valid(nested, torn));
}

TEST_CASE("min-max orderings") {
  auto mm = find_min_max_ordering(chain3());
  REQUIRE(mm.has_value());
  CHECK(is_min_max_ordering(chain3(), *mm));
  CHECK(mm->bought_order == std::vector<int>{2, 1, 0});

  mm = find_min_max_ordering(staircase4());
  REQUIRE(mm.has_value());
  CHECK(is_min_max_ordering(staircase4(), *mm));
  CHECK(mm->bought_order == std::vector<int>{0, 1, 2, 3});

  auto bic = weighted_instance({2, 3}, {1, 4}, complete_edges(2, 2));
  mm = find_min_max_ordering(bic);
  REQUIRE(mm.has_value());
  CHECK(is_min_max_ordering(bic, *mm));

  mm = find_min_max_ordering(p6());
  REQUIRE(mm.has_value());
  CHECK(is_min_max_ordering(p6(), *mm));

  CHECK(!find_min_max_ordering(c6()).has_value());

  // a declared valid order is returned as-is
  {
    std::vector<Instance::Vertex> bought, sold;
    for (int i = 1; i <= 4; ++i) bought.push_back({"b" + std::to_string(i), 1});
    for (int i = 1; i <= 3; ++i) sold.push_back({"s" + std::to_string(i), 1});
    std::vector<std::pair<std::string, std::string>> e;
    for (auto [s, b] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}, {3, 4}})
      e.push_back({"s" + std::to_string(s), "b" + std::to_string(b)});
    auto declared = Instance::create(
        bought, sold, e, std::vector<std::string>{"b4", "b3", "b2", "b1"});
    mm = find_min_max_ordering(declared);
    REQUIRE(mm.has_value());
    CHECK(mm->bought_order == std::vector<int>{3, 2, 1, 0});
    CHECK(is_min_max_ordering(declared, *mm));
  }

  // a declared invalid order is bypassed, not trusted
  {
    std::vector<Instance::Vertex> bought, sold;
    for (int i = 1; i <= 3; ++i) bought.push_back({"b" + std::to_string(i), 1});
    for (int i = 1; i <= 3; ++i) sold.push_back({"s" + std::to_string(i), 1});
    std::vector<std::pair<std::string, std::string>> e;
    for (auto [s, b] : std::vector<std::pair<int, int>>{
             {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}})
      e.push_back({"s" + std::to_string(s), "b" + std::to_string(b)});
    auto declared = Instance::create(
        bought, sold, e, std::vector<std::string>{"b1", "b2", "b3"});
    mm = find_min_max_ordering(declared);
    REQUIRE(mm.has_value());
    CHECK(mm->bought_order == std::vector<int>{2, 1, 0});
  }

  // vertices without neighbours sort to the back
  auto iso = unit_instance(3, 4,
                           {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}});
  mm = find_min_max_ordering(iso);
  REQUIRE(mm.has_value());
  CHECK(mm->sold_order.back() == 3);
  CHECK(is_min_max_ordering(iso, *mm));

  // the search finds an ordering exactly when some permutation admits one
  std::mt19937_64 rng(77);
  for (int t = 0; t < 60; ++t) {
    int p = 1 + int(rng() % 4), q = 1 + int(rng() % 4);
    auto inst = random_instance(rng, p, q, 0.5, 1);
    bool brute = false;
    std::vector<int> perm(p);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
      MinMaxOrdering cand;
      cand.bought_order = perm;
      std::vector<std::pair<std::pair<int, int>, int>> keyed;
      std::vector<int> bpos(p);
      for (int i = 0; i < p; ++i) bpos[perm[i]] = i;
      for (int s = 0; s < q; ++s) {
        int lo = p + 1, hi = -1;
        for (int b : inst.sold_nbrs(s)) {
          lo = std::min(lo, bpos[b]);
          hi = std::max(hi, bpos[b]);
        }
        if (hi < 0) lo = hi = p + 2;
        keyed.push_back({{lo, hi}, s});
      }
      std::sort(keyed.begin(), keyed.end());
      for (auto& [k, s] : keyed) cand.sold_order.push_back(s);
      if (is_min_max_ordering(inst, cand)) {
        brute = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto found = find_min_max_ordering(inst);
    CHECK(found.has_value() == brute);
    if (found) CHECK(is_min_max_ordering(inst, *found));
  }
}

TEST_CASE("obstruction witnesses") {
  auto rep = classify(p6());
  CHECK(!rep.trivially_perfect);
  REQUIRE(rep.obstruction.has_value());
  CHECK(!rep.obstruction->cycle);
  CHECK(obstruction_holds(p6(), *rep.obstruction));

  rep = classify(c6());
  REQUIRE(rep.obstruction.has_value());
  CHECK(rep.obstruction->cycle);
  CHECK(obstruction_holds(c6(), *rep.obstruction));

  rep = classify(fano());
  CHECK(!rep.trivially_perfect);
  REQUIRE(rep.obstruction.has_value());
  CHECK(obstruction_holds(fano(), *rep.obstruction));

  // a cycle claim needs the closing edge
  Obstruction walk{true, {0, 3, 1, 4, 2, 5}};
  CHECK(obstruction_holds(c6(), walk));
  CHECK(!obstruction_holds(p6(), walk));
  walk.cycle = false;
  CHECK(!obstruction_holds(c6(), walk));
  CHECK(obstruction_holds(p6(), walk));

  // far beyond the sweep bound the report stays silent rather than wrong
  std::vector<std::pair<int, int>> ring;
  for (int i = 1; i <= 24; ++i) {
    ring.push_back({i, i});
    ring.push_back({i, i % 24 + 1});
  }
  auto big = unit_instance(24, 24, ring);
  rep = classify(big);
  CHECK(!rep.trivially_perfect);
  CHECK(!rep.obstruction.has_value());
}

TEST_CASE("classification report") {
  auto edge = unit_instance(1, 1, {{1, 1}});
  auto rep = classify(edge);
  CHECK(rep.unit_weights);
  CHECK(rep.biclique);
  CHECK(rep.biclique_union);
  CHECK(rep.forest);
  CHECK(rep.path_or_cycle);
  CHECK(rep.chain);
  CHECK(rep.trivially_perfect);
  CHECK(rep.co_bipartite);
  CHECK(rep.permutation);
  REQUIRE(rep.tp_tree.has_value());
  CHECK(decomp_tree_valid(edge, *rep.tp_tree));
  REQUIRE(rep.cobip_tree.has_value());
  CHECK(decomp_tree_valid(edge, *rep.cobip_tree));

  rep = classify(fano());
  CHECK(rep.unit_weights);
  CHECK(!rep.biclique);
  CHECK(!rep.biclique_union);
  CHECK(!rep.forest);
  CHECK(!rep.path_or_cycle);
  CHECK(!rep.chain);
  CHECK(!rep.trivially_perfect);
  CHECK(!rep.co_bipartite);
  CHECK(!rep.permutation);

  rep = classify(chain3());
  CHECK(rep.chain);
  CHECK(rep.trivially_perfect);
  CHECK(rep.co_bipartite);
  CHECK(rep.permutation);
  CHECK(!rep.path_or_cycle);

  rep = classify(p6());
  CHECK(rep.forest);
  CHECK(rep.path_or_cycle);
  CHECK(rep.permutation);
  CHECK(rep.co_bipartite);
  CHECK(!rep.chain);
  CHECK(!rep.trivially_perfect);

  rep = classify(c6());
  CHECK(!rep.forest);
  CHECK(rep.path_or_cycle);
  CHECK(!rep.permutation);
  CHECK(rep.co_bipartite);
  REQUIRE(rep.cobip_tree.has_value());
  CHECK(decomp_tree_valid(c6(), *rep.cobip_tree));

  auto star = unit_instance(1, 3, {{1, 1}, {2, 1}, {3, 1}});
  rep = classify(star);
  CHECK(rep.forest);
  CHECK(!rep.path_or_cycle);
  CHECK(rep.biclique);
  CHECK(rep.trivially_perfect);

  auto wbic = weighted_instance({2, 3}, {1, 4}, complete_edges(2, 2));
  rep = classify(wbic);
  CHECK(!rep.unit_weights);
  CHECK(rep.biclique);
  CHECK(rep.trivially_perfect);

  // reports are reproducible
  auto once = classify(chain3());
  auto again = classify(chain3());
  CHECK(once.min_max->bought_order == again.min_max->bought_order);
  CHECK(once.tp_tree->nodes.size() == again.tp_tree->nodes.size());

  std::mt19937_64 rng(4242);
  for (int t = 0; t < 10; ++t) {
    int comps = 1 + int(rng() % 3);
    std::vector<Instance::Vertex> bought, sold;
    std::vector<std::pair<std::string, std::string>> e;
    for (int c = 0; c < comps; ++c) {
      int p = 1 + int(rng() % 3), q = 1 + int(rng() % 3);
      for (int b = 0; b < p; ++b)
        bought.push_back({"c" + std::to_string(c) + "b" + std::to_string(b),
                          1 + Weight(rng() % 4)});
      for (int s = 0; s < q; ++s) {
        std::string sid = "c" + std::to_string(c) + "s" + std::to_string(s);
        sold.push_back({sid, Weight(rng() % 4)});
        for (int b = 0; b < p; ++b)
          e.push_back({sid, "c" + std::to_string(c) + "b" + std::to_string(b)});
      }
    }
    auto inst = Instance::create(bought, sold, e);
    auto brep = classify(inst);
    CHECK(brep.biclique_union);
    CHECK(brep.trivially_perfect);
    REQUIRE(brep.tp_tree.has_value());
    CHECK(decomp_tree_valid(inst, *brep.tp_tree));
  }
}
