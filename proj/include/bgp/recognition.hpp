#pragma once

#include <optional>
#include <vector>

#include "bgp/bits.hpp"
#include "bgp/instance.hpp"

namespace bgp {

// Binary decomposition tree over sub-instances of one fixed instance.
// Vertex sets are masks over the instance's bought/sold universes.
//
// Node kinds:
//   leaf           - a biclique (possibly a single vertex)
//   disjoint_union - children partition the node, no edges across
//   complete_join  - children partition the node; every sold vertex of the
//                    left child is adjacent to every bought vertex of the
//                    right child, and the right child is self-contained
//                    (its sold vertices have no left-child neighbours).
//                    With `joins_both_ways` the reverse pairs are complete
//                    as well instead.
struct DecompTree {
  enum class NodeOp { leaf, disjoint_union, complete_join };
  struct Node {
    NodeOp op = NodeOp::leaf;
    Bits bought, sold;
    int left = -1, right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;
  bool joins_both_ways = false;
};

// Either a tree or the sub-instance at which every split test failed.
struct DecompOutcome {
  std::optional<DecompTree> tree;
  Bits blocked_bought, blocked_sold;
};

// Splits by connected components (components with fewer bought than sold
// vertices grouped into the left child) and by the degree-threshold join
// test, down to biclique leaves. Runs in O(n^3).
DecompOutcome decompose_trivially_perfect(const Instance& inst);

// Splits by connected components and by connected components of the
// bipartite complement (multi-way splits folded left in canonical order),
// down to single-vertex leaves. Trees produced here join both ways.
DecompOutcome decompose_co_bipartite(const Instance& inst);

// Checks every structural promise a tree makes: child sets partition the
// parent, leaves are bicliques, union children have no cross edges, join
// cross pairs are complete exactly as oriented. Passing implies the tree
// reconstructs the instance's edge set exactly.
bool decomp_tree_valid(const Instance& inst, const DecompTree& tree);

// Orders of local bought / sold indices.
struct MinMaxOrdering {
  std::vector<int> bought_order;
  std::vector<int> sold_order;
};

// True when the bought order keeps every sold neighbourhood consecutive,
// properly nested neighbourhoods share their last neighbour, the sold order
// is non-decreasing in first neighbour (vertices without neighbours last),
// and every edge pair s b, s' b' with s before s' and b' before b closes
// both cross pairs s b' and s' b.
bool is_min_max_ordering(const Instance& inst, const MinMaxOrdering& mm);

// Tries the declared bought order from the instance file first, then an
// iterative refinement (sort bought by min/max sold position, resort sold,
// repeat to a fixpoint) from several starting sold orders, then for
// instances with at most 10 vertices every bought permutation.
std::optional<MinMaxOrdering> find_min_max_ordering(const Instance& inst);

// Six global vertex indices b,s,b,s,b,s forming an induced path, or an
// induced six-cycle when `cycle` is set.
struct Obstruction {
  bool cycle = false;
  std::vector<int> walk;
};

bool obstruction_holds(const Instance& inst, const Obstruction& obs);

// Bounded search for an induced six-vertex path or cycle inside the given
// sub-instance. Returns nothing when none exists or the sub-instance is too
// large to sweep.
std::optional<Obstruction> find_tp_obstruction(const Instance& inst,
                                               const Bits& bought,
                                               const Bits& sold);

// Cheap structural predicates. Shapes ignore weights.
bool has_unit_weights(const Instance& inst);
bool is_biclique(const Instance& inst);
bool is_biclique_union(const Instance& inst);
bool is_forest_shape(const Instance& inst);
bool is_path_or_cycle_shape(const Instance& inst);
bool is_chain(const Instance& inst);  // sold neighbourhoods totally nested

struct GraphClassReport {
  bool unit_weights = false;
  bool biclique = false;
  bool biclique_union = false;
  bool forest = false;
  bool path_or_cycle = false;
  bool chain = false;
  bool trivially_perfect = false;
  bool co_bipartite = false;
  bool permutation = false;
  std::optional<DecompTree> tp_tree;
  std::optional<DecompTree> cobip_tree;
  std::optional<MinMaxOrdering> min_max;
  std::optional<Obstruction> obstruction;
};

GraphClassReport classify(const Instance& inst);

}  // namespace bgp
