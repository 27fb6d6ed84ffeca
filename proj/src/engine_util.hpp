#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "bgp/structure.hpp"
#include "solver_util.hpp"

namespace bgp::detail {

struct ViewKey {
  Bits b, s;
  bool operator==(const ViewKey& o) const { return b == o.b && s == o.s; }
};
struct ViewKeyHash {
  std::size_t operator()(const ViewKey& k) const {
    return k.b.hash() * 1000003u ^ k.s.hash();
  }
};

// Hood of sold s restricted to the view's bought side.
Bits nbr_in(const Instance& top, const GraphView& v, int s);

Weight view_cost(const Instance& top, const Bits& bought);
Weight view_gain(const Instance& top, const Bits& sold);

// Pulls the solds with no live neighbour out of the view; they sell
// up front. Returns nothing when there are none.
std::optional<Strategy::Block> strip_free_sells(const Instance& top,
                                                GraphView& v);

// Every live sold sees every live bought vertex (no empty hoods allowed).
bool is_biclique_view(const Instance& top, const GraphView& v);

// Canonical order of a view: bought ascending, then sold ascending.
std::vector<int> buy_sell_order(const Instance& top, const GraphView& v);

// Connected components of the induced subgraph, as top-universe views in
// first-vertex order.
std::vector<GraphView> view_components(const Instance& top,
                                       const GraphView& v);

// Collapses a finished strategy into one atomic block.
Strategy::Block as_single_block(const Instance& top, const Strategy& s);

// Masks of a sub-instance's vertices in the parent universe, by id lookup.
GraphView view_of_sub(const Instance& top, const Instance& sub);

}  // namespace bgp::detail
