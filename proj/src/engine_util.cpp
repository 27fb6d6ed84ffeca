#include "engine_util.hpp"

namespace bgp::detail {

Bits nbr_in(const Instance& top, const GraphView& v, int s) {
  return top.sold_nbr_mask(s) & v.bought;
}

Weight view_cost(const Instance& top, const Bits& bought) {
  Weight c = 0;
  bought.for_each([&](int b) { c += top.cost(b); });
  return c;
}

Weight view_gain(const Instance& top, const Bits& sold) {
  Weight g = 0;
  sold.for_each([&](int s) { g += top.gain(s); });
  return g;
}

std::optional<Strategy::Block> strip_free_sells(const Instance& top,
                                                GraphView& v) {
  std::vector<int> order;
  v.sold.for_each([&](int s) {
    if (nbr_in(top, v, s).none()) order.push_back(top.sold_global(s));
  });
  if (order.empty()) return std::nullopt;
  for (int g : order) v.sold.reset(top.sold_local(g));
  return make_block(top, std::move(order));
}

bool is_biclique_view(const Instance& top, const GraphView& v) {
  bool ok = true;
  v.sold.for_each([&](int s) {
    if (nbr_in(top, v, s) != v.bought) ok = false;
  });
  return ok && v.sold.any();
}

std::vector<int> buy_sell_order(const Instance& top, const GraphView& v) {
  std::vector<int> order = v.bought.indices();
  for (int s : v.sold.indices()) order.push_back(top.sold_global(s));
  return order;
}

std::vector<GraphView> view_components(const Instance& top,
                                       const GraphView& v) {
  SubInstance sub = induced_instance(top, v.bought, v.sold);
  std::vector<GraphView> out;
  for (const auto& [cb, cs] : components(sub.inst)) {
    GraphView part{Bits(top.bought_count()), Bits(top.sold_count())};
    cb.for_each([&](int b) { part.bought.set(sub.parent_bought[b]); });
    cs.for_each([&](int s) { part.sold.set(sub.parent_sold[s]); });
    out.push_back(std::move(part));
  }
  return out;
}

Strategy::Block as_single_block(const Instance& top, const Strategy& s) {
  return make_block(top, s.flat());
}

GraphView view_of_sub(const Instance& top, const Instance& sub) {
  GraphView v{Bits(top.bought_count()), Bits(top.sold_count())};
  for (int b = 0; b < sub.bought_count(); ++b) {
    auto g = top.find_vertex(sub.bought_id(b));
    if (g) v.bought.set(*g);
  }
  for (int s = 0; s < sub.sold_count(); ++s) {
    auto g = top.find_vertex(sub.sold_id(s));
    if (g) v.sold.set(top.sold_local(*g));
  }
  return v;
}

}  // namespace bgp::detail
