#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "bgp/bits.hpp"

namespace bgp {

using Weight = std::int64_t;

struct ParseError : std::runtime_error {
  int line;
  ParseError(int ln, const std::string& msg)
      : std::runtime_error("line " + std::to_string(ln) + ": " + msg),
        line(ln) {}
};

// Instance of the ordering problem: bought vertices carry costs (>= 1),
// sold vertices carry gains (>= 0), and every edge joins a sold vertex to
// a bought vertex it depends on. Vertices keep their declaration order;
// that order is the canonical order used by every tie-break.
//
// Global vertex indices: bought vertices are 0..p-1, sold are p..p+q-1.
class Instance {
 public:
  struct Vertex {
    std::string id;
    Weight w;
  };

  static Instance create(std::vector<Vertex> bought, std::vector<Vertex> sold,
                         const std::vector<std::pair<std::string, std::string>>&
                             edges,  // (sold id, bought id)
                         std::optional<std::vector<std::string>> order_hint =
                             std::nullopt);

  int bought_count() const { return int(bought_.size()); }
  int sold_count() const { return int(sold_.size()); }
  int vertex_count() const { return bought_count() + sold_count(); }
  int edge_count() const { return edges_; }

  Weight cost(int b) const { return bought_[b].w; }
  Weight gain(int s) const { return sold_[s].w; }
  const std::string& bought_id(int b) const { return bought_[b].id; }
  const std::string& sold_id(int s) const { return sold_[s].id; }

  // global-index helpers
  int sold_global(int s) const { return bought_count() + s; }
  bool is_sold_global(int g) const { return g >= bought_count(); }
  int sold_local(int g) const { return g - bought_count(); }
  const std::string& vertex_id(int g) const {
    return is_sold_global(g) ? sold_[sold_local(g)].id : bought_[g].id;
  }
  Weight vertex_weight(int g) const {
    return is_sold_global(g) ? sold_[sold_local(g)].w : bought_[g].w;
  }

  const std::vector<int>& sold_nbrs(int s) const { return sold_nbr_[s]; }
  const std::vector<int>& bought_nbrs(int b) const { return bought_nbr_[b]; }
  bool has_edge(int s, int b) const {
    return edge_keys_.count((std::uint64_t(s) << 32) | std::uint64_t(b)) > 0;
  }
  Bits sold_nbr_mask(int s) const {  // over bought universe
    Bits m(bought_count());
    for (int b : sold_nbr_[s]) m.set(b);
    return m;
  }

  Weight total_cost() const;
  Weight total_gain() const;

  std::optional<int> find_vertex(const std::string& id) const {
    auto it = id_to_global_.find(id);
    if (it == id_to_global_.end()) return std::nullopt;
    return it->second;
  }

  const std::optional<std::vector<int>>& order_hint() const {
    return order_hint_;  // bought local indices, a permutation of B
  }

  std::string serialize() const;

  bool operator==(const Instance& o) const;

 private:
  std::vector<Vertex> bought_, sold_;
  std::vector<std::vector<int>> sold_nbr_;    // per sold: bought indices
  std::vector<std::vector<int>> bought_nbr_;  // per bought: sold indices
  std::unordered_map<std::uint64_t, bool> edge_keys_;
  std::unordered_map<std::string, int> id_to_global_;
  std::optional<std::vector<int>> order_hint_;
  int edges_ = 0;
};

Instance parse_instance(const std::string& text);

// Induced sub-instance on the given bought/sold subsets. Vertex ids and
// relative declaration order are preserved, so canonical comparisons agree
// with the parent instance. Carries local->parent index maps.
struct SubInstance {
  Instance inst;
  std::vector<int> parent_bought;  // local bought index -> parent bought index
  std::vector<int> parent_sold;    // local sold index -> parent sold index
};
SubInstance induced_instance(const Instance& inst, const Bits& bought_keep,
                             const Bits& sold_keep);

// An ordering is a sequence of global vertex indices.
struct Ordering {
  std::vector<int> seq;
};

// True when every sold vertex appears after all of its bought neighbours.
// The sequence must be a permutation of all vertices.
bool is_valid_ordering(const Instance& inst, const Ordering& ord);

// Largest running total of (costs bought so far) - (gains sold so far)
// across all prefixes, never below zero. Requires a valid ordering.
Weight budget_of_ordering(const Instance& inst, const Ordering& ord);

// Gains minus costs of a set of global vertex indices.
Weight net_value(const Instance& inst, const Bits& vertices);

// Costs minus gains (the running-deficit convention used by the solvers).
Weight prefix_cost(const Instance& inst, const Bits& vertices);

std::string serialize_ordering(const Instance& inst, const Ordering& ord);
Ordering parse_ordering(const Instance& inst, const std::string& text);

}  // namespace bgp
