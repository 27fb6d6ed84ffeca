#include <algorithm>
#include <stdexcept>

#include "bgp/exact.hpp"
#include "bgp/oracle.hpp"
#include "bgp/recognition.hpp"
#include "engine_util.hpp"

namespace bgp {
namespace {

// Cheapest applicable solver, in increasing order of machinery. The
// structural engines can refuse on bounded-search limits; refusals fall
// through to the next backend.
SolveReport solve_core(const Instance& inst) {
  if (is_biclique(inst)) return solve_biclique(inst);
  if (is_biclique_union(inst)) return solve_biclique_union(inst);
  if (has_unit_weights(inst)) {
    if (is_path_or_cycle_shape(inst)) return solve_path_cycle(inst);
    if (is_forest_shape(inst)) return solve_forest_unit(inst);
  }
  if (decompose_trivially_perfect(inst).tree) {
    try {
      return solve_trivially_perfect(inst);
    } catch (const UnknownResult&) {
    }
  }
  if (decompose_co_bipartite(inst).tree) {
    try {
      return solve_co_bipartite(inst);
    } catch (const UnknownResult&) {
    }
  }
  if (auto mm = find_min_max_ordering(inst)) {
    try {
      return solve_permutation(inst, *mm);
    } catch (const UnknownResult&) {
    }
  }
  if (inst.vertex_count() <= default_exact_limit()) return exact_budget(inst);
  return solve_general(inst);
}

}  // namespace

SolveReport solve(const Instance& inst, const std::string& algorithm) {
  if (algorithm == "oracle") return brute_force_budget(inst);
  if (algorithm == "exact") return exact_budget(inst);
  if (algorithm == "tp") return solve_trivially_perfect(inst);
  if (algorithm == "cobip") return solve_co_bipartite(inst);
  if (algorithm == "perm") return solve_permutation(inst);
  if (algorithm == "general") return solve_general(inst);
  if (algorithm == "simple") {
    if (is_biclique(inst)) return solve_biclique(inst);
    if (is_biclique_union(inst)) return solve_biclique_union(inst);
    if (has_unit_weights(inst)) {
      if (is_path_or_cycle_shape(inst)) return solve_path_cycle(inst);
      if (is_forest_shape(inst)) return solve_forest_unit(inst);
    }
    throw ClassMismatch("no closed-form class fits the instance");
  }
  if (algorithm != "auto")
    throw std::invalid_argument("unknown algorithm: " + algorithm);

  // isolated vertices split off: their sells lead, their buys trail, which
  // is optimal on both sides
  Stopwatch sw;
  Bits iso_s(inst.sold_count()), iso_b(inst.bought_count());
  for (int s = 0; s < inst.sold_count(); ++s)
    if (inst.sold_nbrs(s).empty()) iso_s.set(s);
  for (int b = 0; b < inst.bought_count(); ++b)
    if (inst.bought_nbrs(b).empty()) iso_b.set(b);
  if (iso_s.none() && iso_b.none()) return solve_core(inst);

  Bits core_b = Bits::full(inst.bought_count());
  core_b.subtract(iso_b);
  Bits core_s = Bits::full(inst.sold_count());
  core_s.subtract(iso_s);
  std::vector<int> order;
  iso_s.for_each([&](int s) { order.push_back(inst.sold_global(s)); });
  std::string tag = "isolated";
  std::uint64_t states = 1;
  if (core_b.any() || core_s.any()) {
    SubInstance sub = induced_instance(inst, core_b, core_s);
    SolveReport rep = solve_core(sub.inst);
    for (int g : lift_order(sub, inst, rep.witness.seq)) order.push_back(g);
    tag = rep.algorithm;
    states = rep.states;
  }
  iso_b.for_each([&](int b) { order.push_back(b); });
  return finish_report(inst, std::move(order), tag, states, sw);
}

}  // namespace bgp
