#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bgp/instance.hpp"

namespace bgp {

// Seeded construction recipe. The same spec always yields the same
// instance, byte for byte once serialized.
struct GenSpec {
  std::string family;  // biclique-union, forest, chain, tp, cobip, perm, projective
  int n = 8;           // target vertex count (projective: the plane order p)
  int parts = 0;       // biclique-union only: component count, 0 = draw from seed
  Weight wmax = 1;     // costs and gains drawn uniformly from [1, wmax]
  std::uint64_t seed = 0;
};

Instance gen_biclique_union(const GenSpec& spec);
Instance gen_forest(const GenSpec& spec);
// Sold neighborhoods are suffixes of the bought order, so the emitted
// order-b hint is a valid vertex ordering as written.
Instance gen_chain(const GenSpec& spec);
// Random binary composition tree, then random leaf bicliques; edges come
// from the tree, so membership needs no rejection sampling.
Instance gen_trivially_perfect(const GenSpec& spec);
Instance gen_co_bipartite(const GenSpec& spec);
// Staircase interval neighborhoods over the bought order; emits order-b.
Instance gen_permutation(const GenSpec& spec);

// Point-line incidence over GF(p). Lines are bought, points are sold,
// all weights 1, n = 2(p^2+p+1). Throws std::invalid_argument unless p
// is a prime <= 7.
Instance gen_projective_plane(int p);

// Dispatch on spec.family ("projective" reads p from spec.n). Unknown
// family throws std::invalid_argument.
Instance generate(const GenSpec& spec);

// Chords above (remove) and below (add) a horizontal line. Arcs on the
// same side must be pairwise nested or disjoint.
struct ArcDiagram {
  struct Arc {
    std::string id;
    double x1 = 0, x2 = 0;  // x1 < x2
    Weight w = 1;
  };
  std::vector<Arc> remove_arcs;  // become bought vertices
  std::vector<Arc> add_arcs;     // become sold vertices
};

// Text format: header "arcs 1", then one arc per line,
// "rm <id> <x1> <x2> [w]" or "add <id> <x1> <x2> [w]".
ArcDiagram parse_arc_diagram(const std::string& text);

// Remove-arcs become bought vertices, add-arcs sold. Two arcs conflict
// iff their intervals properly overlap (x1 < y1 < x2 < y2 in either
// direction); nested and disjoint pairs do not. Cross-line conflicts
// become edges. Throws std::invalid_argument on a diagram violating the
// shape rules.
Instance instance_from_arcs(const ArcDiagram& diag);

}  // namespace bgp
