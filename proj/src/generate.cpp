#include "bgp/generate.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace bgp {

namespace {

using Rng = std::mt19937_64;

// Draw from [lo, hi] by modulo. std::uniform_int_distribution maps the
// engine's output in an implementation-defined way, which would break
// byte-identical reproducibility across standard libraries.
int pick(Rng& rng, int lo, int hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct Builder {
  std::vector<Instance::Vertex> bought, sold;
  std::vector<std::pair<std::string, std::string>> edges;

  int add_bought(Weight w) {
    bought.push_back({"b" + std::to_string(bought.size() + 1), w});
    return static_cast<int>(bought.size()) - 1;
  }
  int add_sold(Weight w) {
    sold.push_back({"s" + std::to_string(sold.size() + 1), w});
    return static_cast<int>(sold.size()) - 1;
  }
  void edge(int s, int b) { edges.emplace_back(sold[s].id, bought[b].id); }

  Instance done(std::optional<std::vector<std::string>> hint = std::nullopt) {
    return Instance::create(std::move(bought), std::move(sold), edges,
                            std::move(hint));
  }
};

Weight draw_w(Rng& rng, Weight wmax) {
  Weight hi = wmax < 1 ? 1 : wmax;
  return 1 + static_cast<Weight>(rng() % static_cast<std::uint64_t>(hi));
}

}  // namespace

Instance gen_biclique_union(const GenSpec& spec) {
  Rng rng(spec.seed);
  int n = std::max(1, spec.n);
  int parts = spec.parts > 0 ? spec.parts : pick(rng, 1, std::max(1, n / 3));
  parts = std::min(parts, std::max(1, n / 2));
  // every component starts as a single edge, leftovers spread at random
  std::vector<int> ps(parts, 1), qs(parts, 1);
  for (int extra = n - 2 * parts; extra > 0; --extra) {
    int j = pick(rng, 0, parts - 1);
    (rng() & 1 ? ps[j] : qs[j])++;
  }
  Builder bld;
  for (int c = 0; c < parts; ++c) {
    std::vector<int> bs, ss;
    for (int i = 0; i < ps[c]; ++i) bs.push_back(bld.add_bought(draw_w(rng, spec.wmax)));
    for (int i = 0; i < qs[c]; ++i) ss.push_back(bld.add_sold(draw_w(rng, spec.wmax)));
    for (int s : ss)
      for (int b : bs) bld.edge(s, b);
  }
  return bld.done();
}

Instance gen_forest(const GenSpec& spec) {
  Rng rng(spec.seed);
  int n = std::max(1, spec.n);
  Builder bld;
  std::vector<int> bs, ss;
  for (int v = 0; v < n; ++v) {
    bool is_b = (rng() & 1) != 0;
    if (is_b) {
      int b = bld.add_bought(draw_w(rng, spec.wmax));
      if (!ss.empty() && pick(rng, 0, 99) >= 15)
        bld.edge(ss[pick(rng, 0, static_cast<int>(ss.size()) - 1)], b);
      bs.push_back(b);
    } else {
      int s = bld.add_sold(draw_w(rng, spec.wmax));
      if (!bs.empty() && pick(rng, 0, 99) >= 15)
        bld.edge(s, bs[pick(rng, 0, static_cast<int>(bs.size()) - 1)]);
      ss.push_back(s);
    }
  }
  return bld.done();
}

Instance gen_chain(const GenSpec& spec) {
  Rng rng(spec.seed);
  int n = std::max(1, spec.n);
  int p = std::max(1, n / 2), q = n - p;
  // suffix neighborhoods of non-increasing size: the declaration order of
  // both sides is then a valid vertex ordering, emitted as the hint
  std::vector<int> sizes(q);
  for (int& k : sizes) k = pick(rng, 1, p);
  std::sort(sizes.rbegin(), sizes.rend());
  Builder bld;
  std::vector<std::string> hint;
  for (int i = 0; i < p; ++i)
    hint.push_back(bld.bought[bld.add_bought(draw_w(rng, spec.wmax))].id);
  for (int i = 0; i < q; ++i) {
    int s = bld.add_sold(draw_w(rng, spec.wmax));
    for (int b = p - sizes[i]; b < p; ++b) bld.edge(s, b);
  }
  return bld.done(hint);
}

namespace {

struct Part {
  std::vector<int> bs, ss;
};

// Random composition tree; a join wires left sold vertices to right
// bought vertices (both directions for the co-bipartite shape).
Part compose_rec(Builder& bld, Rng& rng, Weight wmax, int n, bool both_ways) {
  if (n <= 2 || pick(rng, 0, 99) < 30) {
    Part part;
    if (n <= 1) {
      if (rng() & 1)
        part.bs.push_back(bld.add_bought(draw_w(rng, wmax)));
      else
        part.ss.push_back(bld.add_sold(draw_w(rng, wmax)));
      return part;
    }
    int p = pick(rng, 1, n - 1), q = pick(rng, 1, n - p);
    for (int i = 0; i < p; ++i) part.bs.push_back(bld.add_bought(draw_w(rng, wmax)));
    for (int i = 0; i < q; ++i) part.ss.push_back(bld.add_sold(draw_w(rng, wmax)));
    for (int s : part.ss)
      for (int b : part.bs) bld.edge(s, b);
    return part;
  }
  int n1 = pick(rng, 1, n - 1);
  Part left = compose_rec(bld, rng, wmax, n1, both_ways);
  Part right = compose_rec(bld, rng, wmax, n - n1, both_ways);
  if (rng() & 1) {
    for (int s : left.ss)
      for (int b : right.bs) bld.edge(s, b);
    if (both_ways)
      for (int s : right.ss)
        for (int b : left.bs) bld.edge(s, b);
  }
  left.bs.insert(left.bs.end(), right.bs.begin(), right.bs.end());
  left.ss.insert(left.ss.end(), right.ss.begin(), right.ss.end());
  return left;
}

Instance gen_composed(const GenSpec& spec, bool both_ways) {
  Rng rng(spec.seed);
  Builder bld;
  compose_rec(bld, rng, spec.wmax, std::max(1, spec.n), both_ways);
  return bld.done();
}

}  // namespace

Instance gen_trivially_perfect(const GenSpec& spec) {
  return gen_composed(spec, false);
}

Instance gen_co_bipartite(const GenSpec& spec) {
  return gen_composed(spec, true);
}

Instance gen_permutation(const GenSpec& spec) {
  Rng rng(spec.seed);
  int n = std::max(1, spec.n);
  int p = std::max(1, n / 2), q = n - p;
  // staircase intervals: both endpoints non-decreasing, ties on the left
  // endpoint forced to share the right one (equal neighborhoods), which
  // keeps the declaration order valid on both sides
  std::vector<std::pair<int, int>> iv(q);
  for (auto& [l, r] : iv) {
    l = pick(rng, 0, p - 1);
    r = pick(rng, l, p - 1);
  }
  std::sort(iv.begin(), iv.end());
  for (int i = 1; i < q; ++i) {
    if (iv[i].first == iv[i - 1].first)
      iv[i].second = iv[i - 1].second;
    else
      iv[i].second = std::max(iv[i].second, iv[i - 1].second);
  }
  Builder bld;
  std::vector<std::string> hint;
  for (int i = 0; i < p; ++i)
    hint.push_back(bld.bought[bld.add_bought(draw_w(rng, spec.wmax))].id);
  for (int i = 0; i < q; ++i) {
    int s = bld.add_sold(draw_w(rng, spec.wmax));
    for (int b = iv[i].first; b <= iv[i].second; ++b) bld.edge(s, b);
  }
  return bld.done(hint);
}

Instance gen_projective_plane(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw std::invalid_argument("projective order must be a prime <= 7, got " +
                                std::to_string(p));
  // homogeneous coordinates over GF(p), first nonzero entry normalized to 1
  std::vector<std::array<int, 3>> reps;
  reps.push_back({0, 0, 1});
  for (int z = 0; z < p; ++z) reps.push_back({0, 1, z});
  for (int y = 0; y < p; ++y)
    for (int z = 0; z < p; ++z) reps.push_back({1, y, z});
  std::sort(reps.begin(), reps.end());

  std::vector<Instance::Vertex> bought, sold;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    bought.push_back({"l" + std::to_string(i + 1), 1});
    sold.push_back({"p" + std::to_string(i + 1), 1});
  }
  for (std::size_t li = 0; li < reps.size(); ++li)
    for (std::size_t pi = 0; pi < reps.size(); ++pi) {
      const auto& a = reps[li];
      const auto& x = reps[pi];
      if ((a[0] * x[0] + a[1] * x[1] + a[2] * x[2]) % p == 0)
        edges.emplace_back(sold[pi].id, bought[li].id);
    }
  return Instance::create(std::move(bought), std::move(sold), edges);
}

Instance generate(const GenSpec& spec) {
  if (spec.family == "biclique-union") return gen_biclique_union(spec);
  if (spec.family == "forest") return gen_forest(spec);
  if (spec.family == "chain") return gen_chain(spec);
  if (spec.family == "tp") return gen_trivially_perfect(spec);
  if (spec.family == "cobip") return gen_co_bipartite(spec);
  if (spec.family == "perm") return gen_permutation(spec);
  if (spec.family == "projective") return gen_projective_plane(spec.n);
  throw std::invalid_argument("unknown family '" + spec.family + "'");
}

namespace {

std::vector<std::string> arc_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string t;
  while (in >> t) {
    if (t[0] == '#') break;
    toks.push_back(t);
  }
  return toks;
}

double parse_coord(const std::string& tok, int ln) {
  try {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ln, "bad coordinate '" + tok + "'");
  }
}

Weight parse_arc_weight(const std::string& tok, int ln) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(ln, "bad weight '" + tok + "'");
  }
}

bool arcs_cross(const ArcDiagram::Arc& a, const ArcDiagram::Arc& b) {
  return (a.x1 < b.x1 && b.x1 < a.x2 && a.x2 < b.x2) ||
         (b.x1 < a.x1 && a.x1 < b.x2 && b.x2 < a.x2);
}

void check_side(const std::vector<ArcDiagram::Arc>& arcs, const char* side) {
  std::vector<double> xs;
  for (const auto& a : arcs) {
    if (!(a.x1 < a.x2))
      throw std::invalid_argument(std::string(side) + " arc '" + a.id +
                                  "' endpoints out of order");
    xs.push_back(a.x1);
    xs.push_back(a.x2);
  }
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 1; i < xs.size(); ++i)
    if (xs[i] == xs[i - 1])
      throw std::invalid_argument(std::string(side) +
                                  " arcs share an endpoint");
  for (std::size_t i = 0; i < arcs.size(); ++i)
    for (std::size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j]))
        throw std::invalid_argument(std::string(side) + " arcs '" +
                                    arcs[i].id + "' and '" + arcs[j].id +
                                    "' cross");
}

}  // namespace

ArcDiagram parse_arc_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int ln = 0;
  bool header_seen = false;
  ArcDiagram diag;
  while (std::getline(in, line)) {
    ++ln;
    auto toks = arc_tokens(line);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks.size() != 2 || toks[0] != "arcs" || toks[1] != "1")
        throw ParseError(ln, "expected header 'arcs 1'");
      header_seen = true;
      continue;
    }
    const std::string& kw = toks[0];
    if (kw != "rm" && kw != "add")
      throw ParseError(ln, "unknown directive '" + kw + "'");
    if (toks.size() != 4 && toks.size() != 5)
      throw ParseError(ln, "expected '" + kw + " <id> <x1> <x2> [w]'");
    ArcDiagram::Arc arc;
    arc.id = toks[1];
    arc.x1 = parse_coord(toks[2], ln);
    arc.x2 = parse_coord(toks[3], ln);
    if (toks.size() == 5) arc.w = parse_arc_weight(toks[4], ln);
    (kw == "rm" ? diag.remove_arcs : diag.add_arcs).push_back(arc);
  }
  if (!header_seen) throw ParseError(ln ? ln : 1, "expected header 'arcs 1'");
  return diag;
}

Instance instance_from_arcs(const ArcDiagram& diag) {
  check_side(diag.remove_arcs, "remove");
  check_side(diag.add_arcs, "add");
  std::vector<Instance::Vertex> bought, sold;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& a : diag.remove_arcs) bought.push_back({a.id, a.w});
  for (const auto& a : diag.add_arcs) sold.push_back({a.id, a.w});
  for (const auto& s : diag.add_arcs)
    for (const auto& b : diag.remove_arcs)
      if (arcs_cross(s, b)) edges.emplace_back(s.id, b.id);
  return Instance::create(std::move(bought), std::move(sold), edges);
}

}  // namespace bgp
