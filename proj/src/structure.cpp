#include "bgp/structure.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

namespace bgp {

StructureCtx::StructureCtx(const Instance& top, BudgetFn budget)
    : top_(&top), budget_(std::move(budget)) {
  if (!budget_) throw std::invalid_argument("StructureCtx: null budget backend");
}

GraphView StructureCtx::full_view() const {
  return {Bits::full(top_->bought_count()), Bits::full(top_->sold_count())};
}

Bits StructureCtx::nbr_mask(const GraphView& v, int s) const {
  return top_->sold_nbr_mask(s) & v.bought;
}

Bits StructureCtx::n_star(const GraphView& v, const Bits& I) const {
  Bits out(top_->sold_count());
  v.sold.for_each([&](int s) {
    if (nbr_mask(v, s).subset_of(I)) out.set(s);
  });
  return out;
}

Weight StructureCtx::set_cost(const Bits& bought_set) const {
  Weight c = 0;
  bought_set.for_each([&](int b) { c += top_->cost(b); });
  return c;
}

Weight StructureCtx::set_gain(const Bits& sold_set) const {
  Weight g = 0;
  sold_set.for_each([&](int s) { g += top_->gain(s); });
  return g;
}

std::vector<StructureCtx::Hood> StructureCtx::hoods(const GraphView& v,
                                                    Weight* iso_gain) const {
  std::vector<Hood> out;
  if (iso_gain) *iso_gain = 0;
  v.sold.for_each([&](int s) {
    Bits m = nbr_mask(v, s);
    if (m.none()) {
      if (iso_gain) *iso_gain += top_->gain(s);
      return;
    }
    for (auto& h : out) {
      if (h.mask == m) {
        h.gain += top_->gain(s);
        return;
      }
    }
    out.push_back({m, top_->gain(s)});
  });
  std::sort(out.begin(), out.end(), [](const Hood& a, const Hood& b) {
    return lex_set_less(a.mask, b.mask);
  });
  return out;
}

std::vector<Bits> StructureCtx::prime_sets(const GraphView& v) const {
  auto hs = hoods(v, nullptr);
  std::vector<Bits> out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < hs.size() && minimal; ++j) {
      if (j != i && hs[j].mask.proper_subset_of(hs[i].mask)) minimal = false;
    }
    if (minimal) out.push_back(hs[i].mask);
  }
  return out;  // hoods are lex-sorted already
}

bool StructureCtx::is_prime(const GraphView& v, const Bits& I) const {
  if (I.none()) throw std::invalid_argument("is_prime: empty set");
  for (const auto& p : prime_sets(v))
    if (p == I) return true;
  return false;
}

bool StructureCtx::is_positive(const GraphView& v, const Bits& I) const {
  return set_cost(I) <= set_gain(n_star(v, I));
}

Weight StructureCtx::bg_of(const GraphView& v, const Bits& I) {
  return pair_budget(I, n_star(v, I));
}

Weight StructureCtx::pair_budget(const Bits& bought, const Bits& sold) {
  MaskPair key{bought, sold};
  auto it = bg_cache_.find(key);
  if (it != bg_cache_.end()) return it->second;
  Weight r;
  if (bought.none() && sold.none()) {
    r = 0;
  } else {
    SubInstance sub = induced_instance(*top_, bought, sold);
    ++budget_calls_;
    r = budget_(sub.inst);
  }
  bg_cache_.emplace(key, r);
  return r;
}

PosMinResult StructureCtx::positive_minimal_all(const GraphView& v, Weight k) {
  Weight iso_gain = 0;
  auto hs = hoods(v, &iso_gain);
  const int m = static_cast<int>(hs.size());

  // Distinct unions of neighborhoods, with cost and gain(n_star) attached.
  struct Cand {
    Bits set;
    Weight cost, gain;
  };
  std::vector<Cand> cands;
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  auto add_union = [&](const Bits& u) {
    if (!seen.emplace(u, cands.size()).second) return;
    Weight cost = set_cost(u);
    Weight gain = iso_gain;
    for (const auto& h : hs)
      if (h.mask.subset_of(u)) gain += h.gain;
    cands.push_back({u, cost, gain});
  };

  bool complete = true;
  if (m <= kUnionExactBits) {
    const std::uint32_t total = m >= 31 ? 0 : (std::uint32_t(1) << m);
    for (std::uint32_t t = 1; t < total; ++t) {
      Bits u(top_->bought_count());
      for (int j = 0; j < m; ++j)
        if (t >> j & 1) u |= hs[j].mask;
      add_union(u);
      if (cands.size() > kUnionCap) {
        complete = false;
        break;
      }
    }
  } else {
    complete = false;
    // Unions of few parts; enough to catch the small minimal sets that
    // actually occur, and flagged incomplete so callers can refuse.
    std::vector<int> pick;
    std::size_t combos = 0;
    auto rec = [&](auto&& self, int start, Bits u) -> void {
      if (combos > kUnionCap) return;
      if (!pick.empty()) {
        ++combos;
        add_union(u);
      }
      if (static_cast<int>(pick.size()) == kUnionBoundedParts) return;
      for (int j = start; j < m; ++j) {
        pick.push_back(j);
        self(self, j + 1, u | hs[j].mask);
        pick.pop_back();
      }
    };
    rec(rec, 0, Bits(top_->bought_count()));
  }

  std::vector<Cand> positives;
  for (auto& c : cands)
    if (c.cost <= c.gain) positives.push_back(c);
  std::sort(positives.begin(), positives.end(), [](const Cand& a, const Cand& b) {
    if (a.set.count() != b.set.count()) return a.set.count() < b.set.count();
    return lex_set_less(a.set, b.set);
  });

  PosMinResult res;
  res.complete = complete;
  res.positives_exist = !positives.empty();
  std::vector<Bits> qualifying;
  for (const auto& c : positives) {
    bool dominated = false;
    for (const auto& q : qualifying) {
      if (q.proper_subset_of(c.set)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;
    if (bg_of(v, c.set) <= k) {
      qualifying.push_back(c.set);
      res.sets.push_back(c.set);
    }
  }
  return res;
}

std::optional<Bits> StructureCtx::find_positive_minimal(const GraphView& v,
                                                        Weight k) {
  PosMinResult r = positive_minimal_all(v, k);
  if (r.sets.empty()) {
    if (!r.complete)
      throw UnknownResult("positive-minimal search exceeded its bound");
    return std::nullopt;
  }
  const Bits* best = nullptr;
  Weight best_surplus = 0;
  for (const auto& s : r.sets) {
    Weight surplus = set_gain(n_star(v, s)) - set_cost(s);
    if (!best || surplus > best_surplus ||
        (surplus == best_surplus && lex_set_less(s, *best))) {
      best = &s;
      best_surplus = surplus;
    }
  }
  return *best;
}

ClosureResult StructureCtx::closure(const GraphView& v, const Bits& I,
                                    Weight k) {
  ClosureResult res;
  res.members = I;
  for (;;) {
    Bits covered = n_star(v, res.members);
    Weight resid = k - set_cost(res.members) + set_gain(covered);
    GraphView sub{minus(v.bought, res.members), minus(v.sold, covered)};
    PosMinResult cands = positive_minimal_all(sub, resid);
    if (cands.sets.empty()) {
      if (!cands.complete)
        throw UnknownResult("closure: positive-minimal search gave up");
      res.residual = resid;
      return res;
    }
    const Bits* pick = &cands.sets[0];
    for (const auto& s : cands.sets)
      if (lex_set_less(s, *pick)) pick = &s;
    res.steps.push_back(*pick);
    res.members |= *pick;
  }
}

Bits StructureCtx::superset_of(const GraphView& v, const Bits& J, const Bits& I,
                               Weight k) {
  if (I == J) throw std::invalid_argument("superset_of: identical seeds");
  if (!is_prime(v, I) || !is_prime(v, J))
    throw std::invalid_argument("superset_of: seeds must be prime sets");
  Bits target = closure(v, I, k).members;
  Bits acc = closure(v, J, k).members;
  while (!target.subset_of(acc)) {
    Weight k_step = k - set_cost(acc) + set_gain(n_star(v, acc));
    GraphView sub{minus(v.bought, acc), minus(v.sold, n_star(v, acc))};
    std::vector<Bits> primes = prime_sets(sub);
    if (primes.empty()) {
      acc |= target;
      break;
    }
    const Bits* pick = nullptr;
    for (const auto& p : primes) {
      bool blocked = false;
      for (const auto& q : primes) {
        if (&q == &p || q == p) continue;
        if (is_after(sub, p, q, k_step)) {
          blocked = true;
          break;
        }
      }
      if (!blocked) {
        pick = &p;
        break;
      }
    }
    if (!pick) pick = &primes[0];  // every prime blocked; take the lex-first
    acc |= closure(sub, *pick, k_step).members;
  }
  return acc;
}

bool StructureCtx::is_after(const GraphView& v, const Bits& I, const Bits& J,
                            Weight k) {
  if (!is_prime(v, I) || !is_prime(v, J))
    throw std::invalid_argument("is_after: arguments must be prime sets");
  if (set_cost(I) > k) return true;
  ClosureResult cl = closure(v, I, k);
  Bits sup = superset_of(v, J, I, k);
  // Budget of the stretch between the two closures, played in the graph
  // that remains once cl(I) and its captured sells are gone. The sold side
  // is what the stretch newly enables, not what its bought set alone covers.
  Bits mid_sold = minus(n_star(v, sup), n_star(v, cl.members));
  return pair_budget(minus(sup, cl.members), mid_sold) > cl.residual;
}

}  // namespace bgp
