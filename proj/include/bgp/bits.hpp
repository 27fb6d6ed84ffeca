#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace bgp {

// Fixed-universe dynamic bitset. All sets passed between the structure and
// solver layers use this; universe size is the vertex (or bought-vertex)
// count of the instance the set refers to.
class Bits {
 public:
  Bits() : n_(0) {}
  explicit Bits(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits minus(Bits a, const Bits& b) { return a.subtract(b); }

  bool operator==(const Bits& o) const { return w_ == o.w_; }
  bool operator!=(const Bits& o) const { return w_ != o.w_; }

  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool proper_subset_of(const Bits& o) const {
    return subset_of(o) && *this != o;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        out.push_back(int(wi) * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        f(int(wi) * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  int lowest() const {  // -1 when empty
    for (std::size_t wi = 0; wi < w_.size(); ++wi)
      if (w_[wi]) return int(wi) * 64 + std::countr_zero(w_[wi]);
    return -1;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return std::size_t(h ^ std::uint64_t(n_));
  }

  static Bits of(int universe, const std::vector<int>& idx) {
    Bits b(universe);
    for (int i : idx) b.set(i);
    return b;
  }
  static Bits full(int universe) {
    Bits b(universe);
    for (int i = 0; i < universe; ++i) b.set(i);
    return b;
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

// Compares sets as their sorted index sequences; a strict prefix sorts
// first. Used for every "lexicographically first" tie-break.
inline bool lex_set_less(const Bits& a, const Bits& b) {
  std::vector<int> ai = a.indices(), bi = b.indices();
  std::size_t k = 0;
  while (k < ai.size() && k < bi.size()) {
    if (ai[k] != bi[k]) return ai[k] < bi[k];
    ++k;
  }
  return ai.size() < bi.size();
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

}  // namespace bgp
