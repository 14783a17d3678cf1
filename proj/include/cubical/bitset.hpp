#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cubical {

// Fixed-size dynamic bitset. All set algebra on halfspaces, vertices and
// hyperplanes runs through this; operations assume equal sizes.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  static Bitset ones(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.w_) w = ~uint64_t{0};
    b.trim();
    return b;
  }

  int size() const { return nbits_; }
  bool empty_domain() const { return nbits_ == 0; }

  void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  // this &= ~o
  Bitset& and_not(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  Bitset operator~() const {
    Bitset r(*this);
    for (auto& w : r.w_) w = ~w;
    r.trim();
    return r;
  }

  bool subset_of(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  int xor_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] ^ o.w_[i]);
    return c;
  }

  int find_first() const { return find_next(-1); }

  // First set bit strictly after i, or -1.
  int find_next(int i) const {
    int from = i + 1;
    if (from >= nbits_) return -1;
    size_t wi = size_t(from) >> 6;
    uint64_t w = w_[wi] >> (from & 63);
    if (w) return from + std::countr_zero(w);
    for (++wi; wi < w_.size(); ++wi)
      if (w_[wi]) return int(wi << 6) + std::countr_zero(w_[wi]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      uint64_t w = w_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(int(wi << 6) + b);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(size_t(count()));
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  bool operator==(const Bitset& o) const = default;

  // Lexicographic on words; a deterministic total order for dedup/sorting.
  bool operator<(const Bitset& o) const { return w_ < o.w_; }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    });
    return s + "}";
  }

 private:
  void trim() {
    int rem = nbits_ & 63;
    if (rem && !w_.empty()) w_.back() &= (uint64_t{1} << rem) - 1;
  }

  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace cubical
