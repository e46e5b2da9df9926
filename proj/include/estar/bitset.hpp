#ifndef ESTAR_BITSET_HPP
#define ESTAR_BITSET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "estar/errors.hpp"

namespace estar {

/// Fixed-universe dynamic bitset used for vertex and edge subsets. The
/// universe size is set at construction; all binary operations require equal
/// universes. Comparison is numeric (as the little-endian integer the words
/// encode), which gives the canonical ascending-bitmask order used for
/// deterministic enumeration output.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
    if (universe < 0) throw InputError("negative bitset universe");
  }
  static Bitset from_mask(int universe, std::uint64_t mask) {
    Bitset b(universe);
    if (universe < 64 && (mask >> universe) != 0)
      throw InputError("mask exceeds bitset universe");
    if (!b.w_.empty()) b.w_[0] = mask;
    return b;
  }
  static Bitset from_vector(int universe, const std::vector<int>& bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }

  int universe() const { return n_; }

  bool test(int i) const {
    check(i);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(int i) {
    check(i);
    w_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    check(i);
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  int find_first() const { return find_next(-1); }
  /// First set bit strictly after i, or -1.
  int find_next(int i) const {
    for (int j = i + 1; j < n_;) {
      std::uint64_t w = w_[j >> 6] >> (j & 63);
      if (w) return j + std::countr_zero(w);
      j = ((j >> 6) + 1) << 6;
    }
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
    return out;
  }

  /// Low 64 bits; only valid when the universe fits one word.
  std::uint64_t low_mask() const {
    if (n_ > 64) throw DomainError("bitset universe exceeds 64 bits");
    return w_.empty() ? 0 : w_[0];
  }

  Bitset& operator&=(const Bitset& o) { bin(o); for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i]; return *this; }
  Bitset& operator|=(const Bitset& o) { bin(o); for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i]; return *this; }
  Bitset& operator^=(const Bitset& o) { bin(o); for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i]; return *this; }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  Bitset complement() const {
    Bitset out(*this);
    for (auto& w : out.w_) w = ~w;
    out.trim();
    return out;
  }

  bool intersects(const Bitset& o) const {
    bin(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    bin(o);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (size_t i = a.w_.size(); i-- > 0;)
      if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
    return false;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i = find_first(); i >= 0; i = find_next(i)) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= n_) throw InputError("bit index out of range");
  }
  void bin(const Bitset& o) const {
    if (o.n_ != n_) throw DomainError("bitset universe mismatch");
  }
  void trim() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace estar

#endif
