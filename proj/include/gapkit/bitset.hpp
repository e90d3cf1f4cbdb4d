#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace gapkit {

// Fixed-width bitset sized at runtime; the vertex-set currency of the exact
// solvers and gadget builders.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  void set(int i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t{0};
    trim();
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

  // First set bit at index >= from, or -1.
  int find_next(int from) const {
    if (from >= n_) return -1;
    int wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi >= static_cast<int>(w_.size())) return -1;
      w = w_[wi];
    }
  }
  int find_first() const { return find_next(0); }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  // this &= ~o
  Bitset& andnot(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = find_first(); v >= 0; v = find_next(v + 1)) out.push_back(v);
    return out;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~std::uint64_t{0} >> (64 - (n_ & 63)));
    if (n_ == 0 && !w_.empty()) w_.back() = 0;
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace gapkit
