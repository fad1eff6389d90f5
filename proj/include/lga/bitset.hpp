#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lga {

// Subset of the vertex indices [0, universe). Packed bits; unused high bits stay zero,
// so word-wise comparison is a total order usable as a map key.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), w_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  static VertexSet single(int universe, int v) {
    VertexSet s(universe);
    s.set(v);
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    if (universe == 0) return s;
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    s.w_.back() >>= (64 - (((universe - 1) % 64) + 1));
    return s;
  }

  int universe() const { return n_; }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool test(int v) const { return (w_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u; }
  void set(int v) { w_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { w_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  VertexSet& operator|=(const VertexSet& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // relative complement: this \ o
  VertexSet& operator-=(const VertexSet& o) {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.w_ < b.w_;
  }

  bool subset_of(const VertexSet& o) const {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  // first element, -1 when empty
  int min() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  void check(const VertexSet& o) const {
    if (n_ != o.n_) throw std::logic_error("vertex set universe mismatch");
  }

  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace lga
