#ifndef STS_DETAIL_MASK_HPP
#define STS_DETAIL_MASK_HPP

#include <bit>
#include <cstdint>

namespace sts::detail {

// Fixed 128-bit vertex set for the bitset search engines.
struct Mask {
  static constexpr int kCapacity = 128;

  std::uint64_t w[2] = {0, 0};

  static Mask first_n(int n) {
    Mask m;
    if (n >= 64) {
      m.w[0] = ~0ULL;
      m.w[1] = n >= 128 ? ~0ULL : ((1ULL << (n - 64)) - 1);
    } else {
      m.w[0] = n == 0 ? 0 : ((1ULL << n) - 1);
    }
    return m;
  }

  void set(int v) { w[v >> 6] |= 1ULL << (v & 63); }
  void reset(int v) { w[v >> 6] &= ~(1ULL << (v & 63)); }
  bool test(int v) const { return (w[v >> 6] >> (v & 63)) & 1ULL; }
  bool any() const { return (w[0] | w[1]) != 0; }
  int count() const { return std::popcount(w[0]) + std::popcount(w[1]); }
  // Smallest member; undefined on the empty set.
  int first() const {
    return w[0] ? std::countr_zero(w[0]) : 64 + std::countr_zero(w[1]);
  }

  Mask& operator|=(const Mask& o) {
    w[0] |= o.w[0];
    w[1] |= o.w[1];
    return *this;
  }
  Mask& operator&=(const Mask& o) {
    w[0] &= o.w[0];
    w[1] &= o.w[1];
    return *this;
  }
  Mask without(const Mask& o) const {
    Mask m;
    m.w[0] = w[0] & ~o.w[0];
    m.w[1] = w[1] & ~o.w[1];
    return m;
  }
  bool intersects(const Mask& o) const {
    return ((w[0] & o.w[0]) | (w[1] & o.w[1])) != 0;
  }
  bool contains_all(const Mask& o) const {
    return (o.w[0] & ~w[0]) == 0 && (o.w[1] & ~w[1]) == 0;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t bits = w[word];
      while (bits) {
        f(word * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Mask&, const Mask&) = default;
};

}  // namespace sts::detail

#endif  // STS_DETAIL_MASK_HPP
