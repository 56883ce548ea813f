#ifndef STS_QUASIGROUP_HPP
#define STS_QUASIGROUP_HPP

#include <cstdint>
#include <vector>

namespace sts {

/// A finite quasigroup on [0, q) given by its multiplication table. The
/// constructor rejects tables that are not latin squares (kNotLatin); the
/// property flags are computed from the table, never taken on trust.
class Quasigroup {
 public:
  Quasigroup(int order, std::vector<int> table);

  int order() const { return order_; }
  int operator()(int a, int b) const { return table_[a * order_ + b]; }
  const std::vector<int>& table() const { return table_; }

  bool commutative() const { return commutative_; }
  bool idempotent() const { return idempotent_; }
  /// Even order 2k with cells (i,i) and (k+i,k+i) both holding i, i < k.
  bool half_idempotent() const { return half_idempotent_; }

  friend bool operator==(const Quasigroup& x, const Quasigroup& y) {
    return x.order_ == y.order_ && x.table_ == y.table_;
  }

 private:
  int order_;
  std::vector<int> table_;
  bool commutative_ = false;
  bool idempotent_ = false;
  bool half_idempotent_ = false;
};

bool is_latin_square(int order, const std::vector<int>& table);

/// a o b = (q+1)/2 * (a+b) mod q, i.e. the midpoint (a+b)/2 in Z_q. Odd q.
Quasigroup idempotent_quasigroup(int q);

/// a o b = d((a+b) mod 2k) with d(2j) = j and d(2j+1) = k+j. Even q = 2k.
Quasigroup half_idempotent_quasigroup(int q);

/// Commutative idempotent quasigroup of odd order q from a randomly relabeled
/// near-one-factorization of K_q. Deterministic in (q, seed).
Quasigroup random_idempotent_quasigroup(int q, std::uint64_t seed);

}  // namespace sts

#endif  // STS_QUASIGROUP_HPP
