#include "sts/quasigroup.hpp"

#include <numeric>
#include <string>

#include "sts/error.hpp"
#include "sts/rng.hpp"

namespace sts {

bool is_latin_square(int order, const std::vector<int>& table) {
  if (order < 1 || table.size() != static_cast<std::size_t>(order) * order) {
    return false;
  }
  std::vector<int> row_seen(static_cast<std::size_t>(order));
  std::vector<int> col_seen(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    for (int j = 0; j < order; ++j) {
      const int r = table[i * order + j];
      const int c = table[j * order + i];
      if (r < 0 || r >= order || c < 0 || c >= order) return false;
      // Stamps avoid clearing the arrays between rows.
      if (row_seen[r] == i + 1 || col_seen[c] == i + 1) return false;
      row_seen[r] = i + 1;
      col_seen[c] = i + 1;
    }
  }
  return true;
}

Quasigroup::Quasigroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
  if (!is_latin_square(order_, table_)) {
    throw StsError(ErrorCode::kNotLatin,
                   "table of order " + std::to_string(order_) +
                       " is not a latin square");
  }
  commutative_ = true;
  idempotent_ = true;
  for (int a = 0; a < order_; ++a) {
    if ((*this)(a, a) != a) idempotent_ = false;
    for (int b = a + 1; b < order_; ++b) {
      if ((*this)(a, b) != (*this)(b, a)) commutative_ = false;
    }
  }
  half_idempotent_ = order_ % 2 == 0;
  const int k = order_ / 2;
  for (int i = 0; half_idempotent_ && i < k; ++i) {
    if ((*this)(i, i) != i || (*this)(k + i, k + i) != i) {
      half_idempotent_ = false;
    }
  }
}

Quasigroup idempotent_quasigroup(int q) {
  if (q < 1 || q % 2 == 0) {
    throw StsError(ErrorCode::kEvenOrder,
                   "idempotent quasigroup needs odd order, got " +
                       std::to_string(q));
  }
  const int half = (q + 1) / 2;
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) table[a * q + b] = half * (a + b) % q;
  }
  return Quasigroup(q, std::move(table));
}

Quasigroup half_idempotent_quasigroup(int q) {
  if (q < 2 || q % 2 != 0) {
    throw StsError(ErrorCode::kOddOrder,
                   "half-idempotent quasigroup needs even order, got " +
                       std::to_string(q));
  }
  const int k = q / 2;
  std::vector<int> table(static_cast<std::size_t>(q) * q);
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      const int s = (a + b) % q;
      table[a * q + b] = s % 2 == 0 ? s / 2 : k + s / 2;
    }
  }
  return Quasigroup(q, std::move(table));
}

Quasigroup random_idempotent_quasigroup(int q, std::uint64_t seed) {
  if (q < 3 || q % 2 == 0) {
    throw StsError(ErrorCode::kEvenOrder,
                   "random idempotent quasigroup needs odd order >= 3, got " +
                       std::to_string(q));
  }
  Rng rng(derive_seed(seed, 0x71));
  std::vector<int> symbol(static_cast<std::size_t>(q));
  std::vector<int> vertex(static_cast<std::size_t>(q));
  std::iota(symbol.begin(), symbol.end(), 0);
  std::iota(vertex.begin(), vertex.end(), 0);
  rng.shuffle(std::span<int>(symbol));
  rng.shuffle(std::span<int>(vertex));

  // Matching M_x = {{x+t, x-t} : 1 <= t <= (q-1)/2} misses exactly x. After
  // relabeling, matching symbol[x] covers vertex[x+t], vertex[x-t], and the
  // uncovered vertex[x] gets symbol[x] on the diagonal.
  std::vector<int> table(static_cast<std::size_t>(q) * q, -1);
  for (int x = 0; x < q; ++x) {
    for (int t = 1; t <= (q - 1) / 2; ++t) {
      const int i = vertex[(x + t) % q];
      const int j = vertex[(x - t + q) % q];
      table[i * q + j] = table[j * q + i] = symbol[x];
    }
    table[vertex[x] * q + vertex[x]] = symbol[x];
  }

  // The diagonal is a permutation of the symbols; rename each diagonal value
  // to its row index.
  std::vector<int> rename(static_cast<std::size_t>(q));
  for (int v = 0; v < q; ++v) rename[table[v * q + v]] = v;
  for (int& cell : table) cell = rename[cell];
  return Quasigroup(q, std::move(table));
}

}  // namespace sts
