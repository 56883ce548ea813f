#include "sts/constructions.hpp"

#include <string>
#include <utility>
#include <vector>

#include "sts/error.hpp"

namespace sts {
namespace {

struct LabeledTriples {
  std::vector<Triple> triples;
  std::vector<TripleType> labels;

  void add(int x, int y, int z, TripleType type) {
    triples.push_back(Triple::sorted(x, y, z));
    labels.push_back(type);
  }
};

// Layer of a non-infinity vertex under the Bose or Skolem encoding.
int layer_of(int v, int offset) { return (v - offset) % 3; }
int point_of(int v, int offset) { return (v - offset) / 3; }

// True for {(a,i),(b,i),(c,i+1)} with a != b, i.e. two vertices share a layer
// and the third sits on the next layer.
bool is_layered_pair(const Triple& t, int offset) {
  const int la = layer_of(t.a, offset);
  const int lb = layer_of(t.b, offset);
  const int lc = layer_of(t.c, offset);
  auto fits = [](int same1, int same2, int next) {
    return same1 == same2 && next == (same1 + 1) % 3;
  };
  return fits(la, lb, lc) || fits(la, lc, lb) || fits(lb, lc, la);
}

bool is_column(const Triple& t, int offset) {
  return point_of(t.a, offset) == point_of(t.b, offset) &&
         point_of(t.b, offset) == point_of(t.c, offset);
}

}  // namespace

SteinerSystem bose(int n, const std::optional<Quasigroup>& q) {
  if (n < 9 || n % 6 != 3) {
    throw StsError(ErrorCode::kBadOrder,
                   "Bose construction needs n = 3 mod 6, n >= 9; got " +
                       std::to_string(n));
  }
  const int order = n / 3;
  const Quasigroup op = q ? *q : idempotent_quasigroup(order);
  if (op.order() != order) {
    throw StsError(ErrorCode::kBadOrder,
                   "quasigroup order " + std::to_string(op.order()) +
                       " does not match n/3 = " + std::to_string(order));
  }
  if (!op.commutative() || !op.idempotent()) {
    throw StsError(ErrorCode::kNonIdempotentQuasigroup,
                   "Bose construction needs a commutative idempotent "
                   "quasigroup");
  }

  LabeledTriples out;
  for (int a = 0; a < order; ++a) {
    out.add(bose_vertex(a, 0), bose_vertex(a, 1), bose_vertex(a, 2),
            TripleType::kType1);
  }
  for (int i = 0; i < 3; ++i) {
    for (int a = 0; a < order; ++a) {
      for (int b = a + 1; b < order; ++b) {
        out.add(bose_vertex(a, i), bose_vertex(b, i),
                bose_vertex(op(a, b), (i + 1) % 3), TripleType::kType2);
      }
    }
  }
  return validate_steiner(build_system(n, out.triples), Construction::kBose,
                          std::move(out.labels));
}

SteinerSystem skolem(int n, const std::optional<Quasigroup>& q) {
  if (n < 7 || n % 6 != 1) {
    throw StsError(ErrorCode::kBadOrder,
                   "Skolem construction needs n = 1 mod 6, n >= 7; got " +
                       std::to_string(n));
  }
  const int k = (n - 1) / 6;
  const Quasigroup op = q ? *q : half_idempotent_quasigroup(2 * k);
  if (op.order() != 2 * k) {
    throw StsError(ErrorCode::kBadOrder,
                   "quasigroup order " + std::to_string(op.order()) +
                       " does not match (n-1)/3 = " + std::to_string(2 * k));
  }
  if (!op.commutative() || !op.half_idempotent()) {
    throw StsError(ErrorCode::kNonHalfIdempotentQuasigroup,
                   "Skolem construction needs a commutative half-idempotent "
                   "quasigroup");
  }

  LabeledTriples out;
  for (int a = 0; a < k; ++a) {
    out.add(skolem_vertex(a, 0), skolem_vertex(a, 1), skolem_vertex(a, 2),
            TripleType::kType1);
  }
  for (int a = 0; a < k; ++a) {
    for (int i = 0; i < 3; ++i) {
      out.add(skolem_infinity(), skolem_vertex(k + a, i),
              skolem_vertex(a, (i + 1) % 3), TripleType::kType2);
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int a = 0; a < 2 * k; ++a) {
      for (int b = a + 1; b < 2 * k; ++b) {
        out.add(skolem_vertex(a, i), skolem_vertex(b, i),
                skolem_vertex(op(a, b), (i + 1) % 3), TripleType::kType3);
      }
    }
  }
  return validate_steiner(build_system(n, out.triples), Construction::kSkolem,
                          std::move(out.labels));
}

SteinerSystem fano() {
  std::vector<Triple> lines;
  for (int i = 0; i < 7; ++i) {
    lines.push_back(Triple::sorted(i, (i + 1) % 7, (i + 3) % 7));
  }
  return validate_steiner(build_system(7, lines), Construction::kFano);
}

SteinerSystem s9() {
  auto point = [](int x, int y) { return 3 * (x % 3) + y % 3; };
  std::vector<Triple> lines;
  // Directions (0,1), (1,0), (1,1), (1,2); three parallel lines each.
  const int dirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  for (const auto& d : dirs) {
    std::vector<char> used(9, 0);
    for (int start = 0; start < 9; ++start) {
      if (used[start]) continue;
      const int x = start / 3;
      const int y = start % 3;
      const int p1 = point(x, y);
      const int p2 = point(x + d[0], y + d[1]);
      const int p3 = point(x + 2 * d[0], y + 2 * d[1]);
      used[p1] = used[p2] = used[p3] = 1;
      lines.push_back(Triple::sorted(p1, p2, p3));
    }
  }
  return validate_steiner(build_system(9, lines), Construction::kS9);
}

SteinerSystem attach_labels(TripleSystem s, Construction construction) {
  const int n = s.n();
  std::vector<TripleType> labels;
  auto missing = [&](const std::string& why) {
    return StsError(ErrorCode::kMissingLabels,
                    std::string(construction_name(construction)) +
                        " labels: " + why);
  };

  if (construction == Construction::kBose) {
    if (n < 9 || n % 6 != 3) throw missing("order is not 3 mod 6");
    for (const Triple& t : s.triples()) {
      if (is_column(t, 0)) {
        labels.push_back(TripleType::kType1);
      } else if (is_layered_pair(t, 0)) {
        labels.push_back(TripleType::kType2);
      } else {
        throw missing("triple does not fit the Bose encoding");
      }
    }
  } else if (construction == Construction::kSkolem) {
    if (n < 7 || n % 6 != 1) throw missing("order is not 1 mod 6");
    const int k = (n - 1) / 6;
    for (const Triple& t : s.triples()) {
      if (t.a == skolem_infinity()) {
        // {inf, (k+a, i), (a, i+1)}: one point from each half of Q, the
        // lower-half point one layer after the upper-half point.
        int hi = t.b;
        int lo = t.c;
        if (point_of(hi, 1) < k) std::swap(hi, lo);
        if (point_of(hi, 1) < k || point_of(lo, 1) != point_of(hi, 1) - k ||
            layer_of(lo, 1) != (layer_of(hi, 1) + 1) % 3) {
          throw missing("infinity triple does not fit the Skolem encoding");
        }
        labels.push_back(TripleType::kType2);
      } else if (is_column(t, 1)) {
        if (point_of(t.a, 1) >= k) throw missing("column triple with a >= k");
        labels.push_back(TripleType::kType1);
      } else if (is_layered_pair(t, 1)) {
        labels.push_back(TripleType::kType3);
      } else {
        throw missing("triple does not fit the Skolem encoding");
      }
    }
  }
  return validate_steiner(std::move(s), construction, std::move(labels));
}

}  // namespace sts
