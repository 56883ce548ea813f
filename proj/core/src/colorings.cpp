#include "sts/colorings.hpp"

#include <algorithm>
#include <string>

#include "sts/constructions.hpp"
#include "sts/error.hpp"

namespace sts {

EdgeColoring hole_coloring(const TripleSystem& s, const HoleCertificate& h) {
  if (h.k < 2) throw StsError(ErrorCode::kInvalidHole, "hole needs k >= 2");
  bool valid = false;
  try {
    valid = verify_hole(s, h);
  } catch (const StsError& e) {
    throw StsError(ErrorCode::kInvalidHole, e.what());
  }
  if (!valid || static_cast<int>(h.parts.size()) != h.k) {
    throw StsError(ErrorCode::kInvalidHole, "not a hole of this system");
  }
  std::vector<int> part_of(static_cast<std::size_t>(s.n()), -1);
  for (int i = 0; i < h.k; ++i) {
    for (int v : h.parts[i]) part_of[v] = i;
  }
  std::vector<int> colors(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) {
    std::vector<char> touched(static_cast<std::size_t>(h.k), 0);
    for (int v : s.triple(t).vertices()) {
      if (part_of[v] >= 0) touched[part_of[v]] = 1;
    }
    const auto it = std::find(touched.begin(), touched.end(), 0);
    if (it == touched.end()) {
      throw StsError(ErrorCode::kInvalidHole, "triple meets every part", t);
    }
    colors[t] = static_cast<int>(it - touched.begin());
  }
  return EdgeColoring(s, h.k, std::move(colors));
}

namespace {

void require_labels(const SteinerSystem& s, Construction c) {
  if (s.construction() != c || !s.labeled()) {
    throw StsError(ErrorCode::kMissingLabels,
                   std::string("system carries no ") +
                       std::string(construction_name(c)) + " labels");
  }
}

// The one layer in {0,1,2} not present among `layers` (a two-bit set).
int missing_layer(unsigned layers) {
  for (int i = 0; i < 3; ++i) {
    if (!(layers & (1u << i))) return i;
  }
  return 0;
}

}  // namespace

EdgeColoring bose_coloring(const SteinerSystem& s) {
  require_labels(s, Construction::kBose);
  std::vector<int> colors(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) {
    const Triple& tr = s.system().triple(t);
    if (s.labels()[t] == TripleType::kType1) {
      colors[t] = (tr.a / 3) % 3;
      continue;
    }
    unsigned layers = 0;
    for (int v : tr.vertices()) layers |= 1u << (v % 3);
    colors[t] = missing_layer(layers);
  }
  return EdgeColoring(s.system(), 3, std::move(colors));
}

EdgeColoring skolem_coloring(const SteinerSystem& s) {
  require_labels(s, Construction::kSkolem);
  std::vector<int> colors(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) {
    const Triple& tr = s.system().triple(t);
    if (s.labels()[t] == TripleType::kType1) {
      colors[t] = ((tr.a - 1) / 3) % 3;
      continue;
    }
    unsigned layers = 0;
    for (int v : tr.vertices()) {
      if (v != skolem_infinity()) layers |= 1u << ((v - 1) % 3);
    }
    colors[t] = missing_layer(layers);
  }
  return EdgeColoring(s.system(), 3, std::move(colors));
}

int bose_span_bound(int n) {
  const int k = (n - 3) / 6;
  return 4 * k + 2 + (2 * k + 1 + 2) / 3;
}

int skolem_span_bound(int n) {
  const int k = (n - 1) / 6;
  return (k + 2) / 3 + 4 * k + 1;
}

Bicoloring verify_bicoloring(const TripleSystem& s, std::vector<int> classes) {
  if (static_cast<int>(classes.size()) != s.n()) {
    throw StsError(ErrorCode::kMalformedCertificate,
                   "bicoloring must give one class per vertex");
  }
  for (int c : classes) {
    if (c < 1 || c > 3) {
      throw StsError(ErrorCode::kMalformedCertificate,
                     "bicoloring classes are 1, 2, 3");
    }
  }
  for (std::size_t t = 0; t < s.size(); ++t) {
    const Triple& tr = s.triple(t);
    const int x = classes[tr.a];
    const int y = classes[tr.b];
    const int z = classes[tr.c];
    if (x == y && y == z) {
      throw StsError(ErrorCode::kMonochromaticTriple, "monochromatic triple", t);
    }
    if (x != y && y != z && x != z) {
      throw StsError(ErrorCode::kRainbowTriple, "rainbow triple", t);
    }
  }
  Bicoloring out;
  for (int c : classes) ++out.sizes[c - 1];
  std::sort(out.sizes.begin(), out.sizes.end());
  out.classes = std::move(classes);
  return out;
}

namespace {

class BicoloringSearch {
 public:
  explicit BicoloringSearch(const TripleSystem& s)
      : s_(s), n_(s.n()), closing_(static_cast<std::size_t>(s.n())),
        classes_(static_cast<std::size_t>(s.n()), 0) {
    for (std::size_t t = 0; t < s.size(); ++t) {
      closing_[s.triple(t).c].push_back(static_cast<int>(t));
    }
    require_all_ = n_ != 3;
  }

  bool run() { return n_ > 0 && place(0, 0); }
  const std::vector<int>& classes() const { return classes_; }

 private:
  // `top` is the highest class used so far; a vertex may open at most the
  // next class, which fixes vertex 0 to class 1 and the first other class to 2.
  bool place(int v, int top) {
    if (v == n_) return !require_all_ || top == 3;
    if (require_all_ && n_ - v < 3 - top) return false;
    const int limit = std::min(3, top + 1);
    for (int c = 1; c <= limit; ++c) {
      classes_[v] = c;
      if (consistent(v) && place(v + 1, std::max(top, c))) return true;
    }
    classes_[v] = 0;
    return false;
  }

  bool consistent(int v) const {
    for (int t : closing_[v]) {
      const Triple& tr = s_.triple(t);
      const int x = classes_[tr.a];
      const int y = classes_[tr.b];
      const int z = classes_[tr.c];
      const bool mono = x == y && y == z;
      const bool rainbow = x != y && y != z && x != z;
      if (mono || rainbow) return false;
    }
    return true;
  }

  const TripleSystem& s_;
  int n_;
  std::vector<std::vector<int>> closing_;
  std::vector<int> classes_;
  bool require_all_ = true;
};

}  // namespace

std::optional<Bicoloring> bicoloring_search(const TripleSystem& s) {
  BicoloringSearch search(s);
  if (!search.run()) return std::nullopt;
  return verify_bicoloring(s, search.classes());
}

BicoloringBound bicoloring_to_bound(const TripleSystem& s,
                                    const Bicoloring& bi) {
  std::vector<std::vector<int>> parts(3);
  for (int v = 0; v < static_cast<int>(bi.classes.size()); ++v) {
    parts[bi.classes[v] - 1].push_back(v);
  }
  std::size_t a = parts[0].size();
  for (const auto& p : parts) a = std::min(a, p.size());
  if (a == 0) throw StsError(ErrorCode::kEmptyClass, "a bicoloring class is empty");
  for (auto& p : parts) p.resize(a);
  BicoloringBound out;
  out.hole = HoleCertificate::from_parts(std::move(parts));
  if (!verify_hole(s, out.hole)) {
    throw StsError(ErrorCode::kInvalidHole, "bicoloring does not yield a hole");
  }
  out.bound = s.n() - static_cast<int>(a);
  return out;
}

int bicoloring_bound(std::array<int, 3> sizes) {
  std::sort(sizes.begin(), sizes.end());
  if (sizes[0] <= 0) throw StsError(ErrorCode::kEmptyClass, "a class is empty");
  return sizes[1] + sizes[2];
}

}  // namespace sts
