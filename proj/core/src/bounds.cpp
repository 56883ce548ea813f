#include "sts/bounds.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sts {

ClosedFormBounds closed_form_bounds(int n, std::optional<int> alpha_star3) {
  ClosedFormBounds out;
  out.n = n;
  out.gyarfas = (2 * n + 2) / 3 + 1;
  out.alpha_upper = n / 3 - 1;
  if (alpha_star3) {
    out.hole_upper = n - *alpha_star3;
    out.hole_lower = n - 2 * *alpha_star3;
  }
  out.z2 = n / 2.0 + (n / 6.0) * std::sqrt(1.0 + 8.0 / n);
  out.z2_exceeds = z2_exceeds_exact(n);
  return out;
}

// n/2 + (n/6) s > (2n+1)/3 with s = sqrt(1 + 8/n) is n s > n + 2, i.e.
// n^2 (1 + 8/n) > (n+2)^2, i.e. 8n > 4n + 4.
bool z2_exceeds_exact(long long n) { return n > 1; }

std::vector<CdrTerm> cdr_sequence(int k_max) {
  using Float = boost::multiprecision::cpp_bin_float_50;
  std::vector<CdrTerm> out;
  BigInt m = 24;
  BigInt n = 33;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) {
      const BigInt next_m = m * m + 2 * m * n;
      const BigInt next_n = 2 * m * m + n * n;
      m = next_m;
      n = next_n;
    }
    CdrTerm term;
    term.m = m;
    term.n = n;
    term.ratio = BigRational(m, n);
    term.ratio_approx = static_cast<double>(Float(m) / Float(n));
    out.push_back(std::move(term));
  }
  return out;
}

std::array<BigInt, 3> cdr_product(const std::array<BigInt, 3>& abc,
                                  const std::array<BigInt, 3>& xyz) {
  const auto& [a, b, c] = abc;
  const auto& [x, y, z] = xyz;
  return {a * y + b * z + c * x, a * z + b * x + c * y, a * x + b * y + c * z};
}

BigRational cdr_ratio_step(const BigRational& r) {
  return r * (r + 2) / (2 * r * r + 1);
}

}  // namespace sts
