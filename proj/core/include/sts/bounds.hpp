#ifndef STS_BOUNDS_HPP
#define STS_BOUNDS_HPP

#include <array>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sts {

struct ClosedFormBounds {
  int n = 0;
  /// ceil(2n/3) + 1: lower bound on mc_3 for every Steiner system.
  int gyarfas = 0;
  /// floor(n/3) - 1: upper bound on the 3-partite hole number.
  int alpha_upper = 0;
  /// With a known 3-partite hole number a: n - a >= mc_3 >= n - 2a.
  std::optional<int> hole_upper;
  std::optional<int> hole_lower;
  /// n/2 + (n/6) sqrt(1 + 8/n), the relaxed-program lower bound on mc_3.
  double z2 = 0.0;
  bool z2_exceeds = false;  // z2 > (2n+1)/3
};

ClosedFormBounds closed_form_bounds(int n, std::optional<int> alpha_star3 = {});

/// Exact form of z2 > (2n+1)/3: after squaring, 4n > 4, i.e. n > 1.
bool z2_exceeds_exact(long long n);

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct CdrTerm {
  BigInt m;
  BigInt n;
  BigRational ratio;  // m / n
  double ratio_approx = 0.0;
};

/// M_0 = 24, N_0 = 33; M_k = M^2 + 2MN, N_k = 2M^2 + N^2. Terms 0..k_max.
std::vector<CdrTerm> cdr_sequence(int k_max);

/// Class sizes produced by combining an (a,b,c)- and an (x,y,z)-bicolorable
/// system: (ay+bz+cx, az+bx+cy, ax+by+cz).
std::array<BigInt, 3> cdr_product(const std::array<BigInt, 3>& abc,
                                  const std::array<BigInt, 3>& xyz);

/// r_k from r_{k-1} alone: r (r + 2) / (2 r^2 + 1).
BigRational cdr_ratio_step(const BigRational& r);

}  // namespace sts

#endif  // STS_BOUNDS_HPP
