#pragma once

// Normalized volumes of flow polytopes on the complete graph, closed-form
// products for the all-ones case, and the constants C_n(l, a, c) behind
// the constant-term identity, evaluated two independent ways.

#include <cstdint>
#include <vector>

#include "tesler/arith.hpp"
#include "tesler/core.hpp"

namespace tesler {

/// A half-integer h, stored as 2h.
struct HalfInteger {
  std::int64_t twice;
};

/// rational * (sqrt(pi))^k, closed under products and quotients.
class GammaHalf {
 public:
  GammaHalf() = default;
  GammaHalf(Rational coefficient, int sqrtpi_exponent)
      : coefficient_(std::move(coefficient)), sqrtpi_exponent_(sqrtpi_exponent) {}

  /// Gamma(x) for x a positive integer or half-integer:
  /// Gamma(m) = (m-1)!, Gamma(m + 1/2) = (2m)! / (4^m m!) sqrt(pi).
  /// Throws std::domain_error for x <= 0 (poles, and negative half-integers
  /// are outside what the product formulas need).
  static GammaHalf gamma(HalfInteger x);

  const Rational& coefficient() const { return coefficient_; }
  int sqrtpi_exponent() const { return sqrtpi_exponent_; }

  /// Throws InvariantError unless the sqrt(pi) exponent is 0.
  Rational to_rational() const;

  GammaHalf& operator*=(const GammaHalf& rhs);
  GammaHalf& operator/=(const GammaHalf& rhs);
  friend GammaHalf operator*(GammaHalf lhs, const GammaHalf& rhs) { return lhs *= rhs; }
  friend GammaHalf operator/(GammaHalf lhs, const GammaHalf& rhs) { return lhs /= rhs; }

 private:
  Rational coefficient_ = 1;
  int sqrtpi_exponent_ = 0;
};

/// Weak composition with a fixed number of parts and a fixed total.
class Composition {
 public:
  /// Throws std::invalid_argument on a negative part or a wrong total.
  Composition(std::vector<std::int64_t> parts, std::int64_t total);
  const std::vector<std::int64_t>& parts() const { return parts_; }

 private:
  std::vector<std::int64_t> parts_;
};

/// Normalized volume of Flow_n(a) = Tes_n(a) by the Lidskii volume sum.
/// Compositions giving a factor 0^{i_k} with i_k > 0 are skipped.
BigInt lidskii_volume(const HookSums& a);

/// K(a, -sum a) by the binomial-weighted Lidskii sum.
BigInt lidskii_count(const HookSums& a);

/// Volume of Tes_n(1,...,1) from the two closed forms
///   C(n,2)! 2^{C(n,2)} / prod_{i=1}^n i!   and   f^{staircase} prod_{i<n} Cat(i);
/// throws InvariantError if they differ.
BigInt vol_ones_closed(int n);

/// prod_{i=0}^{n-2} Cat(i), checked against the Lidskii volume of
/// (1,0,...,0) and against K(0,1,...,n-2,-C(n-1,2)). Throws InvariantError
/// on disagreement.
BigInt cry_volume(int n);

/// Product of Catalan numbers Cat(0)...Cat(count-1).
BigInt catalan_product(int count);

/// Number of standard Young tableaux of shape (n-1, n-2, ..., 1) by the
/// staircase hook product.
BigInt syt_staircase(int n);

/// Number of standard Young tableaux of a partition, by the hook-length
/// formula. Throws std::invalid_argument if the shape is not a partition.
BigInt syt_count(const std::vector<int>& shape);

/// C_n(l, a, c) from the recursion alone (cases c = 0 / a > 1 / a = 1).
/// Throws std::domain_error outside the recursion's domain: n < 1, l > n,
/// a = c = 0, or a = 1, c = 0, 0 < l < n.
Rational c_constant(int n, int ell, int a, int c);

/// L_n(a, c) through the Gamma product. Throws std::domain_error if n < 2
/// or a < 1; InvariantError on a residual sqrt(pi).
Rational l_value_gamma(int n, int a, int c);

/// L_n(a, c) = C_n(0, a, c) / n!, cross-checked against l_value_gamma.
/// Throws InvariantError on disagreement.
Rational l_value(int n, int a, int c);

/// Morris-type constant term M_n(a, b, c) through its Gamma product.
/// Throws std::domain_error on a Gamma pole or n < 2.
Rational morris_m(int n, int a, int b, int c);

/// Matrices in T_n(1,...,1) supported on the diagonal and superdiagonal.
BigInt pitman_stanley_count(int n);

}  // namespace tesler
