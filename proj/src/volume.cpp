#include "tesler/volume.hpp"

#include <stdexcept>
#include <string>

#include "tesler/kostant.hpp"

namespace tesler {

// ---------------------------------------------------------------- GammaHalf

GammaHalf GammaHalf::gamma(HalfInteger x) {
  if (x.twice <= 0) {
    throw std::domain_error("Gamma evaluated at a non-positive argument (" + std::to_string(x.twice) +
                            "/2)");
  }
  if (x.twice % 2 == 0) return GammaHalf(Rational(factorial(x.twice / 2 - 1)), 0);
  const std::int64_t m = (x.twice - 1) / 2;
  return GammaHalf(Rational(factorial(2 * m), ipow(BigInt(4), m) * factorial(m)), 1);
}

Rational GammaHalf::to_rational() const {
  if (sqrtpi_exponent_ != 0) {
    throw InvariantError("Gamma product keeps a factor sqrt(pi)^" + std::to_string(sqrtpi_exponent_));
  }
  return coefficient_;
}

GammaHalf& GammaHalf::operator*=(const GammaHalf& rhs) {
  coefficient_ *= rhs.coefficient_;
  sqrtpi_exponent_ += rhs.sqrtpi_exponent_;
  return *this;
}

GammaHalf& GammaHalf::operator/=(const GammaHalf& rhs) {
  coefficient_ /= rhs.coefficient_;
  sqrtpi_exponent_ -= rhs.sqrtpi_exponent_;
  return *this;
}

// -------------------------------------------------------------- Composition

Composition::Composition(std::vector<std::int64_t> parts, std::int64_t total)
    : parts_(std::move(parts)) {
  std::int64_t sum = 0;
  for (std::int64_t p : parts_) {
    if (p < 0) throw std::invalid_argument("composition parts must be nonnegative");
    sum += p;
  }
  if (sum != total) throw std::invalid_argument("composition parts do not sum to the total");
}

// ------------------------------------------------------------ Lidskii sums

namespace {

// Weak compositions of total with parts[k] <= bound[k].
template <typename Visit>
void for_each_bounded_composition(std::int64_t total, const std::vector<std::int64_t>& bound,
                                  Visit&& visit) {
  std::vector<std::int64_t> parts(bound.size());
  std::vector<std::int64_t> suffix_cap(bound.size() + 1, 0);
  for (std::size_t k = bound.size(); k-- > 0;) suffix_cap[k] = suffix_cap[k + 1] + bound[k];
  auto rec = [&](auto& self, std::size_t pos, std::int64_t left) -> void {
    if (pos == parts.size()) {
      if (left == 0) visit(Composition(parts, total));
      return;
    }
    const std::int64_t hi = std::min(left, bound[pos]);
    const std::int64_t lo = std::max<std::int64_t>(0, left - suffix_cap[pos + 1]);
    for (std::int64_t v = lo; v <= hi; ++v) {
      parts[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
}

// K_{A_{n-1}}(i_1 - n + 1, i_2 - n + 2, ..., i_n)
BigInt inner_kostant(KostantCounter& counter, const Composition& i) {
  const std::size_t n = i.parts().size();
  std::vector<BigInt> v;
  v.reserve(n);
  for (std::size_t k = 1; k <= n; ++k) {
    v.emplace_back(i.parts()[k - 1] - static_cast<std::int64_t>(n - k));
  }
  return counter.count(NetflowVector(std::move(v)));
}

}  // namespace

BigInt lidskii_volume(const HookSums& a) {
  const std::size_t n = a.size();
  const std::int64_t total = choose2(static_cast<std::int64_t>(n));
  std::vector<std::int64_t> bound(n);
  for (std::size_t k = 1; k <= n; ++k) bound[k - 1] = (a(k) == 0) ? 0 : total;
  KostantCounter counter;
  BigInt volume = 0;
  for_each_bounded_composition(total, bound, [&](const Composition& i) {
    BigInt term = multinomial(i.parts());
    for (std::size_t k = 1; k <= n; ++k) term *= ipow(a(k), i.parts()[k - 1]);
    volume += term * inner_kostant(counter, i);
  });
  return volume;
}

BigInt lidskii_count(const HookSums& a) {
  const std::size_t n = a.size();
  const std::int64_t total = choose2(static_cast<std::int64_t>(n));
  std::vector<std::int64_t> bound(n);
  std::vector<BigInt> tops(n);
  for (std::size_t k = 1; k <= n; ++k) {
    tops[k - 1] = a(k) + static_cast<std::int64_t>(n - k);
    bound[k - 1] = tops[k - 1] > total ? total : static_cast<std::int64_t>(tops[k - 1]);
  }
  KostantCounter counter;
  BigInt count = 0;
  for_each_bounded_composition(total, bound, [&](const Composition& i) {
    BigInt term = 1;
    for (std::size_t k = 0; k < n; ++k) term *= binomial(tops[k], i.parts()[k]);
    count += term * inner_kostant(counter, i);
  });
  return count;
}

// ------------------------------------------------------------ closed forms

BigInt catalan_product(int count) {
  BigInt p = 1;
  for (int i = 0; i < count; ++i) p *= catalan(i);
  return p;
}

BigInt syt_staircase(int n) {
  if (n < 1) throw std::domain_error("staircase needs n >= 1");
  BigInt denominator = 1;
  for (int k = 1; k <= n - 1; ++k) denominator *= ipow(BigInt(2 * k - 1), n - k);
  const BigInt numerator = factorial(choose2(n));
  if (numerator % denominator != 0) throw InvariantError("staircase hook product is not integral");
  return numerator / denominator;
}

BigInt syt_count(const std::vector<int>& shape) {
  for (std::size_t r = 0; r < shape.size(); ++r) {
    if (shape[r] <= 0 || (r > 0 && shape[r] > shape[r - 1])) {
      throw std::invalid_argument("shape must be a weakly decreasing list of positive parts");
    }
  }
  std::int64_t cells = 0;
  BigInt hooks = 1;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    for (int c = 0; c < shape[r]; ++c) {
      std::int64_t leg = 0;
      for (std::size_t below = r + 1; below < shape.size() && shape[below] > c; ++below) ++leg;
      hooks *= (shape[r] - c - 1) + leg + 1;
      ++cells;
    }
  }
  return factorial(cells) / hooks;
}

BigInt vol_ones_closed(int n) {
  if (n < 1) throw std::domain_error("vol_ones_closed needs n >= 1");
  const std::int64_t d = choose2(n);
  BigInt denominator = 1;
  for (int i = 1; i <= n; ++i) denominator *= factorial(i);
  const Rational product_form(factorial(d) * ipow(BigInt(2), d), denominator);
  const BigInt first = require_integral(product_form, "C(n,2)! 2^C(n,2) / prod i!");
  const BigInt second = syt_staircase(n) * catalan_product(n);
  if (first != second) {
    throw InvariantError("closed forms for vol Tes_n(1) disagree: " + first.str() + " vs " +
                         second.str());
  }
  return first;
}

BigInt cry_volume(int n) {
  if (n < 2) throw std::domain_error("cry_volume needs n >= 2");
  const BigInt value = catalan_product(n - 1);

  std::vector<BigInt> e1(static_cast<std::size_t>(n), BigInt(0));
  e1[0] = 1;
  const BigInt by_lidskii = lidskii_volume(HookSums(std::move(e1)));

  std::vector<BigInt> staircase;
  for (int i = 0; i <= n - 2; ++i) staircase.emplace_back(i);
  staircase.emplace_back(-choose2(n - 1));
  const BigInt by_kostant = kostant(NetflowVector(std::move(staircase)));

  if (by_lidskii != value || by_kostant != value) {
    throw InvariantError("CRY volume mismatch: Catalan product " + value.str() + ", Lidskii " +
                         by_lidskii.str() + ", Kostant " + by_kostant.str());
  }
  return value;
}

// ---------------------------------------------------- C_n(l, a, c) recursion

namespace {

// Ratio C_n(k) / C_n(k-1) = num(k) / den(k).
Rational step_numerator(int n, int k, int a, int c) { return Rational(a - 1) + Rational(c * (n - k), 2); }

Rational step_denominator(int n, int k, int a, int c) {
  return Rational(static_cast<std::int64_t>(a - 1) * n + c * choose2(n) - k + 1);
}

Rational c_recursive(int n, int ell, int a, int c) {
  if (a == 0) return 0;  // C_n(l, 0, c) = 0
  if (n == 1) c = 0;     // no Vandermonde factor
  if (ell == n) return c_recursive(n, 0, a - 1, c);  // C_n(n, a, c) = C_n(0, a-1, c)

  // Climb from `top` down to ell: C(k-1) = C(k) * den(k) / num(k).
  auto descend = [&](Rational value, int top) {
    for (int k = top; k > ell; --k) {
      value *= step_denominator(n, k, a, c);
      value /= step_numerator(n, k, a, c);
    }
    return value;
  };

  if (a > 1) return descend(c_recursive(n, 0, a - 1, c), n);
  // a == 1
  if (c == 0) {
    if (ell != 0) throw std::domain_error("C_n(l, 1, 0) is determined only for l = 0 or l = n");
    return Rational(factorial(n));  // C_n(0, 1, 0) = n!
  }
  return descend(c_recursive(n - 1, 0, c, c), n - 1);  // C_n(n-1, 1, c) = C_{n-1}(0, c, c)
}

}  // namespace

Rational c_constant(int n, int ell, int a, int c) {
  if (n < 1) throw std::domain_error("C_n needs n >= 1");
  if (ell < 0 || ell > n) throw std::domain_error("C_n(l, a, c) needs 0 <= l <= n");
  if (a < 0 || c < 0) throw std::domain_error("C_n(l, a, c) needs a, c >= 0");
  if (a == 0 && c == 0) throw std::domain_error("C_n(l, 0, 0) is outside the recursion's domain");
  return c_recursive(n, ell, a, c);
}

Rational l_value_gamma(int n, int a, int c) {
  if (n < 2) throw std::domain_error("L_n needs n >= 2");
  if (a < 1 || c < 0) throw std::domain_error("L_n(a, c) needs a >= 1 and c >= 0");
  GammaHalf product(Rational(factorial(static_cast<std::int64_t>(a - 1) * n + c * choose2(n))), 0);
  for (int i = 0; i < n; ++i) {
    product *= GammaHalf::gamma({2 + c});
    product /= GammaHalf::gamma({2 + static_cast<std::int64_t>(i + 1) * c});
    product /= GammaHalf::gamma({2 * static_cast<std::int64_t>(a) + static_cast<std::int64_t>(i) * c});
  }
  return product.to_rational();
}

Rational l_value(int n, int a, int c) {
  if (n < 2) throw std::domain_error("L_n needs n >= 2");
  if (a < 1 || c < 0) throw std::domain_error("L_n(a, c) needs a >= 1 and c >= 0");
  const Rational by_recursion = c_constant(n, 0, a, c) / Rational(factorial(n));
  const Rational by_gamma = l_value_gamma(n, a, c);
  if (by_recursion != by_gamma) {
    throw InvariantError("L_" + std::to_string(n) + "(" + std::to_string(a) + "," + std::to_string(c) +
                         "): recursion gives " + by_recursion.str() + ", Gamma product gives " +
                         by_gamma.str());
  }
  return by_recursion;
}

Rational morris_m(int n, int a, int b, int c) {
  if (n < 2) throw std::domain_error("M_n needs n >= 2");
  if (a < 0 || b < 0 || c < 0) throw std::domain_error("M_n(a, b, c) needs nonnegative parameters");
  GammaHalf product;
  for (std::int64_t j = 0; j < n; ++j) {
    product *= GammaHalf::gamma({2 + c});
    product *= GammaHalf::gamma({2 * (a + b - 1) + (n + j - 1) * c});
    product /= GammaHalf::gamma({2 + (j + 1) * c});
    product /= GammaHalf::gamma({2 * a + j * c});
    product /= GammaHalf::gamma({2 * b + j * c});
  }
  return product.to_rational();
}

BigInt pitman_stanley_count(int n) {
  if (n < 1) throw std::domain_error("pitman_stanley_count needs n >= 1");
  const auto size = static_cast<std::size_t>(n);
  BigInt count = 0;
  for_each_tesler(HookSums::ones(size), [&](const TeslerMatrix& m) {
    for (std::size_t i = 1; i <= size; ++i) {
      for (std::size_t j = i + 2; j <= size; ++j) {
        if (m(i, j) != 0) return true;
      }
    }
    ++count;
    return true;
  });
  return count;
}

}  // namespace tesler
