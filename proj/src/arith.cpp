#include "tesler/arith.hpp"

#include <limits>

namespace tesler {

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(const BigInt& top, std::int64_t k) {
  if (top < 0) throw std::domain_error("binomial with negative top");
  if (k < 0 || BigInt(k) > top) return 0;
  BigInt r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    r *= (top - i);
    r /= (i + 1);
  }
  return r;
}

BigInt catalan(std::int64_t n) {
  if (n < 0) throw std::domain_error("catalan of a negative number");
  return binomial(BigInt(2 * n), n) / (n + 1);
}

BigInt multinomial(std::span<const std::int64_t> parts) {
  BigInt r = 1;
  std::int64_t running = 0;
  for (std::int64_t p : parts) {
    if (p < 0) throw std::domain_error("multinomial with a negative part");
    running += p;
    r *= binomial(BigInt(running), p);
  }
  return r;
}

BigInt ipow(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw std::domain_error("negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

std::int64_t to_int64(const BigInt& value, std::string_view what) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

BigInt require_integral(const Rational& value, std::string_view what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw InvariantError(std::string(what) + " is not integral: " + to_string(value));
  }
  return boost::multiprecision::numerator(value);
}

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value) { return value.str(); }

UniPoly poly_mul(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  UniPoly out(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs[i] * rhs[j];
  }
  return out;
}

UniPoly q_factorial(int n) {
  UniPoly r{1};
  for (int i = 1; i <= n; ++i) r = poly_mul(r, UniPoly(static_cast<std::size_t>(i), BigInt(1)));
  return r;
}

}  // namespace tesler
