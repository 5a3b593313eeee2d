#pragma once

// Exact integer/rational helpers shared by every module.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tesler {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when two routes that must agree do not, or a derived structure
/// violates an invariant it is guaranteed to satisfy. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

BigInt factorial(std::int64_t n);

/// C(top, k); zero when k < 0 or k > top. Requires top >= 0.
BigInt binomial(const BigInt& top, std::int64_t k);

BigInt catalan(std::int64_t n);

/// (sum parts)! / prod parts!
BigInt multinomial(std::span<const std::int64_t> parts);

/// base^exp with 0^0 = 1.
BigInt ipow(const BigInt& base, std::int64_t exp);

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

/// Narrowing for loop bounds and memo keys. Throws std::overflow_error.
std::int64_t to_int64(const BigInt& value, std::string_view what);

/// Throws InvariantError if the value is not an integer.
BigInt require_integral(const Rational& value, std::string_view what);

std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Dense univariate polynomial, coefficient of x^i at index i.
using UniPoly = std::vector<BigInt>;

UniPoly poly_mul(const UniPoly& lhs, const UniPoly& rhs);

/// [n]!_x = prod_{i=1}^n (1 + x + ... + x^{i-1}).
UniPoly q_factorial(int n);

/// Calls visit(parts) for every weak composition of total into parts.size()
/// pieces, in lexicographic order. visit returns false to stop early.
template <typename Visit>
bool for_each_weak_composition(std::int64_t total, std::vector<std::int64_t>& parts,
                               std::size_t pos, Visit&& visit) {
  if (pos + 1 == parts.size()) {
    parts[pos] = total;
    return visit(static_cast<const std::vector<std::int64_t>&>(parts));
  }
  for (std::int64_t v = 0; v <= total; ++v) {
    parts[pos] = v;
    if (!for_each_weak_composition(total - v, parts, pos + 1, visit)) return false;
  }
  return true;
}

}  // namespace tesler
