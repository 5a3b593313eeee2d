#pragma once

// q,t-weighted sums over Tesler matrices and the combinatorial sums they
// are compared against: parking functions by (dinv, area) and Dyck paths
// by (area, bounce).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tesler/arith.hpp"
#include "tesler/core.hpp"

namespace tesler {

/// Bivariate polynomial in q, t with big-integer coefficients. Zero
/// coefficients are never stored.
class QTPoly {
 public:
  using Exponent = std::pair<int, int>;  // (q, t)
  using Terms = std::map<Exponent, BigInt>;

  QTPoly() = default;
  QTPoly(BigInt constant);  // NOLINT: constants convert implicitly
  QTPoly(int constant) : QTPoly(BigInt(constant)) {}

  static QTPoly monomial(int q_exp, int t_exp, BigInt coefficient = 1);
  static QTPoly q() { return monomial(1, 0); }
  static QTPoly t() { return monomial(0, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coefficient(int q_exp, int t_exp) const;

  /// Adds c * q^i t^j, dropping the term if it cancels.
  void add_term(int q_exp, int t_exp, const BigInt& c);

  QTPoly& operator+=(const QTPoly& rhs);
  QTPoly& operator-=(const QTPoly& rhs);
  QTPoly& operator*=(const QTPoly& rhs);
  friend QTPoly operator+(QTPoly lhs, const QTPoly& rhs) { return lhs += rhs; }
  friend QTPoly operator-(QTPoly lhs, const QTPoly& rhs) { return lhs -= rhs; }
  friend QTPoly operator*(const QTPoly& lhs, const QTPoly& rhs);
  QTPoly operator-() const;
  friend bool operator==(const QTPoly&, const QTPoly&) = default;

  BigInt evaluate(const BigInt& q, const BigInt& t) const;
  /// q <-> t
  QTPoly swapped() const;
  bool is_symmetric() const { return swapped() == *this; }
  /// The polynomial at t = 0, still as a QTPoly.
  QTPoly at_t_zero() const;

  /// Exact quotient by (1 - q) or (1 - t). Throws InvariantError when the
  /// division leaves a remainder.
  QTPoly divided_by_one_minus_q() const;
  QTPoly divided_by_one_minus_t() const;
  /// Exact quotient by -M = -(1 - q)(1 - t).
  QTPoly divided_by_minus_m() const;

 private:
  Terms terms_;
};

/// "1 + q + 2*q^2*t - t^3", terms in (q, t) order; "0" for the zero poly.
std::string to_string(const QTPoly& p);

/// -M = -(1 - q)(1 - t)
QTPoly minus_m();

/// [b]_{q,t} = sum_{i=0}^{b-1} q^i t^{b-1-i}. Throws std::domain_error for b <= 0.
QTPoly qt_bracket(std::int64_t b);

/// prod over positive entries of (-M)[a_ij], divided exactly by (-M)^n.
/// Throws InvariantError if the division is not exact.
QTPoly haglund_weight(const TeslerMatrix& a);

/// prod_{a_{i,i+1} > 0} ([a+1] - [a]) * prod_{j > i+1, a_ij > 0} (-M)[a_ij].
QTPoly gorsky_negut_weight(const TeslerMatrix& a);

/// Sums of the two weights over T_n(1,...,1). `threads` splits the outer
/// sum; the result does not depend on it.
QTPoly hilbert_dh(int n, unsigned threads = 1);
QTPoly hilbert_alternant(int n, unsigned threads = 1);

class ParkingFunction {
 public:
  /// Throws std::invalid_argument unless the sorted preferences b satisfy
  /// 1 <= b_i <= i.
  explicit ParkingFunction(std::vector<int> preferences);

  std::size_t size() const { return prefs_.size(); }
  const std::vector<int>& preferences() const { return prefs_; }
  std::int64_t area() const;
  std::int64_t dinv() const;

 private:
  // Labeled Dyck path: row r (0-based) holds car labels_[r] in column
  // columns_[r]; area_[r] = r - columns_[r].
  std::vector<int> prefs_;
  std::vector<int> labels_;
  std::vector<int> area_;
};

/// True when the sorted sequence b satisfies 1 <= b_i <= i.
bool is_parking_function(const std::vector<int>& preferences);

/// sum over parking functions of q^dinv t^area.
QTPoly parking_gf(int n);

class DyckPath {
 public:
  /// Throws std::invalid_argument unless a_1 = 0, a_i >= 0 and
  /// a_{i+1} <= a_i + 1.
  explicit DyckPath(std::vector<int> area_sequence);

  std::size_t size() const { return area_seq_.size(); }
  const std::vector<int>& area_sequence() const { return area_seq_; }
  std::int64_t area() const;
  std::int64_t bounce() const;
  /// Diagonal points (j, j) visited by the bounce path after (0, 0), ending at n.
  std::vector<int> bounce_points() const;

 private:
  std::vector<int> area_seq_;
};

/// All Dyck paths of size n, in lexicographic order of area sequences.
std::vector<DyckPath> dyck_paths(int n);

/// sum over Dyck paths of q^area t^bounce.
QTPoly qt_catalan(int n);

/// sum over permutation Tesler matrices in T_n(1,...,1) of the product of
/// their nonzero entries.
BigInt perm_tesler_sum(int n);

}  // namespace tesler
