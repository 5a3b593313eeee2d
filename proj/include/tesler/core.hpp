#pragma once

// Domain types: hook sums, Tesler matrices, flows on the complete graph,
// transportation points, Tesler tableaux, and the maps between the first
// three. All indices at this interface are 1-based.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tesler/arith.hpp"

namespace tesler {

/// Offset of cell (i, j), 1 <= i <= j <= n, in a row-major packed upper
/// triangle.
inline std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

inline std::size_t tri_size(std::size_t n) { return n * (n + 1) / 2; }

class HookSums {
 public:
  /// Throws std::invalid_argument on an empty vector or a negative entry.
  explicit HookSums(std::vector<BigInt> values);

  static HookSums ones(std::size_t n);
  static HookSums from_ints(std::span<const std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  /// a_k, 1-based.
  const BigInt& operator()(std::size_t k) const;
  std::span<const BigInt> values() const { return values_; }
  BigInt total() const;
  bool all_positive() const;

  /// Entries as machine integers, for enumeration bounds.
  std::vector<std::int64_t> small_values() const;

  friend bool operator==(const HookSums&, const HookSums&) = default;

 private:
  std::vector<BigInt> values_;
};

std::string to_string(const HookSums& a);

enum class Sign : std::uint8_t { Zero, Plus };
using Signature = std::vector<Sign>;

Signature signature(const HookSums& a);
/// Renders as a string over {+, 0}, e.g. "+0+0".
std::string to_string(const Signature& s);
/// Inverse of to_string. Throws std::invalid_argument on other characters.
Signature parse_signature(std::string_view text);
/// Hook sums with 1 for PLUS and 0 for ZERO.
HookSums representative_hooks(const Signature& s);

/// Upper-triangular nonnegative integer matrix, no hook-sum constraint.
class UpperTriangular {
 public:
  explicit UpperTriangular(std::size_t n);
  /// Throws std::invalid_argument unless rows[i] has n - i entries, all >= 0.
  static UpperTriangular from_rows(const std::vector<std::vector<BigInt>>& rows);

  std::size_t size() const { return n_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const;
  BigInt& operator()(std::size_t i, std::size_t j);
  std::span<const BigInt> packed() const { return entries_; }
  std::vector<std::vector<BigInt>> rows() const;

  friend bool operator==(const UpperTriangular&, const UpperTriangular&) = default;
  friend auto operator<=>(const UpperTriangular& l, const UpperTriangular& r) {
    return l.entries_ <=> r.entries_;
  }

 private:
  std::size_t n_;
  std::vector<BigInt> entries_;
};

/// Row k sum minus the off-diagonal part of column k. Throws
/// std::out_of_range unless 1 <= k <= n.
BigInt hook_sum(const UpperTriangular& m, std::size_t k);

class TeslerMatrix {
 public:
  /// Throws std::invalid_argument if sizes differ or some hook sum is off.
  TeslerMatrix(HookSums hooks, UpperTriangular entries);
  static TeslerMatrix from_rows(const HookSums& hooks,
                                const std::vector<std::vector<BigInt>>& rows);

  std::size_t size() const { return entries_.size(); }
  const HookSums& hooks() const { return hooks_; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const UpperTriangular& entries() const { return entries_; }
  std::vector<std::vector<BigInt>> rows() const { return entries_.rows(); }
  std::size_t positive_count() const;
  /// True when every row has at most one nonzero entry.
  bool is_permutation_tesler() const;

  friend bool operator==(const TeslerMatrix& l, const TeslerMatrix& r) {
    return l.hooks_ == r.hooks_ && l.entries_ == r.entries_;
  }
  /// Lexicographic on the flattened rows.
  friend auto operator<=>(const TeslerMatrix& l, const TeslerMatrix& r) {
    return l.entries_ <=> r.entries_;
  }

 private:
  HookSums hooks_;
  UpperTriangular entries_;
};

/// Nonnegative flow on the complete graph with vertices 1..n+1.
class Flow {
 public:
  /// edge_values holds f(i,j) for 1 <= i < j <= n+1 in lexicographic edge
  /// order. The netflow is derived; throws std::invalid_argument on negative
  /// values or a size mismatch.
  Flow(std::size_t n, std::vector<BigInt> edge_values);

  /// Matrix size n; the graph has n + 1 vertices.
  std::size_t size() const { return n_; }
  std::size_t vertex_count() const { return n_ + 1; }
  const BigInt& operator()(std::size_t i, std::size_t j) const;
  std::span<const BigInt> edge_values() const { return values_; }
  /// Netflow at vertices 1..n+1 (0-based vector of length n+1).
  const std::vector<BigInt>& netflow() const { return netflow_; }

  friend bool operator==(const Flow&, const Flow&) = default;

 private:
  std::size_t edge_index(std::size_t i, std::size_t j) const;

  std::size_t n_;
  std::vector<BigInt> values_;
  std::vector<BigInt> netflow_;
};

/// Square nonnegative matrix whose i-th row and column both sum to s_i and
/// which vanishes strictly below the subdiagonal.
class TransportationPoint {
 public:
  /// Throws std::invalid_argument on a non-square matrix, a negative entry,
  /// a nonzero entry with i - j >= 2, or a row sum differing from its column
  /// sum.
  explicit TransportationPoint(std::vector<std::vector<BigInt>> rows);

  std::size_t size() const { return rows_.size(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return rows_[i - 1][j - 1]; }
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }
  const std::vector<BigInt>& marginals() const { return marginals_; }

  friend bool operator==(const TransportationPoint&, const TransportationPoint&) = default;

 private:
  std::vector<std::vector<BigInt>> rows_;
  std::vector<BigInt> marginals_;
};

Flow tesler_to_flow(const TeslerMatrix& m);
/// Throws std::invalid_argument if a netflow coordinate 1..n is negative.
TeslerMatrix flow_to_tesler(const Flow& f);

/// Throws std::invalid_argument when a_1 = 0.
TransportationPoint tesler_to_transportation(const TeslerMatrix& m);
/// Throws std::invalid_argument when the marginals are not the partial sums
/// of a hook vector with a_1 > 0.
TeslerMatrix transportation_to_tesler(const TransportationPoint& p);

/// Maximum n for which a tableau fits in its 64-bit cell mask.
inline constexpr std::size_t kMaxTableauSize = 10;

/// 0/1 filling of the reverse staircase that satisfies the three a-Tesler
/// tableau conditions. Cell (i, j) is bit tri_index(n, i, j) of the mask.
class TeslerTableau {
 public:
  /// Throws std::invalid_argument if the filling violates a condition.
  TeslerTableau(HookSums hooks, std::uint64_t mask);
  static TeslerTableau from_rows(HookSums hooks, const std::vector<std::vector<int>>& rows);

  std::size_t size() const { return hooks_.size(); }
  const HookSums& hooks() const { return hooks_; }
  std::uint64_t mask() const { return mask_; }
  bool operator()(std::size_t i, std::size_t j) const;
  /// Number of 1's in row i.
  std::size_t ones_in_row(std::size_t i) const;
  std::vector<std::vector<int>> rows() const;

  /// Componentwise order.
  bool leq(const TeslerTableau& other) const { return (mask_ & ~other.mask_) == 0; }

  friend bool operator==(const TeslerTableau& l, const TeslerTableau& r) {
    return l.mask_ == r.mask_ && l.hooks_ == r.hooks_;
  }

 private:
  HookSums hooks_;
  std::uint64_t mask_;
};

/// Lexicographic comparison of the row-major 0/1 strings.
bool lex_less(const TeslerTableau& l, const TeslerTableau& r);

/// Mask of the cells in row i of an n-row staircase.
std::uint64_t row_mask(std::size_t n, std::size_t i);

/// The three conditions on a raw mask. Requires n <= kMaxTableauSize.
bool satisfies_tableau_conditions(const HookSums& a, std::uint64_t mask);

}  // namespace tesler
