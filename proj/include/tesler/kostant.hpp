#pragma once

// Kostant partition function of the complete graph and Tesler matrix
// counting/enumeration.

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "tesler/arith.hpp"
#include "tesler/core.hpp"

namespace tesler {

/// Netflow on vertices 1..m of the complete graph k_m; entries sum to 0.
class NetflowVector {
 public:
  /// Throws std::invalid_argument if empty or the entries do not sum to 0.
  explicit NetflowVector(std::vector<BigInt> values);
  static NetflowVector from_ints(std::initializer_list<std::int64_t> values);

  std::size_t size() const { return values_.size(); }
  const BigInt& operator()(std::size_t k) const { return values_.at(k - 1); }
  const std::vector<BigInt>& values() const { return values_; }

  friend bool operator==(const NetflowVector&, const NetflowVector&) = default;

 private:
  std::vector<BigInt> values_;
};

/// (a_1, ..., a_n, -sum a).
NetflowVector augmented_netflow(const HookSums& a);

/// Reverse the vertex order and negate: the netflow of the reversed flows.
NetflowVector reversed(const NetflowVector& v);

/// Memoized Kostant partition function. Vertices are processed in order;
/// the supply at a vertex (its netflow plus accumulated inflow) is spread
/// over its outgoing edges as a weak composition, and the memo is keyed on
/// the residual netflow of the vertices not yet processed.
///
/// An instance is not thread-safe; use one per thread. Reusing an instance
/// across calls shares the memo.
class KostantCounter {
 public:
  BigInt count(const NetflowVector& v);
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct KeyHash {
    std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept;
  };

  const BigInt& count_residual(const std::vector<std::int64_t>& residual);
  void distribute(std::int64_t supply, std::vector<std::int64_t>& tail, std::size_t pos,
                  std::int64_t prefix, BigInt& total);

  std::unordered_map<std::vector<std::int64_t>, BigInt, KeyHash> memo_;
};

/// Number of nonnegative integer flows on k_m with netflow v.
BigInt kostant(const NetflowVector& v);

/// Counts v and its reversal independently; throws InvariantError if they
/// differ, otherwise returns the common value.
BigInt kostant_reversed_equal(const NetflowVector& v);

/// |T_n(a)| = K(a, -sum a).
BigInt count_tesler(const HookSums& a);

/// Visits T_n(a) in lexicographic order of the flattened rows. The visitor
/// returns false to stop; the function returns false if stopped early.
bool for_each_tesler(const HookSums& a, const std::function<bool(const TeslerMatrix&)>& visit);

std::vector<TeslerMatrix> enumerate_tesler(const HookSums& a);

/// T_n(a) as a sum over T_{n-1}(a_1..a_{n-1}) of prod_i (1 + b_ii).
/// Throws std::invalid_argument when n < 2.
BigInt count_via_projection(const HookSums& a);

/// Tesler matrices with at most one nonzero entry per row, built directly
/// from their supports. Output is sorted lexicographically. Throws
/// std::invalid_argument if some a_i = 0.
std::vector<TeslerMatrix> permutation_teslers(const HookSums& a);

}  // namespace tesler
