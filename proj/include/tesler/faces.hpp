#pragma once

// Face poset of Tes_n(a) through a-Tesler tableaux.
//
// Faces correspond to tableaux under the support map, with inclusion of
// faces matching the componentwise order and dim(face) = sum_i (r_i - 1),
// where r_i is the number of 1's in row i (1 for a zero row). Vertices are
// the zero-dimensional tableaux; edges the one-dimensional ones.
//
// Operations here take hook sums with a_1 > 0 (or the single-entry vector,
// a point when it is (0)). Strip leading zeros with reduce_hooks first.

#include <cstdint>
#include <vector>

#include "tesler/arith.hpp"
#include "tesler/core.hpp"

namespace tesler {

/// Drops leading zero entries; (0,...,0) becomes (0).
HookSums reduce_hooks(const HookSums& a);

/// Checks conditions (1)-(3). Throws std::invalid_argument when the filling
/// does not have the reverse-staircase shape for a, or holds a value other
/// than 0/1.
bool check_tableau(const HookSums& a, const std::vector<std::vector<int>>& rows);

std::size_t tableau_dim(const TeslerTableau& t);

/// Componentwise maximum. Throws std::invalid_argument if the tableaux are
/// defined against different hook sums.
TeslerTableau tableau_max(const TeslerTableau& lhs, const TeslerTableau& rhs);

/// All a-Tesler tableaux in lexicographic order of their row-major strings.
std::vector<TeslerTableau> enumerate_tableaux(const HookSums& a);

class FacePoset {
 public:
  explicit FacePoset(std::vector<TeslerTableau> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<TeslerTableau>& elements() const { return elements_; }
  const TeslerTableau& element(std::size_t idx) const { return elements_[idx]; }
  std::size_t dim(std::size_t idx) const { return dims_[idx]; }
  bool leq(std::size_t lhs, std::size_t rhs) const { return elements_[lhs].leq(elements_[rhs]); }

  std::size_t dimension() const { return max_dim_; }
  /// Indices of elements with no other element below them.
  std::vector<std::size_t> minimal_elements() const;
  /// Indices of elements of a given dimension, in element order.
  std::vector<std::size_t> of_dimension(std::size_t d) const;
  std::vector<BigInt> f_vector() const;

 private:
  std::vector<TeslerTableau> elements_;
  std::vector<std::size_t> dims_;
  std::size_t max_dim_ = 0;
};

/// Largest n for which build_face_poset is used by f_vector.
inline constexpr std::size_t kExplicitPosetLimit = 6;

FacePoset build_face_poset(const HookSums& a);

/// f-vector of a product of simplices of the given dimensions.
std::vector<BigInt> simplex_product_f_vector(const std::vector<int>& dims);

/// f_0..f_dim; the polytope itself is counted, the empty face is not. For
/// all-positive a with n > kExplicitPosetLimit the product-of-simplices
/// convolution replaces explicit enumeration.
std::vector<BigInt> f_vector(const HookSums& a);

/// The matrix B_T whose support is the set of 1-cells of a zero-dimensional
/// tableau. Throws std::invalid_argument if dim(T) != 0.
TeslerMatrix vertex_matrix(const TeslerTableau& t);

/// Vertices of Tes_n(a), ordered as the tableaux are.
std::vector<TeslerMatrix> vertices(const HookSums& a);

/// Signature criterion: n <= 3 or the signature is one of
/// +^n, +^{n-1}0, +0+^{n-2}, +0+^{n-3}0.
bool is_simple(const HookSums& a);

struct VertexDegree {
  TeslerTableau vertex;
  std::size_t degree;
};

/// Edge count per vertex, read off the face poset. Throws InvariantError
/// if a one-dimensional face does not contain exactly two vertices.
std::vector<VertexDegree> vertex_degrees(const HookSums& a);

/// Coefficients of sum_i f_i (x - 1)^i. Throws std::invalid_argument if the
/// polytope is not simple.
std::vector<BigInt> h_vector(const HookSums& a);

/// Coefficients of sum_i f_i (x - 1)^i for an arbitrary f-vector.
std::vector<BigInt> h_from_f(const std::vector<BigInt>& f);

/// sum over permutation Tesler matrices of x^{sum_i (n - b_i)}, where row
/// i is supported in column b_i. Requires all a_i > 0.
UniPoly outdegree_gf(const HookSums& a);

}  // namespace tesler
