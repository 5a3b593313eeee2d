#include "tesler/faces.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>

#include "tesler/kostant.hpp"

namespace tesler {

namespace {

void require_reduced(const HookSums& a) {
  if (a.size() > 1 && a(1) == 0) {
    throw std::invalid_argument("hook sums must have a_1 > 0; apply reduce_hooks first");
  }
  if (a.size() > kMaxTableauSize) {
    throw std::invalid_argument("tableau combinatorics supports n <= " +
                                std::to_string(kMaxTableauSize));
  }
}

std::uint64_t bit(std::size_t n, std::size_t i, std::size_t j) {
  return std::uint64_t{1} << tri_index(n, i, j);
}

std::size_t mask_dim(std::size_t n, std::uint64_t mask) {
  std::size_t d = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto ones = static_cast<std::size_t>(std::popcount(mask & row_mask(n, i)));
    if (ones > 1) d += ones - 1;
  }
  return d;
}

}  // namespace

HookSums reduce_hooks(const HookSums& a) {
  std::size_t first = 0;
  while (first + 1 < a.size() && a.values()[first] == 0) ++first;
  return HookSums(std::vector<BigInt>(a.values().begin() + static_cast<long>(first), a.values().end()));
}

bool check_tableau(const HookSums& a, const std::vector<std::vector<int>>& rows) {
  const std::size_t n = a.size();
  if (rows.size() != n) throw std::invalid_argument("filling has the wrong number of rows");
  if (n > kMaxTableauSize) throw std::invalid_argument("tableau size exceeds the supported maximum");
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (rows[i - 1].size() != n - i + 1) throw std::invalid_argument("filling row has the wrong length");
    for (std::size_t j = i; j <= n; ++j) {
      const int v = rows[i - 1][j - i];
      if (v != 0 && v != 1) throw std::invalid_argument("filling entries must be 0 or 1");
      if (v == 1) mask |= bit(n, i, j);
    }
  }
  return satisfies_tableau_conditions(a, mask);
}

std::size_t tableau_dim(const TeslerTableau& t) { return mask_dim(t.size(), t.mask()); }

TeslerTableau tableau_max(const TeslerTableau& lhs, const TeslerTableau& rhs) {
  if (!(lhs.hooks() == rhs.hooks())) {
    throw std::invalid_argument("tableaux are defined against different hook sums");
  }
  return TeslerTableau(lhs.hooks(), lhs.mask() | rhs.mask());
}

std::vector<TeslerTableau> enumerate_tableaux(const HookSums& a) {
  const std::size_t n = a.size();
  if (n > kMaxTableauSize) throw std::invalid_argument("tableau size exceeds the supported maximum");
  std::vector<TeslerTableau> out;
  // Row j must be nonzero exactly when a_j > 0 or a 1 sits above it in
  // column j; otherwise it is forced to zero. Nonzero rows run through
  // their patterns in lexicographic order, leftmost cell most significant.
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t row, std::uint64_t mask) {
    if (row > n) {
      out.emplace_back(a, mask);
      return;
    }
    bool required = a(row) > 0;
    for (std::size_t i = 1; i < row && !required; ++i) required = (mask & bit(n, i, row)) != 0;
    if (!required) {
      walk(row + 1, mask);
      return;
    }
    const std::size_t len = n - row + 1;
    for (std::uint64_t pattern = 1; pattern < (std::uint64_t{1} << len); ++pattern) {
      std::uint64_t cells = 0;
      for (std::size_t k = 0; k < len; ++k) {
        if ((pattern >> (len - 1 - k)) & 1U) cells |= bit(n, row, row + k);
      }
      walk(row + 1, mask | cells);
    }
  };
  walk(1, 0);
  return out;
}

// ---------------------------------------------------------------- FacePoset

FacePoset::FacePoset(std::vector<TeslerTableau> elements) : elements_(std::move(elements)) {
  dims_.reserve(elements_.size());
  for (const auto& t : elements_) {
    dims_.push_back(tableau_dim(t));
    max_dim_ = std::max(max_dim_, dims_.back());
  }
}

std::vector<std::size_t> FacePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < size() && minimal; ++j) {
      if (j != i && leq(j, i)) minimal = false;
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FacePoset::of_dimension(std::size_t d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (dims_[i] == d) out.push_back(i);
  }
  return out;
}

std::vector<BigInt> FacePoset::f_vector() const {
  std::vector<BigInt> f(max_dim_ + 1);
  for (std::size_t d : dims_) f[d] += 1;
  return f;
}

FacePoset build_face_poset(const HookSums& a) {
  require_reduced(a);
  return FacePoset(enumerate_tableaux(a));
}

std::vector<BigInt> simplex_product_f_vector(const std::vector<int>& dims) {
  std::vector<BigInt> f{1};
  for (int d : dims) {
    std::vector<BigInt> simplex(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) simplex[static_cast<std::size_t>(i)] = binomial(BigInt(d + 1), i + 1);
    f = poly_mul(f, simplex);
  }
  return f;
}

std::vector<BigInt> f_vector(const HookSums& a) {
  require_reduced(a);
  const std::size_t n = a.size();
  if (n > kExplicitPosetLimit && a.all_positive()) {
    std::vector<int> dims;
    for (std::size_t d = 1; d < n; ++d) dims.push_back(static_cast<int>(d));
    return simplex_product_f_vector(dims);
  }
  return build_face_poset(a).f_vector();
}

TeslerMatrix vertex_matrix(const TeslerTableau& t) {
  if (tableau_dim(t) != 0) throw std::invalid_argument("vertex_matrix needs a zero-dimensional tableau");
  const std::size_t n = t.size();
  const HookSums& a = t.hooks();
  UpperTriangular m(n);
  std::vector<BigInt> inflow(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const BigInt supply = a(i) + inflow[i - 1];
    std::size_t col = 0;
    for (std::size_t j = i; j <= n; ++j) {
      if (t(i, j)) col = j;
    }
    if (col == 0) {
      if (supply != 0) throw InvariantError("zero tableau row with positive supply");
      continue;
    }
    if (supply == 0) throw InvariantError("tableau 1-cell with zero supply");
    m(i, col) = supply;
    if (col > i) inflow[col - 1] += supply;
  }
  return TeslerMatrix(a, std::move(m));
}

std::vector<TeslerMatrix> vertices(const HookSums& a) {
  require_reduced(a);
  std::vector<TeslerMatrix> out;
  for (const auto& t : enumerate_tableaux(a)) {
    if (tableau_dim(t) == 0) out.push_back(vertex_matrix(t));
  }
  return out;
}

bool is_simple(const HookSums& a) {
  const HookSums r = reduce_hooks(a);
  const std::size_t n = r.size();
  if (n <= 3) return true;
  const std::string s = to_string(signature(r));
  const std::string plus = std::string(n, '+');
  return s == plus || s == std::string(n - 1, '+') + "0" || s == "+0" + std::string(n - 2, '+') ||
         s == "+0" + std::string(n - 3, '+') + "0";
}

std::vector<VertexDegree> vertex_degrees(const HookSums& a) {
  const FacePoset poset = build_face_poset(a);
  const auto verts = poset.of_dimension(0);
  std::vector<std::size_t> degree(verts.size(), 0);
  for (std::size_t e : poset.of_dimension(1)) {
    std::size_t below = 0;
    for (std::size_t k = 0; k < verts.size(); ++k) {
      if (poset.leq(verts[k], e)) {
        ++degree[k];
        ++below;
      }
    }
    if (below != 2) {
      throw InvariantError("one-dimensional face with " + std::to_string(below) + " vertices");
    }
  }
  std::vector<VertexDegree> out;
  for (std::size_t k = 0; k < verts.size(); ++k) out.push_back({poset.element(verts[k]), degree[k]});
  return out;
}

std::vector<BigInt> h_from_f(const std::vector<BigInt>& f) {
  std::vector<BigInt> h(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    // f_i (x - 1)^i = f_i sum_k C(i,k) x^k (-1)^{i-k}
    for (std::size_t k = 0; k <= i; ++k) {
      BigInt term = f[i] * binomial(BigInt(i), static_cast<std::int64_t>(k));
      if ((i - k) % 2 == 1) term = -term;
      h[k] += term;
    }
  }
  return h;
}

std::vector<BigInt> h_vector(const HookSums& a) {
  require_reduced(a);
  if (!is_simple(a)) {
    throw std::invalid_argument("h-vector requested for a non-simple Tesler polytope (signature " +
                                to_string(signature(a)) + ")");
  }
  auto h = h_from_f(f_vector(a));
  for (const auto& c : h) {
    if (c < 0) throw InvariantError("negative h-vector entry");
  }
  return h;
}

UniPoly outdegree_gf(const HookSums& a) {
  const std::size_t n = a.size();
  UniPoly gf(static_cast<std::size_t>(choose2(static_cast<std::int64_t>(n))) + 1);
  for (const auto& m : permutation_teslers(a)) {
    std::size_t exponent = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) {
        if (m(i, j) != 0) exponent += n - j;
      }
    }
    gf[exponent] += 1;
  }
  return gf;
}

}  // namespace tesler
