#include "tesler/core.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace tesler {

// ---------------------------------------------------------------- HookSums

HookSums::HookSums(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("hook sums must have n >= 1 entries");
  for (const auto& v : values_) {
    if (v < 0) throw std::invalid_argument("hook sums must be nonnegative");
  }
}

HookSums HookSums::ones(std::size_t n) { return HookSums(std::vector<BigInt>(n, BigInt(1))); }

HookSums HookSums::from_ints(std::span<const std::int64_t> values) {
  return HookSums(std::vector<BigInt>(values.begin(), values.end()));
}

const BigInt& HookSums::operator()(std::size_t k) const {
  if (k < 1 || k > values_.size()) throw std::out_of_range("hook index out of range");
  return values_[k - 1];
}

BigInt HookSums::total() const {
  BigInt s = 0;
  for (const auto& v : values_) s += v;
  return s;
}

bool HookSums::all_positive() const {
  for (const auto& v : values_) {
    if (v == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> HookSums::small_values() const {
  std::vector<std::int64_t> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(to_int64(v, "hook sum"));
  return out;
}

std::string to_string(const HookSums& a) {
  std::string s;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (k > 1) s += ',';
    s += a(k).str();
  }
  return s;
}

Signature signature(const HookSums& a) {
  Signature s;
  s.reserve(a.size());
  for (const auto& v : a.values()) s.push_back(v > 0 ? Sign::Plus : Sign::Zero);
  return s;
}

std::string to_string(const Signature& s) {
  std::string out;
  for (Sign e : s) out += (e == Sign::Plus ? '+' : '0');
  return out;
}

Signature parse_signature(std::string_view text) {
  Signature s;
  for (char ch : text) {
    if (ch == '+') {
      s.push_back(Sign::Plus);
    } else if (ch == '0') {
      s.push_back(Sign::Zero);
    } else {
      throw std::invalid_argument("signature characters must be '+' or '0'");
    }
  }
  if (s.empty()) throw std::invalid_argument("empty signature");
  return s;
}

HookSums representative_hooks(const Signature& s) {
  std::vector<BigInt> v;
  for (Sign e : s) v.emplace_back(e == Sign::Plus ? 1 : 0);
  return HookSums(std::move(v));
}

// ---------------------------------------------------------- UpperTriangular

UpperTriangular::UpperTriangular(std::size_t n) : n_(n), entries_(tri_size(n)) {
  if (n == 0) throw std::invalid_argument("matrix size must be >= 1");
}

UpperTriangular UpperTriangular::from_rows(const std::vector<std::vector<BigInt>>& rows) {
  UpperTriangular m(rows.size());
  const std::size_t n = rows.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& row = rows[i - 1];
    if (row.size() != n - i + 1) {
      throw std::invalid_argument("row " + std::to_string(i) + " must have " +
                                  std::to_string(n - i + 1) + " entries");
    }
    for (std::size_t j = i; j <= n; ++j) {
      if (row[j - i] < 0) throw std::invalid_argument("matrix entries must be nonnegative");
      m(i, j) = row[j - i];
    }
  }
  return m;
}

const BigInt& UpperTriangular::operator()(std::size_t i, std::size_t j) const {
  if (i < 1 || i > j || j > n_) throw std::out_of_range("matrix index out of range");
  return entries_[tri_index(n_, i, j)];
}

BigInt& UpperTriangular::operator()(std::size_t i, std::size_t j) {
  if (i < 1 || i > j || j > n_) throw std::out_of_range("matrix index out of range");
  return entries_[tri_index(n_, i, j)];
}

std::vector<std::vector<BigInt>> UpperTriangular::rows() const {
  std::vector<std::vector<BigInt>> out(n_);
  for (std::size_t i = 1; i <= n_; ++i) {
    for (std::size_t j = i; j <= n_; ++j) out[i - 1].push_back((*this)(i, j));
  }
  return out;
}

BigInt hook_sum(const UpperTriangular& m, std::size_t k) {
  const std::size_t n = m.size();
  if (k < 1 || k > n) throw std::out_of_range("hook index out of range");
  BigInt s = 0;
  for (std::size_t j = k; j <= n; ++j) s += m(k, j);
  for (std::size_t i = 1; i < k; ++i) s -= m(i, k);
  return s;
}

// ------------------------------------------------------------- TeslerMatrix

TeslerMatrix::TeslerMatrix(HookSums hooks, UpperTriangular entries)
    : hooks_(std::move(hooks)), entries_(std::move(entries)) {
  if (hooks_.size() != entries_.size()) {
    throw std::invalid_argument("matrix size does not match the number of hook sums");
  }
  for (std::size_t k = 1; k <= entries_.size(); ++k) {
    if (hook_sum(entries_, k) != hooks_(k)) {
      throw std::invalid_argument("hook sum " + std::to_string(k) + " is " +
                                  hook_sum(entries_, k).str() + ", expected " + hooks_(k).str());
    }
  }
}

TeslerMatrix TeslerMatrix::from_rows(const HookSums& hooks,
                                     const std::vector<std::vector<BigInt>>& rows) {
  return TeslerMatrix(hooks, UpperTriangular::from_rows(rows));
}

std::size_t TeslerMatrix::positive_count() const {
  std::size_t c = 0;
  for (const auto& v : entries_.packed()) c += (v > 0);
  return c;
}

bool TeslerMatrix::is_permutation_tesler() const {
  const std::size_t n = size();
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t nonzero = 0;
    for (std::size_t j = i; j <= n; ++j) nonzero += (entries_(i, j) != 0);
    if (nonzero > 1) return false;
  }
  return true;
}

// --------------------------------------------------------------------- Flow

Flow::Flow(std::size_t n, std::vector<BigInt> edge_values)
    : n_(n), values_(std::move(edge_values)), netflow_(n + 1) {
  if (n == 0) throw std::invalid_argument("flow needs n >= 1");
  if (values_.size() != tri_size(n)) {
    throw std::invalid_argument("flow on k_" + std::to_string(n + 1) + " needs " +
                                std::to_string(tri_size(n)) + " edge values");
  }
  for (std::size_t i = 1; i <= n + 1; ++i) {
    for (std::size_t j = i + 1; j <= n + 1; ++j) {
      const BigInt& f = values_[edge_index(i, j)];
      if (f < 0) throw std::invalid_argument("flow values must be nonnegative");
      netflow_[i - 1] += f;
      netflow_[j - 1] -= f;
    }
  }
}

std::size_t Flow::edge_index(std::size_t i, std::size_t j) const {
  // Edges (i, j) with i < j <= n+1 are the strict upper triangle of an
  // (n+1)-matrix; shift to the packed triangle of size n.
  return tri_index(n_, i, j - 1);
}

const BigInt& Flow::operator()(std::size_t i, std::size_t j) const {
  if (i < 1 || i >= j || j > n_ + 1) throw std::out_of_range("edge index out of range");
  return values_[edge_index(i, j)];
}

// ------------------------------------------------------- TransportationPoint

TransportationPoint::TransportationPoint(std::vector<std::vector<BigInt>> rows)
    : rows_(std::move(rows)) {
  const std::size_t n = rows_.size();
  if (n == 0) throw std::invalid_argument("transportation matrix must be nonempty");
  marginals_.assign(n, 0);
  std::vector<BigInt> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_[i].size() != n) throw std::invalid_argument("transportation matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt& v = rows_[i][j];
      if (v < 0) throw std::invalid_argument("transportation entries must be nonnegative");
      if (i >= j + 2 && v != 0) {
        throw std::invalid_argument("entries with i - j >= 2 must vanish");
      }
      marginals_[i] += v;
      cols[j] += v;
    }
  }
  if (cols != marginals_) throw std::invalid_argument("row sums differ from column sums");
}

// -------------------------------------------------------------------- maps

Flow tesler_to_flow(const TeslerMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> values(tri_size(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n + 1; ++j) {
      values[tri_index(n, i, j - 1)] = (j == n + 1) ? m(i, i) : m(i, j);
    }
  }
  return Flow(n, std::move(values));
}

TeslerMatrix flow_to_tesler(const Flow& f) {
  const std::size_t n = f.size();
  std::vector<BigInt> hooks(f.netflow().begin(), f.netflow().begin() + static_cast<long>(n));
  for (const auto& a : hooks) {
    if (a < 0) throw std::invalid_argument("flow netflow must be nonnegative on vertices 1..n");
  }
  UpperTriangular m(n);
  for (std::size_t i = 1; i <= n; ++i) {
    m(i, i) = f(i, n + 1);
    for (std::size_t j = i + 1; j <= n; ++j) m(i, j) = f(i, j);
  }
  return TeslerMatrix(HookSums(std::move(hooks)), std::move(m));
}

TransportationPoint tesler_to_transportation(const TeslerMatrix& m) {
  const std::size_t n = m.size();
  const HookSums& a = m.hooks();
  if (a(1) == 0) throw std::invalid_argument("transportation embedding requires a_1 > 0");
  const Flow f = tesler_to_flow(m);
  std::vector<std::vector<BigInt>> out(n, std::vector<BigInt>(n));
  BigInt prefix = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 1; i <= j; ++i) out[i - 1][j - 1] = f(i, j + 1);
    if (j < n) {
      prefix += a(j);
      BigInt sub = prefix;
      for (std::size_t t = 1; t <= j; ++t) sub -= f(t, j + 1);
      if (sub < 0) throw InvariantError("negative subdiagonal entry in transportation image");
      out[j][j - 1] = sub;
    }
  }
  return TransportationPoint(std::move(out));
}

TeslerMatrix transportation_to_tesler(const TransportationPoint& p) {
  const std::size_t n = p.size();
  const auto& s = p.marginals();
  std::vector<BigInt> hooks(n);
  for (std::size_t k = 0; k < n; ++k) {
    hooks[k] = s[k] - (k > 0 ? s[k - 1] : BigInt(0));
    if (hooks[k] < 0) throw std::invalid_argument("marginals must be nondecreasing");
  }
  if (hooks[0] == 0) throw std::invalid_argument("transportation embedding requires a_1 > 0");
  std::vector<BigInt> values(tri_size(n));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n + 1; ++j) values[tri_index(n, i, j - 1)] = p(i, j - 1);
  }
  return flow_to_tesler(Flow(n, std::move(values)));
}

// ------------------------------------------------------------ TeslerTableau

std::uint64_t row_mask(std::size_t n, std::size_t i) {
  const std::size_t len = n - i + 1;
  const std::uint64_t ones = (len >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
  return ones << tri_index(n, i, i);
}

bool satisfies_tableau_conditions(const HookSums& a, std::uint64_t mask) {
  const std::size_t n = a.size();
  if (n > kMaxTableauSize) throw std::invalid_argument("tableau size exceeds the supported maximum");
  if (tri_size(n) < 64 && (mask >> tri_size(n)) != 0) return false;
  for (std::size_t j = 1; j <= n; ++j) {
    const bool row_nonzero = (mask & row_mask(n, j)) != 0;
    bool hit_from_above = false;
    for (std::size_t i = 1; i < j; ++i) {
      if (mask >> tri_index(n, i, j) & 1U) hit_from_above = true;
    }
    if (a(j) > 0 && !row_nonzero) return false;     // condition (1)
    if (hit_from_above && !row_nonzero) return false;  // condition (2)
    if (a(j) == 0 && !hit_from_above && row_nonzero) return false;  // condition (3)
  }
  return true;
}

TeslerTableau::TeslerTableau(HookSums hooks, std::uint64_t mask)
    : hooks_(std::move(hooks)), mask_(mask) {
  if (!satisfies_tableau_conditions(hooks_, mask_)) {
    throw std::invalid_argument("filling is not an a-Tesler tableau");
  }
}

TeslerTableau TeslerTableau::from_rows(HookSums hooks, const std::vector<std::vector<int>>& rows) {
  const std::size_t n = hooks.size();
  if (rows.size() != n) throw std::invalid_argument("tableau row count does not match hook sums");
  if (n > kMaxTableauSize) throw std::invalid_argument("tableau size exceeds the supported maximum");
  std::uint64_t mask = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (rows[i - 1].size() != n - i + 1) throw std::invalid_argument("tableau row has wrong length");
    for (std::size_t j = i; j <= n; ++j) {
      const int v = rows[i - 1][j - i];
      if (v != 0 && v != 1) throw std::invalid_argument("tableau entries must be 0 or 1");
      if (v == 1) mask |= std::uint64_t{1} << tri_index(n, i, j);
    }
  }
  return TeslerTableau(std::move(hooks), mask);
}

bool TeslerTableau::operator()(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  if (i < 1 || i > j || j > n) throw std::out_of_range("tableau index out of range");
  return (mask_ >> tri_index(n, i, j)) & 1U;
}

std::size_t TeslerTableau::ones_in_row(std::size_t i) const {
  return static_cast<std::size_t>(std::popcount(mask_ & row_mask(size(), i)));
}

std::vector<std::vector<int>> TeslerTableau::rows() const {
  const std::size_t n = size();
  std::vector<std::vector<int>> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) out[i - 1].push_back((*this)(i, j) ? 1 : 0);
  }
  return out;
}

bool lex_less(const TeslerTableau& l, const TeslerTableau& r) {
  const std::uint64_t diff = l.mask() ^ r.mask();
  if (diff == 0) return false;
  const int first = std::countr_zero(diff);
  return ((l.mask() >> first) & 1U) == 0;
}

}  // namespace tesler
