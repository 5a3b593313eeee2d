#include "tesler/kostant.hpp"

#include <algorithm>
#include <stdexcept>

namespace tesler {

NetflowVector::NetflowVector(std::vector<BigInt> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("netflow vector must be nonempty");
  BigInt s = 0;
  for (const auto& v : values_) s += v;
  if (s != 0) throw std::invalid_argument("netflow entries must sum to 0, got " + s.str());
}

NetflowVector NetflowVector::from_ints(std::initializer_list<std::int64_t> values) {
  return NetflowVector(std::vector<BigInt>(values.begin(), values.end()));
}

NetflowVector augmented_netflow(const HookSums& a) {
  std::vector<BigInt> v(a.values().begin(), a.values().end());
  v.push_back(-a.total());
  return NetflowVector(std::move(v));
}

NetflowVector reversed(const NetflowVector& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (auto it = v.values().rbegin(); it != v.values().rend(); ++it) out.push_back(-*it);
  return NetflowVector(std::move(out));
}

// ----------------------------------------------------------- KostantCounter

std::size_t KostantCounter::KeyHash::operator()(const std::vector<std::int64_t>& key) const noexcept {
  std::size_t h = key.size();
  for (std::int64_t x : key) {
    h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BigInt KostantCounter::count(const NetflowVector& v) {
  std::vector<std::int64_t> residual;
  residual.reserve(v.size());
  for (const auto& x : v.values()) residual.push_back(to_int64(x, "netflow entry"));
  return count_residual(residual);
}

// Spreads supply over tail[pos..], keeping every prefix of the tail
// (pre-existing residual plus what it receives) nonnegative: flow only moves
// forward, so a prefix with negative net supply can never be balanced.
void KostantCounter::distribute(std::int64_t supply, std::vector<std::int64_t>& tail,
                                std::size_t pos, std::int64_t prefix, BigInt& total) {
  const std::int64_t base = tail[pos];
  if (pos + 1 == tail.size()) {
    if (prefix + base + supply < 0) return;
    tail[pos] = base + supply;
    total += count_residual(tail);
    tail[pos] = base;
    return;
  }
  const std::int64_t lowest = std::max<std::int64_t>(0, -(prefix + base));
  for (std::int64_t x = lowest; x <= supply; ++x) {
    tail[pos] = base + x;
    distribute(supply - x, tail, pos + 1, prefix + base + x, total);
  }
  tail[pos] = base;
}

const BigInt& KostantCounter::count_residual(const std::vector<std::int64_t>& residual) {
  if (auto it = memo_.find(residual); it != memo_.end()) return it->second;

  BigInt total = 0;
  if (residual.size() == 1) {
    total = (residual[0] == 0) ? 1 : 0;
  } else if (residual[0] >= 0) {
    std::vector<std::int64_t> tail(residual.begin() + 1, residual.end());
    distribute(residual[0], tail, 0, 0, total);
  }
  return memo_.emplace(residual, std::move(total)).first->second;
}

BigInt kostant(const NetflowVector& v) {
  KostantCounter counter;
  return counter.count(v);
}

BigInt kostant_reversed_equal(const NetflowVector& v) {
  const BigInt forward = kostant(v);
  const BigInt backward = kostant(reversed(v));
  if (forward != backward) {
    throw InvariantError("Kostant value changes under reversal: " + forward.str() + " vs " +
                         backward.str());
  }
  return forward;
}

BigInt count_tesler(const HookSums& a) { return kostant(augmented_netflow(a)); }

// ------------------------------------------------------------- enumeration

namespace {

struct TeslerWalker {
  std::size_t n;
  const HookSums& hooks;
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> inflow;  // inflow[k] for vertex k+1
  std::vector<std::int64_t> entries;  // packed upper triangle
  const std::function<bool(const TeslerMatrix&)>& visit;

  bool emit() {
    UpperTriangular m(n);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) m(i, j) = entries[tri_index(n, i, j)];
    }
    return visit(TeslerMatrix(hooks, std::move(m)));
  }

  // Fills row `row` from column `col` onward with `remaining` units.
  bool fill(std::size_t row, std::size_t col, std::int64_t remaining) {
    const std::size_t idx = tri_index(n, row, col);
    if (col == n) {
      entries[idx] = remaining;
      if (row < n) inflow[n - 1] += remaining;
      const bool go_on = next_row(row + 1);
      if (row < n) inflow[n - 1] -= remaining;
      return go_on;
    }
    for (std::int64_t x = 0; x <= remaining; ++x) {
      entries[idx] = x;
      if (col > row) inflow[col - 1] += x;
      const bool go_on = fill(row, col + 1, remaining - x);
      if (col > row) inflow[col - 1] -= x;
      if (!go_on) return false;
    }
    return true;
  }

  bool next_row(std::size_t row) {
    if (row > n) return emit();
    return fill(row, row, a[row - 1] + inflow[row - 1]);
  }
};

}  // namespace

bool for_each_tesler(const HookSums& a, const std::function<bool(const TeslerMatrix&)>& visit) {
  const std::size_t n = a.size();
  TeslerWalker walker{n, a, a.small_values(), std::vector<std::int64_t>(n, 0),
                      std::vector<std::int64_t>(tri_size(n), 0), visit};
  return walker.next_row(1);
}

std::vector<TeslerMatrix> enumerate_tesler(const HookSums& a) {
  std::vector<TeslerMatrix> out;
  for_each_tesler(a, [&](const TeslerMatrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

BigInt count_via_projection(const HookSums& a) {
  const std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("projection recursion needs n >= 2");
  const HookSums head(std::vector<BigInt>(a.values().begin(), a.values().end() - 1));
  BigInt total = 0;
  for_each_tesler(head, [&](const TeslerMatrix& b) {
    BigInt fibre = 1;
    for (std::size_t i = 1; i < n; ++i) fibre *= (1 + b(i, i));
    total += fibre;
    return true;
  });
  return total;
}

std::vector<TeslerMatrix> permutation_teslers(const HookSums& a) {
  if (!a.all_positive()) {
    throw std::invalid_argument("permutation Tesler matrices need every hook sum positive");
  }
  const std::size_t n = a.size();
  std::vector<TeslerMatrix> out;
  // support[i] = column of the single nonzero entry in row i+1.
  std::vector<std::size_t> support(n);
  std::vector<BigInt> inflow(n);
  std::function<void(std::size_t)> place = [&](std::size_t row) {
    if (row > n) {
      UpperTriangular m(n);
      std::vector<BigInt> in(n);
      for (std::size_t i = 1; i <= n; ++i) {
        m(i, support[i - 1]) = a(i) + in[i - 1];
        if (support[i - 1] > i) in[support[i - 1] - 1] += m(i, support[i - 1]);
      }
      out.emplace_back(a, std::move(m));
      return;
    }
    for (std::size_t col = row; col <= n; ++col) {
      support[row - 1] = col;
      place(row + 1);
    }
  };
  place(1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tesler
