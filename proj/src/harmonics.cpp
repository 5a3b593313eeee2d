#include "tesler/harmonics.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "tesler/kostant.hpp"

namespace tesler {

// ------------------------------------------------------------------ QTPoly

QTPoly::QTPoly(BigInt constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, std::move(constant));
}

QTPoly QTPoly::monomial(int q_exp, int t_exp, BigInt coefficient) {
  if (q_exp < 0 || t_exp < 0) throw std::invalid_argument("negative exponent in monomial");
  QTPoly p;
  p.add_term(q_exp, t_exp, coefficient);
  return p;
}

BigInt QTPoly::coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? BigInt(0) : it->second;
}

void QTPoly::add_term(int q_exp, int t_exp, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({q_exp, t_exp}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

QTPoly& QTPoly::operator+=(const QTPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
  return *this;
}

QTPoly operator*(const QTPoly& lhs, const QTPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  // Dense product over the bounding box, then back to sparse.
  int lq = 0, lt = 0, rq = 0, rt = 0;
  for (const auto& [e, c] : lhs.terms_) lq = std::max(lq, e.first), lt = std::max(lt, e.second);
  for (const auto& [e, c] : rhs.terms_) rq = std::max(rq, e.first), rt = std::max(rt, e.second);
  const int width = lt + rt + 1;
  std::vector<BigInt> dense(static_cast<std::size_t>((lq + rq + 1) * width));
  for (const auto& [a, ca] : lhs.terms_) {
    for (const auto& [b, cb] : rhs.terms_) {
      dense[static_cast<std::size_t>((a.first + b.first) * width + a.second + b.second)] += ca * cb;
    }
  }
  QTPoly out;
  for (std::size_t idx = 0; idx < dense.size(); ++idx) {
    if (dense[idx] != 0) {
      out.terms_.emplace_hint(out.terms_.end(),
                              QTPoly::Exponent{static_cast<int>(idx) / width, static_cast<int>(idx) % width},
                              std::move(dense[idx]));
    }
  }
  return out;
}

QTPoly& QTPoly::operator*=(const QTPoly& rhs) { return *this = *this * rhs; }

QTPoly QTPoly::operator-() const {
  QTPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

BigInt QTPoly::evaluate(const BigInt& q, const BigInt& t) const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c * ipow(q, e.first) * ipow(t, e.second);
  return sum;
}

QTPoly QTPoly::swapped() const {
  QTPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.second, e.first}, c);
  return out;
}

QTPoly QTPoly::at_t_zero() const {
  QTPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.second == 0) out.terms_.emplace(e, c);
  }
  return out;
}

namespace {

// p = (1 - x) r  =>  r_k = p_0 + ... + p_k, and the full sum must vanish.
// OverQ picks which variable plays x; the other labels the slices.
template <bool OverQ>
QTPoly divide_one_minus(const QTPoly& p) {
  std::map<int, std::map<int, BigInt>> slices;  // other exponent -> (x exponent -> coefficient)
  for (const auto& [e, c] : p.terms()) {
    const int x = OverQ ? e.first : e.second;
    const int other = OverQ ? e.second : e.first;
    slices[other].emplace(x, c);
  }
  QTPoly out;
  for (const auto& [other, slice] : slices) {
    BigInt running = 0;
    int x = slice.begin()->first;
    const int top = slice.rbegin()->first;
    for (; x <= top; ++x) {
      if (auto it = slice.find(x); it != slice.end()) running += it->second;
      if (x == top) break;
      if (OverQ) {
        out.add_term(x, other, running);
      } else {
        out.add_term(other, x, running);
      }
    }
    if (running != 0) {
      throw InvariantError(std::string("division by (1 - ") + (OverQ ? "q" : "t") +
                           ") leaves a remainder");
    }
  }
  return out;
}

}  // namespace

QTPoly QTPoly::divided_by_one_minus_q() const { return divide_one_minus<true>(*this); }
QTPoly QTPoly::divided_by_one_minus_t() const { return divide_one_minus<false>(*this); }
QTPoly QTPoly::divided_by_minus_m() const {
  return -divided_by_one_minus_q().divided_by_one_minus_t();
}

std::string to_string(const QTPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto factor = [&mono](char var, int exp) {
      if (exp == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (exp > 1) mono += "^" + std::to_string(exp);
    };
    factor('q', e.first);
    factor('t', e.second);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out;
}

// ----------------------------------------------------------------- weights

QTPoly minus_m() {
  // -(1 - q)(1 - t) = -1 + q + t - qt
  QTPoly m;
  m.add_term(0, 0, -1);
  m.add_term(1, 0, 1);
  m.add_term(0, 1, 1);
  m.add_term(1, 1, -1);
  return m;
}

QTPoly qt_bracket(std::int64_t b) {
  if (b <= 0) throw std::domain_error("[b]_{q,t} needs b >= 1, got " + std::to_string(b));
  QTPoly out;
  for (std::int64_t i = 0; i < b; ++i) out.add_term(static_cast<int>(i), static_cast<int>(b - 1 - i), 1);
  return out;
}

QTPoly haglund_weight(const TeslerMatrix& a) {
  const std::size_t n = a.size();
  const QTPoly mm = minus_m();
  QTPoly w = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if (a(i, j) > 0) w *= mm * qt_bracket(to_int64(a(i, j), "Tesler entry"));
    }
  }
  for (std::size_t k = 0; k < n; ++k) w = w.divided_by_minus_m();
  return w;
}

QTPoly gorsky_negut_weight(const TeslerMatrix& a) {
  const std::size_t n = a.size();
  const QTPoly mm = minus_m();
  QTPoly w = 1;
  for (std::size_t i = 1; i < n; ++i) {
    const BigInt& super = a(i, i + 1);
    if (super > 0) {
      const std::int64_t v = to_int64(super, "Tesler entry");
      w *= qt_bracket(v + 1) - qt_bracket(v);
    }
    for (std::size_t j = i + 2; j <= n; ++j) {
      if (a(i, j) > 0) w *= mm * qt_bracket(to_int64(a(i, j), "Tesler entry"));
    }
  }
  return w;
}

namespace {

template <typename Weight>
QTPoly sum_over_ones(int n, unsigned threads, Weight weight) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  const auto matrices = enumerate_tesler(HookSums::ones(static_cast<std::size_t>(n)));
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(1, matrices.size()));
  std::vector<QTPoly> partial(workers);
  std::vector<std::exception_ptr> failure(workers);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t k = w; k < matrices.size(); k += workers) partial[w] += weight(matrices[k]);
    } catch (...) {
      failure[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }
  for (const auto& f : failure) {
    if (f) std::rethrow_exception(f);
  }
  QTPoly total;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace

QTPoly hilbert_dh(int n, unsigned threads) { return sum_over_ones(n, threads, haglund_weight); }

QTPoly hilbert_alternant(int n, unsigned threads) {
  return sum_over_ones(n, threads, gorsky_negut_weight);
}

// -------------------------------------------------------- parking functions

bool is_parking_function(const std::vector<int>& preferences) {
  std::vector<int> b = preferences;
  std::sort(b.begin(), b.end());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 1 || b[i] > static_cast<int>(i) + 1) return false;
  }
  return !b.empty();
}

ParkingFunction::ParkingFunction(std::vector<int> preferences) : prefs_(std::move(preferences)) {
  if (!is_parking_function(prefs_)) throw std::invalid_argument("not a parking function");
  const int n = static_cast<int>(prefs_.size());
  // Cars preferring column c stack in column c, smaller labels lower.
  std::vector<int> order(prefs_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return prefs_[x] < prefs_[y]; });
  for (int r = 0; r < n; ++r) {
    const int car = order[static_cast<std::size_t>(r)];
    labels_.push_back(car + 1);
    area_.push_back(r - (prefs_[static_cast<std::size_t>(car)] - 1));
  }
}

std::int64_t ParkingFunction::area() const { return std::accumulate(area_.begin(), area_.end(), std::int64_t{0}); }

std::int64_t ParkingFunction::dinv() const {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < area_.size(); ++i) {
    for (std::size_t j = i + 1; j < area_.size(); ++j) {
      if (area_[i] == area_[j] && labels_[i] < labels_[j]) ++d;
      if (area_[i] == area_[j] + 1 && labels_[i] > labels_[j]) ++d;
    }
  }
  return d;
}

QTPoly parking_gf(int n) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  QTPoly out;
  std::vector<int> seq(static_cast<std::size_t>(n), 1);
  while (true) {
    if (is_parking_function(seq)) {
      const ParkingFunction pf(seq);
      out.add_term(static_cast<int>(pf.dinv()), static_cast<int>(pf.area()), 1);
    }
    std::size_t pos = seq.size();
    while (pos > 0 && seq[pos - 1] == n) seq[--pos] = 1;
    if (pos == 0) break;
    ++seq[pos - 1];
  }
  return out;
}

// -------------------------------------------------------------- Dyck paths

DyckPath::DyckPath(std::vector<int> area_sequence) : area_seq_(std::move(area_sequence)) {
  if (area_seq_.empty() || area_seq_[0] != 0) throw std::invalid_argument("area sequence must start with 0");
  for (std::size_t i = 1; i < area_seq_.size(); ++i) {
    if (area_seq_[i] < 0 || area_seq_[i] > area_seq_[i - 1] + 1) {
      throw std::invalid_argument("area sequence must satisfy 0 <= a_{i+1} <= a_i + 1");
    }
  }
}

std::int64_t DyckPath::area() const {
  return std::accumulate(area_seq_.begin(), area_seq_.end(), std::int64_t{0});
}

std::vector<int> DyckPath::bounce_points() const {
  const int n = static_cast<int>(area_seq_.size());
  // Row r (0-based) has its north step at x = r - a_r; rows are sorted by x.
  std::vector<int> column(area_seq_.size());
  for (int r = 0; r < n; ++r) column[static_cast<std::size_t>(r)] = r - area_seq_[static_cast<std::size_t>(r)];
  std::vector<int> points;
  int j = 0;
  while (j < n) {
    const int next = static_cast<int>(std::count_if(column.begin(), column.end(), [j](int x) { return x <= j; }));
    if (next <= j) throw InvariantError("bounce path does not advance");
    j = next;
    points.push_back(j);
  }
  return points;
}

std::int64_t DyckPath::bounce() const {
  std::int64_t b = 0;
  for (int j : bounce_points()) b += static_cast<std::int64_t>(size()) - j;
  return b;
}

std::vector<DyckPath> dyck_paths(int n) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  std::vector<DyckPath> out;
  std::vector<int> seq(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto& self, std::size_t pos) -> void {
    if (pos == seq.size()) {
      out.emplace_back(seq);
      return;
    }
    for (int v = 0; v <= seq[pos - 1] + 1; ++v) {
      seq[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 1);
  return out;
}

QTPoly qt_catalan(int n) {
  QTPoly out;
  for (const auto& p : dyck_paths(n)) out.add_term(static_cast<int>(p.area()), static_cast<int>(p.bounce()), 1);
  return out;
}

BigInt perm_tesler_sum(int n) {
  if (n < 1) throw std::domain_error("n must be at least 1");
  const auto size = static_cast<std::size_t>(n);
  BigInt total = 0;
  for (const auto& m : permutation_teslers(HookSums::ones(size))) {
    BigInt prod = 1;
    for (std::size_t i = 1; i <= size; ++i) {
      for (std::size_t j = i; j <= size; ++j) {
        if (m(i, j) != 0) prod *= m(i, j);
      }
    }
    total += prod;
  }
  return total;
}

}  // namespace tesler
