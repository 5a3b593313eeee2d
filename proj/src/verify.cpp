#include "tesler/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>

#include "tesler/faces.hpp"
#include "tesler/harmonics.hpp"
#include "tesler/io.hpp"
#include "tesler/kostant.hpp"
#include "tesler/volume.hpp"

namespace tesler {

Suite parse_suite(std::string_view name) {
  if (name == "counts") return Suite::Counts;
  if (name == "volumes") return Suite::Volumes;
  if (name == "faces") return Suite::Faces;
  if (name == "harmonics") return Suite::Harmonics;
  if (name == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Counts: return "counts";
    case Suite::Volumes: return "volumes";
    case Suite::Faces: return "faces";
    case Suite::Harmonics: return "harmonics";
    case Suite::All: return "all";
  }
  return "?";
}

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome expect_eq(const BigInt& got, const BigInt& want) {
  if (got == want) return {true, got.str()};
  return {false, "got " + got.str() + ", expected " + want.str()};
}

class Runner {
 public:
  Runner(std::string suite, std::vector<CheckResult>& out) : suite_(std::move(suite)), out_(out) {}

  void check(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    out_.push_back({suite_, name, o.ok, o.detail, ms.count()});
  }

 private:
  std::string suite_;
  std::vector<CheckResult>& out_;
};

std::string hooks_label(const std::vector<std::int64_t>& a) {
  std::string s;
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s;
}

// Every vector in {0,..,top}^n, in lexicographic order.
std::vector<std::vector<std::int64_t>> grid(std::size_t n, std::int64_t top) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t pos = n;
    while (pos > 0 && v[pos - 1] == top) v[--pos] = 0;
    if (pos == 0) break;
    ++v[pos - 1];
  }
  return out;
}

void counts_suite(int nmax, Runner& r) {
  const std::vector<BigInt> oeis = {1, 2, 7, 40, 357, 4820, 96030};
  for (int n = 1; n <= std::min(nmax, 7); ++n) {
    r.check("count_tesler(1^" + std::to_string(n) + ")", [&] {
      return expect_eq(count_tesler(HookSums::ones(static_cast<std::size_t>(n))), oeis[static_cast<std::size_t>(n - 1)]);
    });
  }
  for (int n = 2; n <= std::min(nmax, 7); ++n) {
    r.check("projection recursion n=" + std::to_string(n), [&] {
      return expect_eq(count_via_projection(HookSums::ones(static_cast<std::size_t>(n))),
                       oeis[static_cast<std::size_t>(n - 1)]);
    });
  }
  for (int n = 1; n <= std::min(nmax, 4); ++n) {
    r.check("lidskii_count = kostant = enumeration, entries 0..2, n=" + std::to_string(n), [&] {
      std::size_t instances = 0;
      for (const auto& a : grid(static_cast<std::size_t>(n), 2)) {
        const HookSums h = HookSums::from_ints(a);
        const BigInt by_lidskii = lidskii_count(h);
        const BigInt by_kostant = count_tesler(h);
        const BigInt listed = enumerate_tesler(h).size();
        if (by_lidskii != by_kostant || by_kostant != listed) {
          return Outcome{false, "a=(" + hooks_label(a) + "): lidskii " + by_lidskii.str() + ", kostant " +
                                    by_kostant.str() + ", enumeration " + listed.str()};
        }
        ++instances;
      }
      return Outcome{true, std::to_string(instances) + " instances"};
    });
  }
  r.check("reversal on 200 random netflow vectors", [&] {
    std::mt19937_64 rng(20260101);
    const int top = std::clamp(nmax, 2, 6);
    for (int k = 0; k < 200; ++k) {
      const int n = std::uniform_int_distribution<int>(1, top)(rng);
      std::vector<BigInt> v;
      BigInt total = 0;
      for (int i = 0; i < n; ++i) {
        v.emplace_back(std::uniform_int_distribution<int>(0, 4)(rng));
        total += v.back();
      }
      v.push_back(-total);
      kostant_reversed_equal(NetflowVector(std::move(v)));
    }
    return Outcome{true, "200 vectors"};
  });
}

void volumes_suite(int nmax, Runner& r) {
  for (int n = 2; n <= std::min(nmax, 6); ++n) {
    r.check("lidskii_volume(1^" + std::to_string(n) + ") = closed form", [&] {
      return expect_eq(lidskii_volume(HookSums::ones(static_cast<std::size_t>(n))), vol_ones_closed(n));
    });
    r.check("CRY volume n=" + std::to_string(n), [&] { return expect_eq(cry_volume(n), catalan_product(n - 1)); });
  }
  for (int n = 1; n <= std::min(nmax, 8); ++n) {
    r.check("volume factorization n=" + std::to_string(n), [&] {
      return expect_eq(vol_ones_closed(n), syt_staircase(n) * catalan_product(n));
    });
  }
  r.check("L_n recursion = Gamma product, n<=5, a<=3, c<=3", [&] {
    std::size_t cases = 0;
    for (int n = 2; n <= std::min(nmax, 5); ++n) {
      for (int a = 1; a <= 3; ++a) {
        for (int c = 0; c <= 3; ++c) {
          l_value(n, a, c);
          ++cases;
        }
      }
    }
    return Outcome{true, std::to_string(cases) + " cases"};
  });
  for (int n = 2; n <= std::min(nmax, 5); ++n) {
    r.check("L_" + std::to_string(n) + "(1,1) = volume", [&] {
      const BigInt got = require_integral(l_value(n, 1, 1), "L_n(1,1)");
      return expect_eq(got, lidskii_volume(HookSums::ones(static_cast<std::size_t>(n))));
    });
    r.check("L_" + std::to_string(n) + "(1,2) product", [&] {
      BigInt denominator = factorial(n);
      for (int i = 1; i < n; ++i) denominator *= factorial(i) * factorial(i);
      const Rational want(factorial(static_cast<std::int64_t>(n) * (n - 1)), denominator);
      const Rational got = l_value(n, 1, 2);
      if (got == want) return Outcome{true, got.str()};
      return Outcome{false, "got " + got.str() + ", expected " + want.str()};
    });
  }
  for (int n = 2; n <= std::min(nmax, 6); ++n) {
    r.check("M_" + std::to_string(n) + "(1,1,1) = Catalan product", [&] {
      return expect_eq(require_integral(morris_m(n, 1, 1, 1), "M_n(1,1,1)"), catalan_product(n));
    });
  }
}

void faces_suite(int nmax, Runner& r) {
  for (int n = 1; n <= std::min(nmax, 5); ++n) {
    r.check("simplicity criterion vs vertex degrees, n=" + std::to_string(n), [&] {
      const auto d = static_cast<std::size_t>(choose2(n));
      std::size_t signatures = 0;
      for (std::uint32_t bits = 0; bits < (1U << (n - 1)); ++bits) {
        Signature s(static_cast<std::size_t>(n), Sign::Zero);
        s[0] = Sign::Plus;
        for (int k = 1; k < n; ++k) {
          if ((bits >> (n - 1 - k)) & 1U) s[static_cast<std::size_t>(k)] = Sign::Plus;
        }
        const HookSums a = representative_hooks(s);
        const auto degrees = vertex_degrees(a);
        const bool brute = std::all_of(degrees.begin(), degrees.end(), [d](const VertexDegree& v) { return v.degree == d; });
        if (brute != is_simple(a)) {
          return Outcome{false, "signature " + to_string(s) + ": criterion " + (is_simple(a) ? "simple" : "not simple") +
                                    ", degrees say otherwise"};
        }
        ++signatures;
      }
      return Outcome{true, std::to_string(signatures) + " signatures"};
    });
  }
  for (int n = 1; n <= std::min(nmax, 5); ++n) {
    r.check("faces of Tes_" + std::to_string(n) + "(1^n)", [&] {
      const HookSums a = HookSums::ones(static_cast<std::size_t>(n));
      const FacePoset poset = build_face_poset(a);
      if (BigInt(poset.of_dimension(0).size()) != factorial(n)) return Outcome{false, "vertex count is not n!"};
      std::vector<int> dims;
      for (int k = 1; k < n; ++k) dims.push_back(k);
      if (poset.f_vector() != simplex_product_f_vector(dims)) return Outcome{false, "f-vector differs from simplex product"};
      if (h_vector(a) != q_factorial(n)) return Outcome{false, "h-vector differs from [n]!_x"};
      return Outcome{true, "f = " + io::join(poset.f_vector())};
    });
  }
  for (int n = 4; n <= std::min(nmax, 5); ++n) {
    r.check("faces of signature +0+^" + std::to_string(n - 2), [&] {
      const HookSums a = representative_hooks(parse_signature("+0" + std::string(static_cast<std::size_t>(n - 2), '+')));
      const auto verts = vertices(a);
      if (BigInt(verts.size()) != 2 * factorial(n - 1)) return Outcome{false, "vertex count is not 2(n-1)!"};
      UniPoly want = q_factorial(n - 1);
      UniPoly shift(static_cast<std::size_t>(n), 0);
      shift[0] = 1;
      shift[static_cast<std::size_t>(n - 1)] = 1;
      want = poly_mul(shift, want);
      const auto h = h_vector(a);
      if (h != want) return Outcome{false, "h = " + io::join(h) + ", expected " + io::join(want)};
      return Outcome{true, "h = " + io::join(h)};
    });
  }
}

void harmonics_suite(int nmax, unsigned threads, Runner& r) {
  for (int n = 1; n <= std::min(nmax, 6); ++n) {
    r.check("Hilbert series n=" + std::to_string(n), [&] {
      const QTPoly dh = hilbert_dh(n, threads);
      if (!dh.is_symmetric()) return Outcome{false, "not symmetric in q,t"};
      const BigInt at_one = dh.evaluate(1, 1);
      if (at_one != ipow(BigInt(n + 1), n - 1)) return Outcome{false, "value at (1,1) is " + at_one.str()};
      if (n <= 5 && dh != parking_gf(n)) return Outcome{false, "differs from the parking function sum"};
      return Outcome{true, at_one.str() + " at q=t=1"};
    });
    r.check("alternant n=" + std::to_string(n), [&] {
      const QTPoly alt = hilbert_alternant(n, threads);
      if (alt != qt_catalan(n)) return Outcome{false, "differs from the area/bounce sum"};
      return expect_eq(alt.evaluate(1, 1), catalan(n));
    });
  }
  for (int n = 1; n <= std::min(nmax, 7); ++n) {
    r.check("permutation Tesler sum n=" + std::to_string(n),
            [&] { return expect_eq(perm_tesler_sum(n), ipow(BigInt(n + 1), n - 1)); });
    r.check("Pitman-Stanley count n=" + std::to_string(n), [&] { return expect_eq(pitman_stanley_count(n), catalan(n)); });
  }
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, int nmax, unsigned threads) {
  if (nmax < 1) throw std::invalid_argument("nmax must be at least 1");
  std::vector<CheckResult> out;
  auto wants = [suite](Suite s) { return suite == Suite::All || suite == s; };
  if (wants(Suite::Counts)) {
    Runner r("counts", out);
    counts_suite(nmax, r);
  }
  if (wants(Suite::Volumes)) {
    Runner r("volumes", out);
    volumes_suite(nmax, r);
  }
  if (wants(Suite::Faces)) {
    Runner r("faces", out);
    faces_suite(nmax, r);
  }
  if (wants(Suite::Harmonics)) {
    Runner r("harmonics", out);
    harmonics_suite(nmax, threads, r);
  }
  return out;
}

}  // namespace tesler
