#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tesler/core.hpp"
#include "tesler/kostant.hpp"

using namespace tesler;
using testing::bigs;
using testing::hooks;
using testing::tesler_rows;

TEST_CASE("hook sums validate their entries") {
  CHECK_THROWS_AS(HookSums(std::vector<BigInt>{}), std::invalid_argument);
  CHECK_THROWS_AS(hooks({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(hooks({1, 2})(3), std::out_of_range);
  const HookSums a = hooks({7, 0, 3, 0});
  CHECK(a.total() == 10);
  CHECK_FALSE(a.all_positive());
  CHECK(to_string(a) == "7,0,3,0");
}

TEST_CASE("signature") {
  CHECK(to_string(signature(hooks({7, 0, 3, 0}))) == "+0+0");
  CHECK(to_string(signature(hooks({1, 1, 1}))) == "+++");
  CHECK(to_string(signature(hooks({0, 0}))) == "00");
  CHECK(parse_signature("+0+") == Signature{Sign::Plus, Sign::Zero, Sign::Plus});
  CHECK_THROWS_AS(parse_signature("+-"), std::invalid_argument);
  CHECK(representative_hooks(parse_signature("+0+")) == hooks({1, 0, 1}));
}

TEST_CASE("hook_sum") {
  SUBCASE("diagonal") {
    const auto m = UpperTriangular::from_rows(testing::big_rows({{1, 0, 0}, {1, 0}, {1}}));
    for (std::size_t k = 1; k <= 3; ++k) CHECK(hook_sum(m, k) == 1);
  }
  SUBCASE("last column") {
    const auto m = UpperTriangular::from_rows(testing::big_rows({{0, 0, 1}, {0, 1}, {3}}));
    CHECK(hook_sum(m, 1) == 1);
    CHECK(hook_sum(m, 2) == 1);
    CHECK(hook_sum(m, 3) == 1);
  }
  SUBCASE("2x2") {
    const auto m = UpperTriangular::from_rows(testing::big_rows({{0, 1}, {2}}));
    CHECK(hook_sum(m, 1) == 1);
    CHECK(hook_sum(m, 2) == 1);
    CHECK_THROWS_AS(hook_sum(m, 0), std::out_of_range);
    CHECK_THROWS_AS(hook_sum(m, 3), std::out_of_range);
  }
}

TEST_CASE("Tesler matrix construction checks hook sums") {
  CHECK_NOTHROW(TeslerMatrix::from_rows(hooks({1, 1}), testing::big_rows({{0, 1}, {2}})));
  CHECK_THROWS_AS(TeslerMatrix::from_rows(hooks({1, 1}), testing::big_rows({{1, 1}, {2}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(TeslerMatrix::from_rows(hooks({1, 1}), testing::big_rows({{1, 0, 0}, {1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(UpperTriangular::from_rows(testing::big_rows({{1, -1}, {1}})), std::invalid_argument);
}

TEST_CASE("tesler_to_flow") {
  SUBCASE("diagonal") {
    const Flow f = tesler_to_flow(tesler_rows({{1, 0, 0}, {1, 0}, {1}}));
    for (std::size_t i = 1; i <= 3; ++i) {
      for (std::size_t j = i + 1; j <= 4; ++j) CHECK(f(i, j) == (j == 4 ? 1 : 0));
    }
    CHECK(f.netflow() == bigs({1, 1, 1, -3}));
  }
  SUBCASE("2x2") {
    const Flow f = tesler_to_flow(tesler_rows({{0, 1}, {2}}));
    CHECK(f(1, 2) == 1);
    CHECK(f(2, 3) == 2);
    CHECK(f(1, 3) == 0);
    CHECK(f.netflow() == bigs({1, 1, -2}));
  }
}

TEST_CASE("flow_to_tesler rejects negative netflow") {
  // f(1,2) = 1 only: vertex 2 has netflow -1.
  const Flow f(2, bigs({1, 0, 0}));
  CHECK_THROWS_AS(flow_to_tesler(f), std::invalid_argument);
  CHECK_THROWS_AS(Flow(2, bigs({1, 0})), std::invalid_argument);
  CHECK_THROWS_AS(Flow(2, bigs({1, -1, 0})), std::invalid_argument);
}

TEST_CASE("tesler_to_transportation by hand") {
  // rows (1,0),(.,1): f(1,2)=0, f(1,3)=1, f(2,3)=1, m_21 = a_1 - f(1,2) = 1
  const auto p = tesler_to_transportation(tesler_rows({{1, 0}, {1}}));
  CHECK(p.rows() == std::vector<std::vector<BigInt>>{bigs({0, 1}), bigs({1, 1})});
  CHECK(p.marginals() == bigs({1, 2}));
  // rows (0,1),(.,2): f(1,2)=1, f(1,3)=0, f(2,3)=2, m_21 = 1 - 1 = 0
  const auto q = tesler_to_transportation(tesler_rows({{0, 1}, {2}}));
  CHECK(q.rows() == std::vector<std::vector<BigInt>>{bigs({1, 0}), bigs({0, 2})});
  CHECK(q.marginals() == bigs({1, 2}));
  const auto single = tesler_to_transportation(tesler_rows({{5}}));
  CHECK(single.rows() == std::vector<std::vector<BigInt>>{bigs({5})});
}

TEST_CASE("transportation embedding needs a_1 > 0") {
  CHECK_THROWS_AS(tesler_to_transportation(tesler_rows({{0, 0}, {1}})), std::invalid_argument);
  CHECK_THROWS_AS(TransportationPoint({bigs({1, 0, 0}), bigs({0, 1, 0}), bigs({1, 0, 1})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TransportationPoint({bigs({1, 1}), bigs({0, 1})}), std::invalid_argument);
}

TEST_CASE("Phi and Psi invert on enumerated matrices") {
  for (const auto& a : {hooks({1, 1, 1}), hooks({2, 0, 1}), hooks({1, 2, 0, 1}), hooks({3, 1, 2})}) {
    for (const auto& m : enumerate_tesler(a)) {
      CHECK(flow_to_tesler(tesler_to_flow(m)) == m);
      const auto p = tesler_to_transportation(m);
      for (std::size_t i = 1; i <= p.size(); ++i) {
        for (std::size_t j = 1; j + 2 <= i; ++j) CHECK(p(i, j) == 0);
      }
      CHECK(transportation_to_tesler(p) == m);
    }
  }
}

TEST_CASE("enumeration agrees with the grid oracle") {
  for (const auto& a : std::vector<std::vector<std::int64_t>>{{1, 1}, {1, 1, 1}, {0, 2, 1}, {2, 0}, {0}}) {
    const auto expected = oracle::tesler_grid(a);
    const auto got = enumerate_tesler(HookSums::from_ints(a));
    REQUIRE(got.size() == expected.size());
    for (std::size_t k = 0; k < got.size(); ++k) {
      for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = i; j <= a.size(); ++j) CHECK(got[k](i, j) == expected[k][i - 1][j - 1]);
      }
    }
  }
}

TEST_CASE("tableau conditions") {
  const HookSums a = hooks({7, 0, 3, 0});
  // Row 1 must hold a 1; a 1 at (1,2) forces row 2 to hold a 1.
  CHECK_NOTHROW(TeslerTableau::from_rows(a, {{1, 0, 0, 0}, {0, 0, 0}, {1, 0}, {0}}));
  CHECK_NOTHROW(TeslerTableau::from_rows(a, {{0, 1, 0, 0}, {1, 0, 0}, {1, 0}, {0}}));
  CHECK_THROWS_AS(TeslerTableau::from_rows(a, {{0, 0, 0, 0}, {0, 0, 0}, {1, 0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(TeslerTableau::from_rows(a, {{0, 1, 0, 0}, {0, 0, 0}, {1, 0}, {0}}), std::invalid_argument);
  // condition (3): row 4 has a_4 = 0 and nothing above in column 4
  CHECK_THROWS_AS(TeslerTableau::from_rows(a, {{1, 0, 0, 0}, {0, 0, 0}, {1, 0}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(TeslerTableau::from_rows(a, {{1, 0, 0, 2}, {0, 0, 0}, {1, 0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(TeslerTableau::from_rows(a, {{1, 0, 0}, {0, 0, 0}, {1, 0}, {0}}), std::invalid_argument);
}
