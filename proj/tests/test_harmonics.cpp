#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "tesler/harmonics.hpp"
#include "tesler/kostant.hpp"

using namespace tesler;
using testing::tesler_rows;

namespace {

QTPoly poly(const oracle::QT& terms) {
  QTPoly p;
  for (const auto& [e, c] : terms) p.add_term(e.first, e.second, c);
  return p;
}

}  // namespace

TEST_CASE("QTPoly arithmetic") {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  CHECK((q + t) * (q - t) == q * q - t * t);
  CHECK((q - q).is_zero());
  CHECK((q + 1).evaluate(2, 5) == 3);
  CHECK(to_string(QTPoly()) == "0");
  CHECK(to_string(1 + q + t) == "1 + t + q");
  CHECK(to_string(poly({{{2, 1}, -3}, {{0, 0}, 1}})) == "1 - 3*q^2*t");
  CHECK(to_string(-q) == "-q");
  CHECK((q * t * t).swapped() == q * q * t);
  CHECK((q + t).is_symmetric());
  CHECK_FALSE((q + 2 * t).is_symmetric());
  CHECK((1 + q + q * t).at_t_zero() == 1 + q);
  CHECK(QTPoly::monomial(1, 1, 0).is_zero());
  CHECK_THROWS_AS(QTPoly::monomial(-1, 0), std::invalid_argument);
}

TEST_CASE("exact division by (1 - q), (1 - t) and -M") {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  const QTPoly x = 3 + q * t - 2 * q * q;
  CHECK(((1 - q) * x).divided_by_one_minus_q() == x);
  CHECK(((1 - t) * x).divided_by_one_minus_t() == x);
  CHECK((minus_m() * x).divided_by_minus_m() == x);
  CHECK(QTPoly().divided_by_one_minus_q().is_zero());
  CHECK_THROWS_AS(q.divided_by_one_minus_q(), InvariantError);
  CHECK_THROWS_AS((1 + t).divided_by_one_minus_t(), InvariantError);
}

TEST_CASE("qt_bracket") {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  CHECK(qt_bracket(1) == 1);
  CHECK(qt_bracket(2) == q + t);
  CHECK(qt_bracket(3) == q * q + q * t + t * t);
  CHECK((q - t) * qt_bracket(4) == q * q * q * q - t * t * t * t);
  CHECK_THROWS_AS(qt_bracket(0), std::domain_error);
}

TEST_CASE("Haglund weight") {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  CHECK(haglund_weight(tesler_rows({{1, 0, 0}, {1, 0}, {1}})) == 1);
  CHECK(haglund_weight(tesler_rows({{0, 1}, {2}})) == q + t);
  for (const auto& m : permutation_teslers(HookSums::ones(4))) {
    BigInt prod = 1;
    for (const auto& v : m.entries().packed()) {
      if (v != 0) prod *= v;
    }
    CHECK(haglund_weight(m).evaluate(1, 1) == prod);
  }
  // Fewer positive entries than rows: (-M)^n does not divide.
  CHECK_THROWS_AS(haglund_weight(tesler_rows({{0, 0}, {0}})), InvariantError);
}

TEST_CASE("Gorsky-Negut weight") {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  CHECK(gorsky_negut_weight(tesler_rows({{1, 0, 0}, {1, 0}, {1}})) == 1);
  CHECK(gorsky_negut_weight(tesler_rows({{0, 1}, {2}})) == q + t - 1);
  const auto corner = tesler_rows({{0, 0, 1}, {1, 0}, {2}});
  CHECK(corner.hooks() == HookSums::ones(3));
  CHECK(gorsky_negut_weight(corner).evaluate(1, 1) == 0);
}

TEST_CASE("Hilbert series from Tesler matrices") {
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  CHECK(hilbert_dh(1) == 1);
  CHECK(hilbert_dh(2) == 1 + q + t);
  CHECK(hilbert_dh(4).evaluate(1, 1) == 125);
  const QTPoly dh3 = 1 + 2 * q + 2 * t + 2 * q * q + 3 * q * t + 2 * t * t + q * q * q + q * q * t + q * t * t + t * t * t;
  CHECK(hilbert_dh(3) == dh3);
  CHECK(hilbert_dh(4, 3) == hilbert_dh(4, 1));
  CHECK(hilbert_alternant(1) == 1);
  CHECK(hilbert_alternant(2) == q + t);
  CHECK(hilbert_alternant(3).evaluate(1, 1) == 5);
  CHECK(hilbert_alternant(5, 2) == hilbert_alternant(5));
  CHECK_THROWS_AS(hilbert_dh(0), std::domain_error);
}

TEST_CASE("parking functions") {
  CHECK(is_parking_function({1, 1}));
  CHECK(is_parking_function({2, 1}));
  CHECK_FALSE(is_parking_function({2, 2}));
  CHECK_FALSE(is_parking_function({0, 1}));
  CHECK_THROWS_AS(ParkingFunction({3, 1, 3}), std::invalid_argument);
  // both cars in column 1: rows have areas 0, 1
  CHECK(ParkingFunction({1, 1}).area() == 1);
  CHECK(ParkingFunction({1, 1}).dinv() == 0);
  CHECK(ParkingFunction({1, 2}).area() == 0);
  CHECK(ParkingFunction({1, 2}).dinv() == 1);
  CHECK(ParkingFunction({2, 1}).area() == 0);
  CHECK(ParkingFunction({2, 1}).dinv() == 0);
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  CHECK(parking_gf(1) == 1);
  CHECK(parking_gf(2) == 1 + q + t);
  CHECK(parking_gf(3).evaluate(1, 1) == 16);
  CHECK(parking_gf(4).evaluate(1, 1) == 125);
}

TEST_CASE("Dyck paths and the q,t-Catalan sum") {
  CHECK_THROWS_AS(DyckPath({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(DyckPath({0, -1}), std::invalid_argument);
  const DyckPath staircase({0, 0, 0});
  CHECK(staircase.bounce_points() == std::vector<int>{1, 2, 3});
  CHECK(staircase.bounce() == 3);
  const DyckPath top({0, 1, 2});
  CHECK(top.area() == 3);
  CHECK(top.bounce() == 0);
  for (int n = 1; n <= 7; ++n) CHECK(dyck_paths(n).size() == static_cast<std::size_t>(oracle::catalan(n)));
  const QTPoly q = QTPoly::q(), t = QTPoly::t();
  CHECK(qt_catalan(1) == 1);
  CHECK(qt_catalan(2) == q + t);
  // (0,0,0): t^3; (0,0,1): q t^2; (0,1,0): q t; (0,1,1): q^2 t; (0,1,2): q^3
  CHECK(qt_catalan(3) == q * q * q + q * q * t + q * t + q * t * t + t * t * t);
  CHECK(qt_catalan(5).is_symmetric());
}

TEST_CASE("permutation Tesler sum") {
  CHECK(perm_tesler_sum(1) == 1);
  CHECK(perm_tesler_sum(2) == 3);
  CHECK(perm_tesler_sum(3) == 16);
}

TEST_CASE("Tesler sums match their combinatorial counterparts") {
  for (int n = 1; n <= 4; ++n) {
    const QTPoly dh = hilbert_dh(n);
    CHECK(dh == parking_gf(n));
    CHECK(dh.is_symmetric());
    CHECK(dh.at_t_zero() == parking_gf(n).at_t_zero());
    CHECK(hilbert_alternant(n) == qt_catalan(n));
  }
}
