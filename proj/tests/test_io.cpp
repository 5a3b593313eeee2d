#include <doctest.h>

#include "helpers.hpp"
#include "tesler/faces.hpp"
#include "tesler/io.hpp"
#include "tesler/kostant.hpp"

using namespace tesler;
using testing::hooks;
using testing::tesler_rows;

TEST_CASE("matrix JSON layout") {
  const auto m = tesler_rows({{0, 1}, {2}});
  const io::Json j = io::to_json(m);
  CHECK(j.dump() == R"({"n":2,"hooks":[1,1],"rows":[[0,1],[2]]})");
  CHECK(io::tesler_from_json(j) == m);
}

TEST_CASE("flow JSON layout") {
  const Flow f = tesler_to_flow(tesler_rows({{0, 1}, {2}}));
  const io::Json j = io::to_json(f);
  CHECK(j.dump() == R"({"n":2,"edges":{"1,2":1,"1,3":0,"2,3":2}})");
  CHECK(io::flow_from_json(j) == f);
  CHECK_THROWS_AS(io::flow_from_json(io::Json::parse(R"({"n":2,"edges":{"1,2":1,"1,3":0}})")), io::ParseError);
  CHECK_THROWS_AS(io::flow_from_json(io::Json::parse(R"({"n":2,"edges":{"2,1":1,"1,3":0,"2,3":2}})")), io::ParseError);
}

TEST_CASE("round trips over all of T_3(1,1,1) and T_3(2,0,1)") {
  for (const auto& a : {HookSums::ones(3), hooks({2, 0, 1})}) {
    for (const auto& m : enumerate_tesler(a)) {
      CHECK(io::tesler_from_json(io::Json::parse(io::to_json(m).dump())) == m);
      const Flow f = tesler_to_flow(m);
      CHECK(io::flow_from_json(io::Json::parse(io::to_json(f).dump())) == f);
    }
    for (const auto& t : enumerate_tableaux(a)) CHECK(io::tableau_from_json(io::to_json(t)) == t);
  }
}

TEST_CASE("big integers survive as strings") {
  const BigInt huge("123456789012345678901234567890");
  const io::Json j = io::big_to_json(huge);
  CHECK(j.is_string());
  CHECK(io::big_from_json(j) == huge);
  CHECK(io::big_from_json(io::Json(17)) == 17);
  CHECK_THROWS_AS(io::big_from_json(io::Json(1.5)), io::ParseError);
  CHECK_THROWS_AS(io::big_from_json(io::Json("12a")), io::ParseError);
}

TEST_CASE("polynomial JSON") {
  const QTPoly p = 1 + 2 * QTPoly::q() - QTPoly::t();
  const io::Json j = io::to_json(p);
  CHECK(j.dump() == R"([{"q":0,"t":0,"c":"1"},{"q":0,"t":1,"c":"-1"},{"q":1,"t":0,"c":"2"}])");
  CHECK(io::qtpoly_from_json(j) == p);
  CHECK_THROWS_AS(io::qtpoly_from_json(io::Json::parse(R"([{"q":-1,"t":0,"c":"1"}])")), io::ParseError);
}

TEST_CASE("hook parsing") {
  CHECK(io::parse_hooks("1,1,1") == HookSums::ones(3));
  CHECK(io::parse_hooks(" 7, 0,3 ,0") == hooks({7, 0, 3, 0}));
  CHECK_THROWS_AS(io::parse_hooks(""), io::ParseError);
  CHECK_THROWS_AS(io::parse_hooks("1,,2"), io::ParseError);
  CHECK_THROWS_AS(io::parse_hooks("1,-2"), io::ParseError);
  CHECK_THROWS_AS(io::parse_hooks("x"), io::ParseError);
  const auto [q, t] = io::parse_point("2,-1");
  CHECK(q == 2);
  CHECK(t == -1);
  CHECK_THROWS_AS(io::parse_point("1"), io::ParseError);
}

TEST_CASE("text rendering") {
  CHECK(io::render_matrix(tesler_rows({{0, 1}, {12}})) == " 0  1\n . 12\n");
  const auto t = enumerate_tableaux(hooks({1, 1}))[2];
  CHECK(io::render_tableau(t) == "1 1\n  1\n");
  CHECK(io::join(testing::bigs({6, 9, 5, 1})) == "6,9,5,1");
}
