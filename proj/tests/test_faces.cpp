#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tesler/faces.hpp"
#include "tesler/kostant.hpp"

using namespace tesler;
using testing::bigs;
using testing::hooks;

namespace {

BigInt euler_sum(const std::vector<BigInt>& f) {
  BigInt s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i % 2 == 0) ? f[i] : BigInt(-f[i]);
  return s;
}

}  // namespace

TEST_CASE("reduce_hooks strips leading zeros") {
  CHECK(reduce_hooks(hooks({0, 0, 2, 0, 1})) == hooks({2, 0, 1}));
  CHECK(reduce_hooks(hooks({0, 0})) == hooks({0}));
  CHECK(reduce_hooks(hooks({1, 0})) == hooks({1, 0}));
}

TEST_CASE("check_tableau") {
  CHECK(check_tableau(hooks({1, 1}), {{1, 0}, {1}}));
  CHECK(check_tableau(hooks({1, 1}), {{1, 1}, {1}}));
  CHECK_FALSE(check_tableau(hooks({1, 1}), {{0, 0}, {1}}));
  CHECK_FALSE(check_tableau(hooks({1, 0}), {{1, 0}, {1}}));
  CHECK_THROWS_AS(check_tableau(hooks({1, 1}), {{1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(check_tableau(hooks({1, 1}), {{1, 3}, {1}}), std::invalid_argument);
}

TEST_CASE("tableaux of (1,1)") {
  // Row 1 in {10, 01, 11}; row 2 must be 1.
  const auto all = enumerate_tableaux(hooks({1, 1}));
  REQUIRE(all.size() == 3);
  CHECK(all[0].rows() == std::vector<std::vector<int>>{{0, 1}, {1}});
  CHECK(all[1].rows() == std::vector<std::vector<int>>{{1, 0}, {1}});
  CHECK(all[2].rows() == std::vector<std::vector<int>>{{1, 1}, {1}});
  CHECK(tableau_dim(all[2]) == 1);
  CHECK(tableau_max(all[0], all[1]) == all[2]);
}

TEST_CASE("tableau_max needs the same hook sums") {
  const auto t1 = enumerate_tableaux(hooks({1, 1}))[0];
  const auto t2 = enumerate_tableaux(hooks({2, 1}))[0];
  CHECK_THROWS_AS(tableau_max(t1, t2), std::invalid_argument);
}

TEST_CASE("face poset of the prism") {
  const FacePoset p = build_face_poset(HookSums::ones(3));
  CHECK(p.f_vector() == bigs({6, 9, 5, 1}));
  CHECK(p.dimension() == 3);
  CHECK(p.minimal_elements() == p.of_dimension(0));
  CHECK(f_vector(HookSums::ones(3)) == bigs({6, 9, 5, 1}));
  CHECK(euler_sum(p.f_vector()) == 1);
}

TEST_CASE("vertices of Tes_n(1^n) are the permutation Tesler matrices") {
  for (std::size_t n = 1; n <= 5; ++n) {
    auto v = vertices(HookSums::ones(n));
    std::sort(v.begin(), v.end());
    CHECK(v == permutation_teslers(HookSums::ones(n)));
  }
}

TEST_CASE("vertex_matrix rejects positive-dimensional tableaux") {
  const auto all = enumerate_tableaux(hooks({1, 1}));
  CHECK_THROWS_AS(vertex_matrix(all[2]), std::invalid_argument);
  const TeslerMatrix m = vertex_matrix(all[0]);  // 0 1 / 1 -> x_12 = 1, x_22 = 2
  CHECK(m(1, 2) == 1);
  CHECK(m(2, 2) == 2);
}

TEST_CASE("simplicity criterion") {
  CHECK(is_simple(hooks({7, 0, 3, 0})));
  CHECK(is_simple(hooks({1, 1, 1, 1})));
  CHECK(is_simple(hooks({1, 1, 1, 0})));
  CHECK(is_simple(hooks({1, 0, 1, 1})));
  CHECK(is_simple(hooks({2, 0, 5, 0})));
  CHECK(is_simple(hooks({1, 0, 0})));
  CHECK_FALSE(is_simple(hooks({1, 0, 1, 0, 1})));
  CHECK_FALSE(is_simple(hooks({1, 1, 0, 1})));
  // leading zeros are stripped first: (0,1,0,1,0) behaves like (1,0,1,0)
  CHECK(is_simple(hooks({0, 1, 0, 1, 0})));
}

TEST_CASE("+0+0+ has a vertex of degree above the dimension") {
  const auto degrees = vertex_degrees(hooks({1, 0, 1, 0, 1}));
  const bool high = std::any_of(degrees.begin(), degrees.end(), [](const VertexDegree& v) { return v.degree > 10; });
  CHECK(high);
}

TEST_CASE("vertex degrees of a simple polytope equal its dimension") {
  for (const auto& a : {hooks({1, 1, 1}), hooks({1, 0, 1, 1}), hooks({3, 0, 2, 0})}) {
    for (const auto& v : vertex_degrees(a)) CHECK(v.degree == static_cast<std::size_t>(choose2(static_cast<std::int64_t>(a.size()))));
  }
}

TEST_CASE("h-vectors") {
  for (int n = 1; n <= 5; ++n) CHECK(h_vector(HookSums::ones(static_cast<std::size_t>(n))) == q_factorial(n));
  CHECK(h_vector(HookSums::ones(4)) == bigs({1, 3, 5, 6, 5, 3, 1}));
  // (1 + x^3)[3]!_x = (1 + x^3)(1 + 2x + 2x^2 + x^3)
  CHECK(h_vector(hooks({1, 0, 1, 1})) == bigs({1, 2, 2, 2, 2, 2, 1}));
  CHECK(vertices(hooks({1, 0, 1, 1})).size() == 12);
  CHECK_THROWS_AS(h_vector(hooks({1, 0, 1, 0, 1})), std::invalid_argument);
  CHECK(h_from_f(bigs({6, 9, 5, 1})) == bigs({1, 2, 2, 1}));
}

TEST_CASE("f-vector of the simplex product") {
  CHECK(simplex_product_f_vector({1, 2}) == bigs({6, 9, 5, 1}));
  CHECK(simplex_product_f_vector({}) == bigs({1}));
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<int> dims;
    for (int d = 1; d < static_cast<int>(n); ++d) dims.push_back(d);
    CHECK(build_face_poset(HookSums::ones(n)).f_vector() == simplex_product_f_vector(dims));
  }
  const auto f7 = f_vector(HookSums::ones(7));
  CHECK(f7.front() == 5040);
  CHECK(euler_sum(f7) == 1);
}

TEST_CASE("Euler relation across signatures") {
  for (const auto& a : {hooks({1, 0, 1, 0}), hooks({1, 0, 0, 1}), hooks({2, 1, 0, 3}), hooks({1, 0, 1, 0, 1})}) {
    CHECK(euler_sum(f_vector(a)) == 1);
  }
}

TEST_CASE("outdegree generating function matches the h-vector") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(outdegree_gf(HookSums::ones(n)) == h_vector(HookSums::ones(n)));
}

TEST_CASE("face operations reject unreduced input") {
  CHECK_THROWS_AS(build_face_poset(hooks({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(f_vector(hooks({0, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(vertices(hooks({0, 1})), std::invalid_argument);
  CHECK(f_vector(hooks({0})) == bigs({1}));
}
