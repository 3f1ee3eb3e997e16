#include <doctest.h>

#include <stdexcept>

#include "jspec/combinatorics.hpp"

using namespace jspec;

TEST_CASE("binomial basics") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  // C(11, 2) by the product formula.
  CHECK(binomial(11, 2) == Int(11) * 10 / 2);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
  CHECK_THROWS_AS(binomial(-5, -5), std::invalid_argument);
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (long n = 1; n <= 64; ++n)
    for (long k = 1; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("KSubset validation") {
  CHECK_THROWS_AS(KSubset(5, {0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(5, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(KSubset(5, {-1, 2}), std::invalid_argument);
  KSubset s(5, {3, 0, 1});  // sorted on construction
  CHECK(s.elements == std::vector<int>{0, 1, 3});
  CHECK(s.contains(3));
  CHECK(!s.contains(2));
}

TEST_CASE("rank and unrank") {
  CHECK(subset_rank(KSubset(7, {0, 1, 2})) == 0);
  CHECK(subset_unrank(34, 7, 3).elements == std::vector<int>{4, 5, 6});
  for (int r = 0; r < 35; ++r) CHECK(subset_rank(subset_unrank(r, 7, 3)) == r);
  CHECK_THROWS_AS(subset_unrank(35, 7, 3), std::invalid_argument);
  CHECK_THROWS_AS(subset_unrank(-1, 7, 3), std::invalid_argument);
}

TEST_CASE("rank bijectivity on every small instance") {
  for (int n = 1; n <= 40; ++n) {
    for (int k = 0; k <= n; ++k) {
      Int total = binomial(n, k);
      if (total > 5000) continue;
      long count = total.get_si();
      for (long r = 0; r < count; ++r) {
        KSubset s = subset_unrank(r, n, k);
        CHECK(s.k() == k);
        CHECK(subset_rank(s) == r);
      }
    }
  }
}

TEST_CASE("intersection size") {
  CHECK(intersection_size(KSubset(7, {1, 2, 3}), KSubset(7, {1, 2, 4})) == 2);
  CHECK(intersection_size(KSubset(8, {1, 2, 3}), KSubset(8, {5, 6, 7})) == 0);
  CHECK(intersection_size(KSubset(7, {1, 2, 3}), KSubset(7, {1, 2, 3})) == 3);
  CHECK_THROWS_AS(intersection_size(KSubset(7, {0, 1}), KSubset(8, {0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(intersection_size(KSubset(7, {0, 1}), KSubset(7, {0, 1, 2})),
                  std::invalid_argument);
}

TEST_CASE("Johnson graph construction") {
  SUBCASE("J(3,2,1) is the triangle") {
    JohnsonGraph g = build_johnson_graph({3, 2, 1});
    CHECK(g.num_vertices == 3);
    for (int u = 0; u < 3; ++u)
      for (int v = 0; v < 3; ++v)
        CHECK(g.adjacent(u, v) == (u != v));
  }

  SUBCASE("J(7,3,1) is 18-regular on 35 vertices") {
    JohnsonGraph g = build_johnson_graph({7, 3, 1});
    CHECK(g.num_vertices == 35);
    CHECK(g.degree == 18);
    for (int v = 0; v < g.num_vertices; ++v) CHECK(g.vertex_degree(v) == 18);
  }

  SUBCASE("J(7,3,0) pairs disjoint triples") {
    JohnsonGraph g = build_johnson_graph({7, 3, 0});
    CHECK(g.num_vertices == 35);
    CHECK(g.degree == 4);
    for (int v = 0; v < g.num_vertices; ++v) CHECK(g.vertex_degree(v) == 4);
  }

  SUBCASE("degree formula holds on assorted instances") {
    for (auto [n, k, t] : {std::tuple{5, 2, 0}, {5, 2, 1}, {6, 3, 2}, {8, 4, 1},
                           {9, 3, 1}, {6, 4, 3}}) {
      JohnsonGraph g = build_johnson_graph({n, k, t});
      Int expected = binomial(k, t) * binomial(n - k, k - t);
      CHECK(g.degree == expected);
      for (int v = 0; v < g.num_vertices; ++v) CHECK(g.vertex_degree(v) == expected);
    }
  }

  SUBCASE("cap and parameter errors") {
    CHECK_THROWS_AS(build_johnson_graph({13, 4, 1}, 100), std::invalid_argument);
    CHECK_THROWS_AS(build_johnson_graph({5, 2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(build_johnson_graph({5, 2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(build_johnson_graph({2, 3, 1}), std::invalid_argument);
  }
}

TEST_CASE("scheme axioms hold on small Johnson instances") {
  for (auto [n, k] : {std::pair{5, 2}, {7, 3}, {4, 2}, {6, 3}}) {
    SchemeAxiomReport report = verify_scheme_axioms(n, k);
    CAPTURE(n);
    CAPTURE(k);
    CHECK(report.partition_ok);
    CHECK(report.diagonal_ok);
    CHECK(report.symmetry_ok);
    CHECK(report.intersection_numbers_ok);
    CHECK(report.all_ok());
    CHECK(report.num_relations == std::min(k, n - k) + 1);
  }
}

TEST_CASE("J(4,2): the disjointness relation is a perfect matching") {
  SchemeAxiomReport report = verify_scheme_axioms(4, 2);
  REQUIRE(report.all_ok());
  // p^{R_0}_{R_2, R_2} = 1: every vertex has exactly one disjoint partner.
  CHECK(report.intersection_numbers[0][2][2] == 1);
}

TEST_CASE("scheme axiom cap") {
  CHECK_THROWS_AS(verify_scheme_axioms(13, 4), std::invalid_argument);
}
