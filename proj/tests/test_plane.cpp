#include <doctest.h>

#include <set>
#include <stdexcept>

#include "jspec/bounds.hpp"
#include "jspec/plane.hpp"

using namespace jspec;

TEST_CASE("prime power recognition") {
  CHECK(prime_power(2) == std::pair{2, 1});
  CHECK(prime_power(9) == std::pair{3, 2});
  CHECK(prime_power(16) == std::pair{2, 4});
  CHECK(prime_power(125) == std::pair{5, 3});
  CHECK(!prime_power(6).has_value());
  CHECK(!prime_power(12).has_value());
  CHECK(!prime_power(1).has_value());
}

TEST_CASE("GF(2) is xor and and") {
  FiniteField f = make_field(2);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(f.add(a, b) == (a ^ b));
      CHECK(f.mul(a, b) == (a & b));
    }
}

TEST_CASE("GF(4) uses the first irreducible quadratic") {
  FiniteField f = make_field(4);
  CHECK(f.modulus == std::vector<int>{1, 1, 1});  // x^2 + x + 1
  // The generator a (encoded 2) satisfies a^2 = a + 1.
  CHECK(f.mul(2, 2) == f.add(2, 1));
  CHECK(f.mul(2, 3) == 1);  // a * (a+1) = a^2 + a = 1
}

TEST_CASE("GF(8) modulus") {
  FiniteField f = make_field(8);
  CHECK(f.modulus == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1
}

TEST_CASE("non prime powers are rejected") {
  CHECK_THROWS_AS(make_field(6), std::invalid_argument);
  CHECK_THROWS_AS(make_field(10), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(512), std::invalid_argument);
}

TEST_CASE("field tables validate across orders") {
  // make_field runs the axiom checks internally (exhaustive for q <= 16,
  // sampled above) and throws on any violation.
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 128, 243, 256}) {
    CAPTURE(q);
    FiniteField f = make_field(q);
    CHECK(f.q == q);
    // Every nonzero element has an inverse in the table.
    for (int a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("plane construction counts") {
  ProjectivePlane fano = build_plane(2);
  CHECK(fano.num_points == 7);
  CHECK(fano.lines.size() == 7);
  for (const auto& line : fano.lines) CHECK(line.size() == 3);

  ProjectivePlane p3 = build_plane(3);
  CHECK(p3.num_points == 13);
  CHECK(p3.lines.size() == 13);
  for (const auto& line : p3.lines) CHECK(line.size() == 4);

  ProjectivePlane p4 = build_plane(4);
  CHECK(p4.num_points == 21);
  CHECK(p4.lines.size() == 21);
  for (const auto& line : p4.lines) CHECK(line.size() == 5);
}

TEST_CASE("plane axioms hold exhaustively for small orders") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    PlaneAxiomReport report = verify_plane_axioms(build_plane(q));
    CHECK(report.lines_meet_once);
    CHECK(report.points_joined_once);
    CHECK(report.point_degree_ok);
  }
}

TEST_CASE("plane lines form cliques in the Johnson graph") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    PlaneClique clique = plane_clique(q);
    CHECK(clique.certified);
    CHECK(clique.lines.size() == q * q + q + 1);
    CHECK(clique.lines.n == q * q + q + 1);
    CHECK(clique.lines.k == q + 1);
  }
}

TEST_CASE("clique bound coincides with the ratio bound") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CAPTURE(q);
    const int k = q + 1;
    const long n = static_cast<long>(k) * k - k + 1;
    CHECK(n == static_cast<long>(q) * q + q + 1);
    Rat via_clique = transitivity_bound(n, binomial(n, k));
    TheoremReport theorem = verify_theorem(k);
    CHECK(via_clique == theorem.hoffman_value);
    CHECK(via_clique == Rat(binomial(n - 2, k - 2)));
  }
}

TEST_CASE("Fano lines as a 7-clique in J(7,3,1)") {
  PlaneClique clique = plane_clique(2);
  REQUIRE(clique.lines.size() == 7);
  for (size_t i = 0; i < clique.lines.members.size(); ++i)
    for (size_t j = i + 1; j < clique.lines.members.size(); ++j)
      CHECK(intersection_size(clique.lines.members[i], clique.lines.members[j]) == 1);
}

TEST_CASE("Bruck-Ryser fixtures") {
  BruckRyserResult six = bruck_ryser_excludes(6);
  CHECK(six.excluded);
  CHECK(!six.two_squares.has_value());

  BruckRyserResult ten = bruck_ryser_excludes(10);
  CHECK(!ten.excluded);  // 10 = 1 + 9; order 10 is settled elsewhere
  REQUIRE(ten.two_squares.has_value());
  CHECK(ten.two_squares->first * ten.two_squares->first +
            ten.two_squares->second * ten.two_squares->second ==
        10);

  BruckRyserResult four = bruck_ryser_excludes(4);
  CHECK(!four.excluded);  // 0 mod 4: the criterion is silent

  CHECK_THROWS_AS(bruck_ryser_excludes(1), std::invalid_argument);
}

TEST_CASE("Bruck-Ryser agrees with a sum-of-two-squares sieve on 2..30") {
  // Sieve all values a^2 + b^2 <= 30 independently.
  std::set<int> sums;
  for (int a = 0; a * a <= 30; ++a)
    for (int b = a; a * a + b * b <= 30; ++b) sums.insert(a * a + b * b);

  std::set<int> excluded;
  for (int order = 2; order <= 30; ++order) {
    bool expect = (order % 4 == 1 || order % 4 == 2) && !sums.count(order);
    BruckRyserResult result = bruck_ryser_excludes(order);
    CAPTURE(order);
    CHECK(result.excluded == expect);
    if (result.excluded) excluded.insert(order);
  }
  CHECK(excluded == std::set<int>{6, 14, 21, 22, 30});
}
