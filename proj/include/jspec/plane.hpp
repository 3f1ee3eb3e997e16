#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jspec/extremal.hpp"

namespace jspec {

// GF(p^m) realized through lookup tables; elements are integers in [0, q)
// encoding polynomial coefficients over GF(p) in base p, lowest degree first.
struct FiniteField {
  int p = 0;
  int m = 1;
  int q = 0;
  std::vector<int> modulus;  // monic, degree m, coefficients c_0..c_m over GF(p)

  int add(int a, int b) const { return add_table[size_t(a) * q + b]; }
  int mul(int a, int b) const { return mul_table[size_t(a) * q + b]; }
  int neg(int a) const { return neg_table[a]; }
  int inv(int a) const;  // throws on a == 0

  std::vector<int> add_table;  // q*q
  std::vector<int> mul_table;  // q*q
  std::vector<int> neg_table;  // q
  std::vector<int> inv_table;  // q, inv_table[0] = -1
};

// Returns (p, m) with q = p^m, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(int q);

// Builds GF(q) for a prime power q <= 256. For m > 1 the modulus is the first
// monic irreducible of degree m over GF(p) in the base-p encoding order of its
// non-leading coefficients. The tables are validated against the field axioms
// (exhaustively for q <= 16, on sampled triples above).
FiniteField make_field(int q);

// The plane PG(2, q): points are the normalized nonzero coordinate triples,
// lines are the zero sets of normalized linear forms, both with first nonzero
// coordinate 1 and identified by their position in that enumeration.
struct ProjectivePlane {
  int q = 0;
  int num_points = 0;                   // q^2 + q + 1
  std::vector<std::array<int, 3>> points;
  std::vector<std::vector<int>> lines;  // sorted point ids, each of size q+1
};

ProjectivePlane build_plane(int q);

// Exhaustive incidence axioms check: two lines meet in one point, two points
// lie on one line, every point lies on q+1 lines.
struct PlaneAxiomReport {
  bool lines_meet_once = false;
  bool points_joined_once = false;
  bool point_degree_ok = false;

  bool all_ok() const { return lines_meet_once && points_joined_once && point_degree_ok; }
};

PlaneAxiomReport verify_plane_axioms(const ProjectivePlane& plane);

// The lines of PG(2, q) as (q+1)-subsets of the point set: a clique in
// J(q^2+q+1, q+1, 1). The certificate records the exhaustive pairwise check.
struct PlaneClique {
  Family lines;
  bool certified = false;  // every pair of lines intersects in exactly one point
};

PlaneClique plane_clique(int q);

// Arithmetic exclusion of plane orders: excluded iff order is 1 or 2 mod 4
// and not a sum of two integer squares.
struct BruckRyserResult {
  int order = 0;
  bool excluded = false;
  std::optional<std::pair<int, int>> two_squares;  // witness when representable
  std::string reason;
};

BruckRyserResult bruck_ryser_excludes(int order);

}  // namespace jspec
