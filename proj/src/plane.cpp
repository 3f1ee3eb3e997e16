#include "jspec/plane.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace jspec {

namespace {

// Polynomials over GF(p) as coefficient vectors, lowest degree first, no
// trailing zeros.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

Poly poly_mod(Poly a, const Poly& divisor, int p) {
  trim(a);
  const int dd = static_cast<int>(divisor.size()) - 1;
  // Divisor is monic, so each step just scales by the leading coefficient.
  while (static_cast<int>(a.size()) - 1 >= dd) {
    int shift = static_cast<int>(a.size()) - 1 - dd;
    int lead = a.back();
    for (int i = 0; i <= dd; ++i) {
      int& coef = a[shift + i];
      coef = ((coef - lead * divisor[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool poly_is_zero(const Poly& a) { return a.empty(); }

// Encodes a polynomial of degree < m as an integer in base p.
int poly_encode(const Poly& a, int p) {
  int v = 0;
  for (size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return v;
}

Poly poly_decode(int v, int p) {
  Poly a;
  while (v > 0) {
    a.push_back(v % p);
    v /= p;
  }
  return a;
}

bool is_irreducible(const Poly& candidate, int p) {
  const int deg = static_cast<int>(candidate.size()) - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int c = 0; c < count; ++c) {
      Poly divisor = poly_decode(c, p);
      divisor.resize(d + 1, 0);
      divisor[d] = 1;
      if (poly_is_zero(poly_mod(candidate, divisor, p))) return false;
    }
  }
  return true;
}

void validate_field_tables(const FiniteField& f) {
  const int q = f.q;
  auto fail = [&](const char* what) {
    std::ostringstream msg;
    msg << "make_field: axiom check failed for q=" << q << ": " << what;
    throw std::logic_error(msg.str());
  };

  for (int a = 0; a < q; ++a) {
    if (f.add(a, 0) != a) fail("additive identity");
    if (f.mul(a, 1) != a) fail("multiplicative identity");
    if (f.add(a, f.neg(a)) != 0) fail("additive inverse");
    if (a != 0 && f.mul(a, f.inv(a)) != 1) fail("multiplicative inverse");
  }

  auto check_triple = [&](int a, int b, int c) {
    if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) fail("additive associativity");
    if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) fail("multiplicative associativity");
    if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) fail("distributivity");
    if (f.add(a, b) != f.add(b, a)) fail("additive commutativity");
    if (f.mul(a, b) != f.mul(b, a)) fail("multiplicative commutativity");
  };

  if (q <= 16) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) check_triple(a, b, c);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int trial = 0; trial < 10000; ++trial)
      check_triple(pick(rng), pick(rng), pick(rng));
  }
}

}  // namespace

std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return std::make_pair(q, 1);  // q itself is prime
  int m = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, m);
}

int FiniteField::inv(int a) const {
  if (a == 0) throw std::domain_error("FiniteField::inv: zero has no inverse");
  return inv_table[a];
}

FiniteField make_field(int q) {
  auto pm = prime_power(q);
  if (!pm) {
    std::ostringstream msg;
    msg << "make_field: " << q << " is not a prime power";
    throw std::invalid_argument(msg.str());
  }
  if (q > 256) throw std::invalid_argument("make_field: q > 256 unsupported");

  FiniteField f;
  f.p = pm->first;
  f.m = pm->second;
  f.q = q;

  if (f.m == 1) {
    f.modulus = {0, 1};  // x
  } else {
    // First monic irreducible of degree m, ordering the non-leading
    // coefficients by their base-p encoding.
    int count = 1;
    for (int i = 0; i < f.m; ++i) count *= f.p;
    bool found = false;
    for (int c = 0; c < count && !found; ++c) {
      Poly candidate = poly_decode(c, f.p);
      candidate.resize(f.m + 1, 0);
      candidate[f.m] = 1;
      if (is_irreducible(candidate, f.p)) {
        f.modulus = candidate;
        found = true;
      }
    }
    if (!found) throw std::logic_error("make_field: no irreducible polynomial found");
  }

  f.add_table.resize(size_t(q) * q);
  f.mul_table.resize(size_t(q) * q);
  f.neg_table.resize(q);
  f.inv_table.assign(q, -1);

  for (int a = 0; a < q; ++a) {
    Poly pa = poly_decode(a, f.p);
    for (int b = 0; b < q; ++b) {
      Poly pb = poly_decode(b, f.p);
      // addition: digitwise mod p
      Poly sum(std::max(pa.size(), pb.size()), 0);
      for (size_t i = 0; i < sum.size(); ++i) {
        int va = i < pa.size() ? pa[i] : 0;
        int vb = i < pb.size() ? pb[i] : 0;
        sum[i] = (va + vb) % f.p;
      }
      trim(sum);
      f.add_table[size_t(a) * q + b] = poly_encode(sum, f.p);
      Poly prod = poly_mod(poly_mul(pa, pb, f.p), f.modulus, f.p);
      f.mul_table[size_t(a) * q + b] = poly_encode(prod, f.p);
    }
  }
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (f.add(a, b) == 0) f.neg_table[a] = b;
      if (a != 0 && f.mul(a, b) == 1) f.inv_table[a] = b;
    }
  }

  validate_field_tables(f);
  return f;
}

namespace {

long plane_order_size(int q) { return static_cast<long>(q) * q + q + 1; }

}  // namespace

ProjectivePlane build_plane(int q) {
  FiniteField f = make_field(q);
  const long size = plane_order_size(q);

  ProjectivePlane plane;
  plane.q = q;

  // Normalized representatives: first nonzero coordinate equal to 1,
  // enumerated in lexicographic coordinate order.
  std::vector<int> id_of(size_t(q) * q * q, -1);
  auto key = [&](int x, int y, int z) { return (size_t(x) * q + y) * q + z; };
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      for (int z = 0; z < q; ++z) {
        bool normalized = (x == 1) || (x == 0 && y == 1) || (x == 0 && y == 0 && z == 1);
        if (!normalized) continue;
        id_of[key(x, y, z)] = plane.num_points;
        plane.points.push_back({x, y, z});
        ++plane.num_points;
      }
  if (plane.num_points != size) throw std::logic_error("build_plane: wrong point count");

  // Lines are kernels of normalized linear forms a*x + b*y + c*z = 0.
  for (const auto& form : plane.points) {
    std::vector<int> line;
    for (int id = 0; id < plane.num_points; ++id) {
      const auto& pt = plane.points[id];
      int value = f.add(f.add(f.mul(form[0], pt[0]), f.mul(form[1], pt[1])),
                        f.mul(form[2], pt[2]));
      if (value == 0) line.push_back(id);
    }
    if (static_cast<int>(line.size()) != q + 1)
      throw std::logic_error("build_plane: line of wrong size");
    plane.lines.push_back(std::move(line));
  }
  if (static_cast<long>(plane.lines.size()) != size)
    throw std::logic_error("build_plane: wrong line count");

  // Cheap incidence counts always; the quadratic axiom checks run here for
  // small orders and on demand through verify_plane_axioms.
  std::vector<int> degree(plane.num_points, 0);
  for (const auto& line : plane.lines)
    for (int id : line) ++degree[id];
  for (int d : degree)
    if (d != q + 1) throw std::logic_error("build_plane: point degree != q+1");
  if (q <= 16 && !verify_plane_axioms(plane).all_ok())
    throw std::logic_error("build_plane: incidence axioms failed");

  return plane;
}

PlaneAxiomReport verify_plane_axioms(const ProjectivePlane& plane) {
  PlaneAxiomReport report;
  const int P = plane.num_points;
  const int L = static_cast<int>(plane.lines.size());

  report.lines_meet_once = true;
  for (int i = 0; i < L && report.lines_meet_once; ++i)
    for (int j = i + 1; j < L; ++j) {
      std::vector<int> meet;
      std::set_intersection(plane.lines[i].begin(), plane.lines[i].end(),
                            plane.lines[j].begin(), plane.lines[j].end(),
                            std::back_inserter(meet));
      if (meet.size() != 1) {
        report.lines_meet_once = false;
        break;
      }
    }

  // Count line coverage of every point pair.
  std::vector<int> pair_cover(size_t(P) * P, 0);
  for (const auto& line : plane.lines)
    for (size_t i = 0; i < line.size(); ++i)
      for (size_t j = i + 1; j < line.size(); ++j) ++pair_cover[size_t(line[i]) * P + line[j]];
  report.points_joined_once = true;
  for (int i = 0; i < P && report.points_joined_once; ++i)
    for (int j = i + 1; j < P; ++j)
      if (pair_cover[size_t(i) * P + j] != 1) {
        report.points_joined_once = false;
        break;
      }

  report.point_degree_ok = true;
  std::vector<int> degree(P, 0);
  for (const auto& line : plane.lines)
    for (int id : line) ++degree[id];
  for (int d : degree)
    if (d != plane.q + 1) report.point_degree_ok = false;

  return report;
}

PlaneClique plane_clique(int q) {
  ProjectivePlane plane = build_plane(q);
  const int n = plane.num_points;
  const int k = q + 1;

  std::vector<KSubset> members;
  members.reserve(plane.lines.size());
  for (const auto& line : plane.lines) members.emplace_back(n, line);

  PlaneClique result;
  result.lines = Family(n, k, std::move(members), Provenance::user);
  result.certified = true;
  for (size_t i = 0; i < result.lines.members.size() && result.certified; ++i)
    for (size_t j = i + 1; j < result.lines.members.size(); ++j)
      if (intersection_size(result.lines.members[i], result.lines.members[j]) != 1) {
        result.certified = false;
        break;
      }
  return result;
}

BruckRyserResult bruck_ryser_excludes(int order) {
  if (order < 2) throw std::invalid_argument("bruck_ryser_excludes: order must be >= 2");
  BruckRyserResult result;
  result.order = order;
  const int residue = order % 4;
  if (residue != 1 && residue != 2) {
    result.excluded = false;
    std::ostringstream msg;
    msg << "order = " << residue << " (mod 4): criterion does not apply";
    result.reason = msg.str();
    return result;
  }
  for (int a = 0; a * a <= order; ++a) {
    int rest = order - a * a;
    int b = static_cast<int>(std::lround(std::sqrt(double(rest))));
    while (b * b > rest) --b;
    while ((b + 1) * (b + 1) <= rest) ++b;
    if (b * b == rest) {
      result.excluded = false;
      result.two_squares = {a, b};
      std::ostringstream msg;
      msg << "order = " << a << "^2 + " << b << "^2";
      result.reason = msg.str();
      return result;
    }
  }
  result.excluded = true;
  std::ostringstream msg;
  msg << "order = " << residue << " (mod 4) and not a sum of two squares";
  result.reason = msg.str();
  return result;
}

}  // namespace jspec
