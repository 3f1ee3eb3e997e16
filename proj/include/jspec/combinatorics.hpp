#pragma once

#include <vector>

#include "jspec/bitset.hpp"
#include "jspec/rational.hpp"

namespace jspec {

// C(n, k), exact. Out-of-range k (k < 0 or k > n) yields 0 so that sums over
// formal binomial expressions evaluate correctly; negative n is a hard error.
Int binomial(long n, long k);

// A sorted k-element subset of {0, ..., n-1}.
struct KSubset {
  int n = 0;
  std::vector<int> elements;

  KSubset() = default;
  KSubset(int ambient, std::vector<int> elems);

  int k() const { return static_cast<int>(elements.size()); }
  bool contains(int e) const;

  bool operator==(const KSubset&) const = default;
};

// Colexicographic combinadic rank: the position of s among all k-subsets of
// its ambient set, rank(s) = sum_i C(s.elements[i], i+1).
Int subset_rank(const KSubset& s);

// Inverse of subset_rank; requires 0 <= r < C(n, k).
KSubset subset_unrank(const Int& r, int n, int k);

// |x ∩ y|; both subsets must share the same n and k.
int intersection_size(const KSubset& x, const KSubset& y);

// Parameters of the graph J(n, k, t): vertices are k-subsets of an n-set,
// edges join pairs intersecting in exactly t elements.
struct JohnsonParams {
  int n = 0;
  int k = 0;
  int t = 0;

  void validate() const;  // throws std::invalid_argument
};

struct JohnsonGraph {
  JohnsonParams params;
  int num_vertices = 0;
  Int degree;                     // C(k,t) * C(n-k, k-t)
  std::vector<KSubset> vertices;  // indexed by combinadic rank
  std::vector<Bitset> adj;

  bool adjacent(int u, int v) const { return adj[u].test(v); }
  int vertex_degree(int v) const { return adj[v].count(); }
};

// Builds J(n, k, t) with vertex ids equal to combinadic ranks.
JohnsonGraph build_johnson_graph(const JohnsonParams& p, long vertex_cap = 5000);

// Enumeration-based check of the four association scheme axioms on the
// relations R_i = {(x, y) : |x ∩ y| = k - i}, i = 0..min(k, n-k).
struct SchemeAxiomReport {
  int n = 0;
  int k = 0;
  int num_vertices = 0;
  int num_relations = 0;
  bool partition_ok = false;
  bool diagonal_ok = false;
  bool symmetry_ok = false;
  bool intersection_numbers_ok = false;
  // intersection_numbers[T][R][S] = |{v : (u,v) in R_R, (v,w) in R_S}| for any
  // (u,w) in R_T; only meaningful when intersection_numbers_ok.
  std::vector<std::vector<std::vector<long>>> intersection_numbers;

  bool all_ok() const {
    return partition_ok && diagonal_ok && symmetry_ok && intersection_numbers_ok;
  }
};

SchemeAxiomReport verify_scheme_axioms(int n, int k, long vertex_cap = 300);

}  // namespace jspec
