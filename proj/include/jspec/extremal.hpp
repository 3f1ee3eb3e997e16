#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jspec/combinatorics.hpp"

namespace jspec {

enum class Provenance { canonical_pair, sporadic_k3, solver, user };

std::string provenance_name(Provenance p);

// A set of k-subsets with a common ambient set; members are kept in
// lexicographic element order and must be pairwise distinct.
struct Family {
  int n = 0;
  int k = 0;
  std::vector<KSubset> members;
  Provenance provenance = Provenance::user;

  Family() = default;
  Family(int ambient, int subset_size, std::vector<KSubset> elems,
         Provenance origin = Provenance::user);

  int size() const { return static_cast<int>(members.size()); }
};

// All C(n-2, k-2) k-subsets containing both a and b. Any two members share at
// least two elements, so the family is independent in J(n, k, 1).
Family canonical_family(int n, int k, int a, int b);

// The second maximum independent set of J(7, 3, 1): the four 3-subsets of a
// 4-set together with the complementary 3-set.
Family sporadic_family_k3();

struct IndependenceCheck {
  bool independent = true;
  std::optional<std::pair<KSubset, KSubset>> violation;
};

// True iff no pair of distinct members intersects in exactly t elements.
IndependenceCheck is_independent(const Family& fam, int t);

struct MisResult {
  int size = 0;
  Family witness;
  bool optimal = false;
  long nodes_explored = 0;
  bool budget_exhausted = false;
};

// Exact maximum independent set by branch and bound: clique search on the
// complement graph with a greedy clique-cover bound (coloring of the
// complement restricted to the candidates), incumbent seeded with the
// canonical pair family when that family is independent. Deterministic.
MisResult max_independent_set(const JohnsonParams& p, long node_budget = 20000000,
                              long vertex_cap = 5000);

enum class FamilyClass { pair_junta, sporadic_type, other };

std::string family_class_name(FamilyClass c);

FamilyClass classify_family(const Family& fam);

struct FamilyCensus {
  JohnsonParams params;
  int target_size = 0;
  std::vector<Family> families;           // all independent sets of the target size
  std::vector<FamilyClass> classes;       // parallel to families
  long pair_junta_count = 0;
  long sporadic_count = 0;
  long other_count = 0;
};

// Exhaustive enumeration of independent sets of exactly target_size, with a
// census by structural type.
FamilyCensus enumerate_maximum_independent_sets(const JohnsonParams& p, int target_size,
                                                long vertex_cap = 100);

}  // namespace jspec
