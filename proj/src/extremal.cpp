#include "jspec/extremal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jspec {

namespace {

// Advances a sorted index combination (values in [0, limit)); false at the end.
bool next_combination(std::vector<int>& idx, int limit) {
  const int r = static_cast<int>(idx.size());
  int pos = r - 1;
  while (pos >= 0 && idx[pos] == limit - r + pos) --pos;
  if (pos < 0) return false;
  ++idx[pos];
  for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
  return true;
}

}  // namespace

std::string provenance_name(Provenance p) {
  switch (p) {
    case Provenance::canonical_pair: return "canonical-pair";
    case Provenance::sporadic_k3: return "sporadic-k3";
    case Provenance::solver: return "solver";
    case Provenance::user: return "user";
  }
  return "user";
}

Family::Family(int ambient, int subset_size, std::vector<KSubset> elems, Provenance origin)
    : n(ambient), k(subset_size), members(std::move(elems)), provenance(origin) {
  for (const KSubset& member : members)
    if (member.n != n || member.k() != k)
      throw std::invalid_argument("Family: member has mismatched (n, k)");
  std::sort(members.begin(), members.end(),
            [](const KSubset& a, const KSubset& b) { return a.elements < b.elements; });
  for (size_t i = 1; i < members.size(); ++i)
    if (members[i] == members[i - 1])
      throw std::invalid_argument("Family: duplicate member");
}

Family canonical_family(int n, int k, int a, int b) {
  if (k < 2 || k > n) throw std::invalid_argument("canonical_family: need 2 <= k <= n");
  if (a == b || a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("canonical_family: need distinct a, b in [0, n)");
  std::vector<int> rest;
  rest.reserve(n - 2);
  for (int e = 0; e < n; ++e)
    if (e != a && e != b) rest.push_back(e);

  std::vector<KSubset> members;
  std::vector<int> pick(k - 2);
  for (int i = 0; i < k - 2; ++i) pick[i] = i;
  do {
    std::vector<int> elems{a, b};
    for (int i : pick) elems.push_back(rest[i]);
    members.emplace_back(n, std::move(elems));
  } while (next_combination(pick, static_cast<int>(rest.size())));
  return Family(n, k, std::move(members), Provenance::canonical_pair);
}

Family sporadic_family_k3() {
  std::vector<KSubset> members{
      KSubset(7, {0, 1, 2}), KSubset(7, {0, 1, 3}), KSubset(7, {0, 2, 3}),
      KSubset(7, {1, 2, 3}), KSubset(7, {4, 5, 6}),
  };
  return Family(7, 3, std::move(members), Provenance::sporadic_k3);
}

IndependenceCheck is_independent(const Family& fam, int t) {
  IndependenceCheck result;
  for (size_t i = 0; i < fam.members.size(); ++i) {
    for (size_t j = i + 1; j < fam.members.size(); ++j) {
      if (intersection_size(fam.members[i], fam.members[j]) == t) {
        result.independent = false;
        result.violation = {fam.members[i], fam.members[j]};
        return result;
      }
    }
  }
  return result;
}

namespace {

// Max-clique search on the complement graph; a clique there is an independent
// set in the original. Candidates are bounded by a greedy clique cover of the
// original graph (a coloring of the complement), and every choice point is
// ordered by combinadic rank.
class ComplementCliqueSolver {
 public:
  ComplementCliqueSolver(const JohnsonGraph& g, long node_budget)
      : n_(g.num_vertices), budget_(node_budget) {
    comp_.assign(n_, Bitset(n_));
    for (int u = 0; u < n_; ++u)
      for (int v = 0; v < n_; ++v)
        if (u != v && !g.adjacent(u, v)) comp_[u].set(v);
  }

  void seed(const std::vector<int>& clique) {
    best_ = static_cast<int>(clique.size());
    best_clique_ = clique;
  }

  void run() {
    Bitset all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    std::vector<int> current;
    current.reserve(n_);
    expand(current, all);
  }

  int best() const { return best_; }
  const std::vector<int>& witness() const { return best_clique_; }
  long nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }

 private:
  void expand(std::vector<int>& current, Bitset candidates) {
    if (exhausted_) return;
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }

    // Greedy coloring of the complement restricted to the candidates; a
    // clique takes at most one vertex per color class.
    std::vector<int> order, colors;
    Bitset uncolored = candidates;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset pool = uncolored;
      while (pool.any()) {
        int v = pool.find_first();
        order.push_back(v);
        colors.push_back(color);
        pool.reset(v);
        uncolored.reset(v);
        pool.and_not(comp_[v]);
      }
    }

    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (exhausted_) return;
      if (static_cast<int>(current.size()) + colors[i] <= best_) return;
      int v = order[i];
      Bitset next = candidates;
      next &= comp_[v];
      current.push_back(v);
      if (static_cast<int>(current.size()) > best_) {
        best_ = static_cast<int>(current.size());
        best_clique_ = current;
      }
      if (next.any()) expand(current, next);
      current.pop_back();
      candidates.reset(v);
    }
  }

  int n_;
  long budget_;
  std::vector<Bitset> comp_;
  int best_ = 0;
  std::vector<int> best_clique_;
  long nodes_ = 0;
  bool exhausted_ = false;
};

Family family_from_ranks(const JohnsonGraph& g, const std::vector<int>& ranks,
                         Provenance origin) {
  std::vector<KSubset> members;
  members.reserve(ranks.size());
  for (int r : ranks) members.push_back(g.vertices[r]);
  return Family(g.params.n, g.params.k, std::move(members), origin);
}

}  // namespace

MisResult max_independent_set(const JohnsonParams& p, long node_budget, long vertex_cap) {
  p.validate();
  JohnsonGraph g = build_johnson_graph(p, vertex_cap);

  ComplementCliqueSolver solver(g, node_budget);

  // Incumbent from the pair construction whenever it is independent for this t.
  if (p.k >= 2) {
    Family seed = canonical_family(p.n, p.k, 0, 1);
    if (is_independent(seed, p.t).independent) {
      std::vector<int> ranks;
      ranks.reserve(seed.members.size());
      for (const KSubset& member : seed.members)
        ranks.push_back(static_cast<int>(subset_rank(member).get_si()));
      std::sort(ranks.begin(), ranks.end());
      solver.seed(ranks);
    }
  }

  solver.run();

  MisResult result;
  result.size = solver.best();
  result.witness = family_from_ranks(g, solver.witness(), Provenance::solver);
  result.nodes_explored = solver.nodes();
  result.budget_exhausted = solver.exhausted();
  result.optimal = !solver.exhausted();
  return result;
}

FamilyClass classify_family(const Family& fam) {
  if (fam.members.empty()) return FamilyClass::other;

  // Pair junta: at least two ground elements common to every member.
  std::vector<int> common = fam.members.front().elements;
  for (const KSubset& member : fam.members) {
    std::vector<int> next;
    std::set_intersection(common.begin(), common.end(), member.elements.begin(),
                          member.elements.end(), std::back_inserter(next));
    common = std::move(next);
  }
  if (common.size() >= 2) return FamilyClass::pair_junta;

  // Sporadic pattern: all k+1 subsets of some (k+1)-set plus members disjoint
  // from it.
  const int k = fam.k;
  for (size_t i = 0; i < fam.members.size(); ++i) {
    for (size_t j = i + 1; j < fam.members.size(); ++j) {
      std::vector<int> s_union;
      std::set_union(fam.members[i].elements.begin(), fam.members[i].elements.end(),
                     fam.members[j].elements.begin(), fam.members[j].elements.end(),
                     std::back_inserter(s_union));
      if (static_cast<int>(s_union.size()) != k + 1) continue;
      int inside = 0;
      int disjoint = 0;
      for (const KSubset& member : fam.members) {
        std::vector<int> meet;
        std::set_intersection(s_union.begin(), s_union.end(), member.elements.begin(),
                              member.elements.end(), std::back_inserter(meet));
        if (static_cast<int>(meet.size()) == k)
          ++inside;
        else if (meet.empty())
          ++disjoint;
      }
      if (inside == k + 1 && disjoint >= 1 &&
          inside + disjoint == static_cast<int>(fam.members.size()))
        return FamilyClass::sporadic_type;
    }
  }
  return FamilyClass::other;
}

std::string family_class_name(FamilyClass c) {
  switch (c) {
    case FamilyClass::pair_junta: return "pair-junta";
    case FamilyClass::sporadic_type: return "sporadic-type";
    case FamilyClass::other: return "other";
  }
  return "other";
}

namespace {

void enumerate_rec(const JohnsonGraph& g, int target, std::vector<int>& chosen,
                   const Bitset& candidates, int from, FamilyCensus& census) {
  if (static_cast<int>(chosen.size()) == target) {
    Family fam = family_from_ranks(g, chosen, Provenance::user);
    FamilyClass cls = classify_family(fam);
    census.families.push_back(std::move(fam));
    census.classes.push_back(cls);
    switch (cls) {
      case FamilyClass::pair_junta: ++census.pair_junta_count; break;
      case FamilyClass::sporadic_type: ++census.sporadic_count; break;
      case FamilyClass::other: ++census.other_count; break;
    }
    return;
  }
  const int need = target - static_cast<int>(chosen.size());
  if (candidates.count() < need) return;
  for (int v = from; v < g.num_vertices; ++v) {
    if (!candidates.test(v)) continue;
    Bitset next = candidates;
    next.and_not(g.adj[v]);
    for (int u = 0; u <= v; ++u) next.reset(u);
    chosen.push_back(v);
    enumerate_rec(g, target, chosen, next, v + 1, census);
    chosen.pop_back();
  }
}

}  // namespace

FamilyCensus enumerate_maximum_independent_sets(const JohnsonParams& p, int target_size,
                                                long vertex_cap) {
  p.validate();
  if (target_size < 1) throw std::invalid_argument("enumerate: target size must be positive");
  JohnsonGraph g = build_johnson_graph(p, vertex_cap);

  FamilyCensus census;
  census.params = p;
  census.target_size = target_size;

  Bitset all(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) all.set(v);
  std::vector<int> chosen;
  chosen.reserve(target_size);
  enumerate_rec(g, target_size, chosen, all, 0, census);
  return census;
}

}  // namespace jspec
