#include "jspec/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jspec {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Int result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

KSubset::KSubset(int ambient, std::vector<int> elems)
    : n(ambient), elements(std::move(elems)) {
  std::sort(elements.begin(), elements.end());
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 0 || elements[i] >= n)
      throw std::invalid_argument("KSubset: element out of range");
    if (i > 0 && elements[i] == elements[i - 1])
      throw std::invalid_argument("KSubset: duplicate element");
  }
}

bool KSubset::contains(int e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

Int subset_rank(const KSubset& s) {
  Int r = 0;
  for (int i = 0; i < s.k(); ++i) r += binomial(s.elements[i], i + 1);
  return r;
}

KSubset subset_unrank(const Int& r, int n, int k) {
  if (n <= 0 || k < 0 || k > n) throw std::invalid_argument("subset_unrank: bad (n, k)");
  if (r < 0 || r >= binomial(n, k)) throw std::invalid_argument("subset_unrank: rank out of range");
  std::vector<int> elems(k);
  Int rest = r;
  // Take the largest c with C(c, i) <= rest, from the top position down.
  int c = n - 1;
  for (int i = k; i >= 1; --i) {
    while (binomial(c, i) > rest) --c;
    elems[i - 1] = c;
    rest -= binomial(c, i);
  }
  return KSubset(n, std::move(elems));
}

int intersection_size(const KSubset& x, const KSubset& y) {
  if (x.n != y.n || x.k() != y.k())
    throw std::invalid_argument("intersection_size: mismatched subset parameters");
  int count = 0;
  size_t i = 0, j = 0;
  while (i < x.elements.size() && j < y.elements.size()) {
    if (x.elements[i] < y.elements[j]) {
      ++i;
    } else if (x.elements[i] > y.elements[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

void JohnsonParams::validate() const {
  if (n <= 0 || k <= 0 || k > n) throw std::invalid_argument("JohnsonParams: need 0 < k <= n");
  if (t < 0 || t >= k) throw std::invalid_argument("JohnsonParams: need 0 <= t < k");
}

JohnsonGraph build_johnson_graph(const JohnsonParams& p, long vertex_cap) {
  p.validate();
  Int count = binomial(p.n, p.k);
  if (count > vertex_cap) {
    std::ostringstream msg;
    msg << "build_johnson_graph: C(" << p.n << "," << p.k << ") = " << count
        << " exceeds cap " << vertex_cap;
    throw std::invalid_argument(msg.str());
  }
  JohnsonGraph g;
  g.params = p;
  g.num_vertices = static_cast<int>(count.get_si());
  g.degree = binomial(p.k, p.t) * binomial(p.n - p.k, p.k - p.t);
  g.vertices.reserve(g.num_vertices);
  for (int r = 0; r < g.num_vertices; ++r)
    g.vertices.push_back(subset_unrank(r, p.n, p.k));
  g.adj.assign(g.num_vertices, Bitset(g.num_vertices));
  for (int u = 0; u < g.num_vertices; ++u) {
    for (int v = u + 1; v < g.num_vertices; ++v) {
      if (intersection_size(g.vertices[u], g.vertices[v]) == p.t) {
        g.adj[u].set(v);
        g.adj[v].set(u);
      }
    }
  }
  return g;
}

SchemeAxiomReport verify_scheme_axioms(int n, int k, long vertex_cap) {
  if (n <= 0 || k <= 0 || k > n) throw std::invalid_argument("verify_scheme_axioms: bad (n, k)");
  Int count = binomial(n, k);
  if (count > vertex_cap) {
    std::ostringstream msg;
    msg << "verify_scheme_axioms: C(" << n << "," << k << ") = " << count
        << " exceeds cap " << vertex_cap;
    throw std::invalid_argument(msg.str());
  }

  SchemeAxiomReport report;
  report.n = n;
  report.k = k;
  const int N = static_cast<int>(count.get_si());
  report.num_vertices = N;
  const int m = std::min(k, n - k);  // relations R_0..R_m, all non-empty
  report.num_relations = m + 1;

  std::vector<KSubset> vertices;
  vertices.reserve(N);
  for (int r = 0; r < N; ++r) vertices.push_back(subset_unrank(r, n, k));

  // rel(u, v) = k - |u ∩ v|
  std::vector<std::vector<int>> rel(N, std::vector<int>(N));
  std::vector<long> rel_sizes(m + 1, 0);
  bool in_range = true;
  for (int u = 0; u < N; ++u) {
    for (int v = 0; v < N; ++v) {
      int i = k - intersection_size(vertices[u], vertices[v]);
      rel[u][v] = i;
      if (i < 0 || i > m) in_range = false;
      if (i >= 0 && i <= m) ++rel_sizes[i];
    }
  }

  // Axiom 1: the relations partition V^2 into non-empty classes. Every pair
  // lands in exactly one class by construction; what remains to check is that
  // indices stay in range, every class is hit, and the sizes add up to N^2.
  long total = 0;
  bool all_nonempty = true;
  for (long s : rel_sizes) {
    total += s;
    if (s == 0) all_nonempty = false;
  }
  report.partition_ok = in_range && all_nonempty && total == long(N) * N;

  // Axiom 2: R_0 is the diagonal.
  report.diagonal_ok = true;
  for (int u = 0; u < N && report.diagonal_ok; ++u)
    for (int v = 0; v < N; ++v)
      if ((rel[u][v] == 0) != (u == v)) {
        report.diagonal_ok = false;
        break;
      }

  // Axiom 3: each relation is symmetric.
  report.symmetry_ok = true;
  for (int u = 0; u < N && report.symmetry_ok; ++u)
    for (int v = u + 1; v < N; ++v)
      if (rel[u][v] != rel[v][u]) {
        report.symmetry_ok = false;
        break;
      }

  // Axiom 4: |{v : (u,v) in R, (v,w) in S}| depends only on the relation T
  // containing (u, w). Computed for every pair, then compared within each T.
  report.intersection_numbers_ok = true;
  report.intersection_numbers.assign(
      m + 1, std::vector<std::vector<long>>(m + 1, std::vector<long>(m + 1, -1)));
  std::vector<long> counts((m + 1) * (m + 1));
  for (int u = 0; u < N; ++u) {
    for (int w = 0; w < N; ++w) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int v = 0; v < N; ++v) ++counts[rel[u][v] * (m + 1) + rel[v][w]];
      int T = rel[u][w];
      for (int R = 0; R <= m; ++R) {
        for (int S = 0; S <= m; ++S) {
          long& stored = report.intersection_numbers[T][R][S];
          long seen = counts[R * (m + 1) + S];
          if (stored == -1) {
            stored = seen;
          } else if (stored != seen) {
            report.intersection_numbers_ok = false;
          }
        }
      }
    }
  }

  return report;
}

}  // namespace jspec
