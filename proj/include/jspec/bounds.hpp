#pragma once

#include <optional>

#include "jspec/bose_mesner.hpp"
#include "jspec/rational.hpp"

namespace jspec {

// Ratio bound alpha(G) <= N * (-lambda_min) / (d - lambda_min) for a d-regular
// pseudo-adjacency matrix with minimum eigenvalue lambda_min.
struct HoffmanReport {
  Int num_vertices;  // N
  Rat degree;        // d = lambda_0, verified to be the largest eigenvalue
  Rat lambda_min;
  Rat bound;
  Int bound_floor;
};

// Requires a zero diagonal, non-negative entries, and at least one positive
// off-diagonal profile value. Throws std::invalid_argument on violations and
// std::domain_error when lambda_min >= 0 (edgeless degenerate case).
HoffmanReport hoffman_bound(const ProfileMatrixSpec& spec);

// Full verification that alpha(J(n, k, 1)) = C(n-2, k-2) at n = k^2 - k + 1:
// the closed-form eigenvalues, the location of the minimum, the tail envelope,
// the ratio identity, and the matching construction size.
struct TheoremReport {
  int k = 0;
  long n = 0;  // k^2 - k + 1
  Rat lambda0;
  Rat lambda1;
  std::optional<Rat> lambda2;  // absent for k = 2 (the scheme has fewer classes)
  std::optional<Rat> lambda3;
  bool closed_forms_ok = false;   // lambda_0..3 match their closed forms
  bool tail_ok = false;           // min over j >= 1 is attained at j in {1, 2}
  bool tail_envelope_ok = false;  // |lambda_j| <= k C(n-k, k-3) for 4 <= j <= k
  Rat hoffman_ratio;              // -lambda_min / (d - lambda_min)
  Rat hoffman_value;
  Int target;  // C(n-2, k-2)
  Int construction_size;
  bool verdict = false;
};

TheoremReport verify_theorem(int k);

// Vertex-transitivity bound: alpha <= N / clique_size.
Rat transitivity_bound(const Int& clique_size, const Int& num_vertices);

}  // namespace jspec
