#pragma once

#include <string>
#include <vector>

#include "jspec/combinatorics.hpp"
#include "jspec/dense_matrix.hpp"
#include "jspec/rational.hpp"

namespace jspec {

// A matrix on the k-subsets of [n] whose (x, y) entry depends only on the
// intersection size: A(x, y) = f[|x ∩ y|].
struct ProfileMatrixSpec {
  int n = 0;
  int k = 0;
  std::vector<Rat> f;  // size k+1, f[s] is the entry at intersection size s

  void validate() const;  // throws std::invalid_argument
};

// f = delta_t: the 0/1 adjacency profile of J(n, k, t).
ProfileMatrixSpec forbidden_profile(int n, int k, int t);

// Coefficients of A in the standard basis B_i(x, y) = C(|x \ y|, i), so that
// f[k-d] = sum_i b[i] * C(d, i) for d = 0..k.
struct BasisCoefficients {
  std::vector<Rat> b;  // size k+1, indexed by basis matrix
};

// Binomial inversion b_i = sum_d (-1)^(i-d) C(i, d) f[k-d].
BasisCoefficients decompose(const ProfileMatrixSpec& spec);

// Evaluates f[k-d] = sum_i b_i C(d, i) for d = 0..k; inverse of decompose.
std::vector<Rat> reconstruct_profile(const BasisCoefficients& coeffs, int k);

// Eigenvalue of the standard basis matrix B_i on the j-th common eigenspace:
// (-1)^j C(k-j, i-j) C(n-i-j, k-j), with out-of-range binomials equal to 0.
// Requires 0 <= i <= k and 0 <= j <= min(k, n-k).
Int basis_eigenvalue(int i, int j, int n, int k);

// Exact eigenvalues with multiplicities; lambdas[j] for j = 0..min(k, n-k),
// multiplicities[j] = C(n, j) - C(n, j-1).
struct Spectrum {
  int n = 0;
  int k = 0;
  std::vector<Rat> profile;
  std::vector<Rat> lambdas;
  std::vector<Int> multiplicities;

  int classes() const { return static_cast<int>(lambdas.size()) - 1; }
};

// Closed-form spectrum lambda_j = sum_i b_i mu_j^(i); requires n >= 2k.
Spectrum spectrum(const ProfileMatrixSpec& spec);

// Spectrum for any k <= n. Uses the closed forms when n >= 2k; for n < 2k the
// parameters are reduced through set complementation (a k-subset profile on
// [n] equals an (n-k)-subset profile with shifted intersection sizes) and the
// result is certified against the literal dense matrix before being returned.
Spectrum exact_spectrum(const ProfileMatrixSpec& spec, long dense_cap = 500);

// The literal C(n,k) x C(n,k) matrix, vertex order = combinadic rank.
DenseSymmetricMatrix dense_profile_matrix(const ProfileMatrixSpec& spec, long cap = 500);

// Exact cross-validation of the closed-form spectrum against the dense matrix:
//  (a) annihilation: the product of (A - lambda I) over distinct lambdas is 0;
//  (b) trace identities sum_j m_j lambda_j^p = tr(A^p) for p = 0, 1, 2;
//  (c) the multiplicities solve the Vandermonde system built from traces of
//      powers p = 0..(#distinct - 1).
struct DenseCheckReport {
  int n = 0;
  int k = 0;
  bool annihilation_ok = false;
  bool trace_ok = false;
  bool multiplicities_ok = false;
  std::string detail;  // first failure, empty when everything passed

  bool all_ok() const { return annihilation_ok && trace_ok && multiplicities_ok; }
};

DenseCheckReport verify_spectrum_dense(const ProfileMatrixSpec& spec, long cap = 500);

// Squared norms of the projections of a family's indicator vector onto the
// common eigenspaces, computed with exact projectors obtained by Lagrange
// interpolation in the intersection-(k-1) adjacency matrix.
struct EigenspaceProfile {
  int n = 0;
  int k = 0;
  Int family_size;
  std::vector<Rat> norms;  // norms[j] = ||E_j chi||^2, j = 0..min(k, n-k)
};

EigenspaceProfile eigenspace_profile(const std::vector<KSubset>& family, int n, int k,
                                     long cap = 500);

}  // namespace jspec
