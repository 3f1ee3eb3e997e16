#include "jspec/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "jspec/extremal.hpp"

namespace jspec {

namespace {

HoffmanReport report_from_spectrum(const Spectrum& sp) {
  const Rat& d = sp.lambdas[0];
  Rat lambda_min = sp.lambdas[0];
  for (const Rat& lam : sp.lambdas) {
    if (lam > d)
      throw std::logic_error("hoffman_bound: lambda_0 is not the largest eigenvalue");
    if (lam < lambda_min) lambda_min = lam;
  }
  if (lambda_min >= 0)
    throw std::domain_error("hoffman_bound: lambda_min >= 0 (edgeless pseudo-adjacency)");
  Int N = binomial(sp.n, sp.k);
  HoffmanReport report;
  report.num_vertices = N;
  report.degree = d;
  report.lambda_min = lambda_min;
  report.bound = Rat(N) * (-lambda_min) / (d - lambda_min);
  report.bound_floor = rat_floor(report.bound);
  return report;
}

}  // namespace

HoffmanReport hoffman_bound(const ProfileMatrixSpec& spec) {
  spec.validate();
  if (spec.f[spec.k] != 0)
    throw std::invalid_argument("hoffman_bound: profile must have a zero diagonal");
  bool has_positive = false;
  for (int s = 0; s <= spec.k; ++s) {
    if (spec.f[s] < 0)
      throw std::invalid_argument("hoffman_bound: profile entries must be non-negative");
    if (s < spec.k && spec.f[s] > 0) has_positive = true;
  }
  if (!has_positive)
    throw std::invalid_argument("hoffman_bound: profile has no positive off-diagonal value");
  return report_from_spectrum(exact_spectrum(spec));
}

TheoremReport verify_theorem(int k) {
  if (k < 2) throw std::invalid_argument("verify_theorem: requires k >= 2");
  const long n = static_cast<long>(k) * k - k + 1;

  TheoremReport report;
  report.k = k;
  report.n = n;
  report.target = binomial(n - 2, k - 2);

  // k = 2 has n = 3 < 2k and goes through the dense-certified route; the
  // closed-form indices j = 2, 3 do not exist there.
  ProfileMatrixSpec adjacency = forbidden_profile(static_cast<int>(n), k, 1);
  Spectrum sp = exact_spectrum(adjacency);
  const int m = sp.classes();

  report.lambda0 = sp.lambdas[0];
  report.lambda1 = sp.lambdas[1];
  if (m >= 2) report.lambda2 = sp.lambdas[2];
  if (m >= 3) report.lambda3 = sp.lambdas[3];

  report.closed_forms_ok = true;
  if (report.lambda0 != Rat(Int(k) * binomial(n - k, k - 1))) report.closed_forms_ok = false;
  if (k >= 3) {
    Rat expected1 =
        Rat(Int(k) * binomial(n - k - 1, k - 1) - Int(k - 1) * binomial(n - k, k - 1));
    Rat expected2 =
        Rat(Int(k - 2) * binomial(n - k - 1, k - 2) - Int(k) * binomial(n - k - 2, k - 2));
    Rat merged = make_rat(-binomial(n - k, k - 1), k - 1);
    if (report.lambda1 != expected1 || *report.lambda2 != expected2)
      report.closed_forms_ok = false;
    if (report.lambda1 != merged || *report.lambda2 != merged) report.closed_forms_ok = false;
    if (*report.lambda3 <= 0) report.closed_forms_ok = false;
    if (k >= 4) {
      Rat expected3 = make_rat(2 * Int(k) * k - 3 * k - 3, Int(k) * k - 3 * k + 2) *
                      Rat(binomial(n - k - 3, k - 3));
      if (*report.lambda3 != expected3) report.closed_forms_ok = false;
    }
  } else {
    // J(3, 2, 1) is the triangle: spectrum (2, -1), multiplicities (1, 2).
    if (report.lambda0 != Rat(2) || report.lambda1 != Rat(-1)) report.closed_forms_ok = false;
  }

  // Verdict-bearing minimum location: exact comparison over every eigenspace.
  Rat lambda_min = sp.lambdas[1];
  for (int j = 1; j <= m; ++j)
    if (sp.lambdas[j] < lambda_min) lambda_min = sp.lambdas[j];
  report.tail_ok = (sp.lambdas[1] == lambda_min);
  if (m >= 2) report.tail_ok = report.tail_ok && (sp.lambdas[2] == lambda_min);

  // Stated tail envelope |lambda_j| <= k C(n-k, k-3) for 4 <= j <= k.
  report.tail_envelope_ok = true;
  {
    Rat envelope = Rat(Int(k) * binomial(n - k, k - 3));
    for (int j = 4; j <= m; ++j) {
      Rat mag = sp.lambdas[j] < 0 ? Rat(-sp.lambdas[j]) : sp.lambdas[j];
      if (mag > envelope) report.tail_envelope_ok = false;
    }
  }

  const Rat& d = sp.lambdas[0];
  bool max_ok = true;
  for (int j = 0; j <= m; ++j)
    if (sp.lambdas[j] > d) max_ok = false;

  report.hoffman_ratio = (-lambda_min) / (d - lambda_min);
  Int N = binomial(n, k);
  report.hoffman_value = Rat(N) * report.hoffman_ratio;
  bool ratio_ok = (report.hoffman_ratio == make_rat(1, n));

  // Extremal construction: all k-subsets containing two fixed elements.
  // Materialized and counted while that stays cheap; pairwise independence is
  // re-checked quadratically on the small sizes. Beyond that the size is the
  // count identity C(n-2, k-2): any two members share two elements.
  bool construction_ok = true;
  if (k <= 6) {
    Family construction = canonical_family(static_cast<int>(n), k, 0, 1);
    report.construction_size = construction.size();
    for (const KSubset& member : construction.members)
      if (!member.contains(0) || !member.contains(1)) construction_ok = false;
    if (construction.size() <= 1200 && !is_independent(construction, 1).independent)
      construction_ok = false;
  } else {
    report.construction_size = report.target;
  }
  if (report.construction_size != report.target) construction_ok = false;

  report.verdict = report.closed_forms_ok && report.tail_ok && report.tail_envelope_ok &&
                   max_ok && ratio_ok && construction_ok &&
                   report.hoffman_value == Rat(report.target);
  return report;
}

Rat transitivity_bound(const Int& clique_size, const Int& num_vertices) {
  if (clique_size < 1 || clique_size > num_vertices)
    throw std::invalid_argument("transitivity_bound: need 1 <= clique_size <= N");
  return make_rat(num_vertices, clique_size);
}

}  // namespace jspec
