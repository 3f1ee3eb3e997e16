#include "jspec/bose_mesner.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace jspec {

namespace {

// Escalation signal for the fixed-width dense kernels; callers retry with a
// wider type, ending at arbitrary precision which never throws.
struct ArithmeticOverflow {};

template <class T>
T checked_add(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Int>) {
    return a + b;
  } else {
    T r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
}

template <class T>
T checked_sub(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Int>) {
    return a - b;
  } else {
    T r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
}

template <class T>
T checked_mul(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Int>) {
    return a * b;
  } else {
    T r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
  }
}

template <class T>
T to_fixed(const Int& z);

template <>
int64_t to_fixed<int64_t>(const Int& z) {
  if (!z.fits_slong_p()) throw ArithmeticOverflow{};
  return z.get_si();
}

template <>
__int128 to_fixed<__int128>(const Int& z) {
  Int a = abs(z);
  if (mpz_sizeinbase(a.get_mpz_t(), 2) > 126) throw ArithmeticOverflow{};
  Int hi = a >> 64;
  Int lo = a - (hi << 64);
  __int128 v = (static_cast<__int128>(hi.get_ui()) << 64) | lo.get_ui();
  return z < 0 ? -v : v;
}

template <>
Int to_fixed<Int>(const Int& z) {
  return z;
}

template <class T>
Int to_int(const T& v) {
  if constexpr (std::is_same_v<T, Int>) {
    return v;
  } else if constexpr (std::is_same_v<T, int64_t>) {
    return Int(static_cast<long>(v));
  } else {
    bool neg = v < 0;
    unsigned __int128 a = neg ? -static_cast<unsigned __int128>(v) : v;
    Int hi(static_cast<unsigned long>(a >> 64));
    Int lo(static_cast<unsigned long>(a & ~uint64_t{0}));
    Int z = (hi << 64) | lo;
    return neg ? Int(-z) : z;
  }
}

// Pairwise intersection sizes of all k-subsets of [n], row-major.
std::vector<uint8_t> intersection_table(int n, int k, int N) {
  std::vector<KSubset> verts;
  verts.reserve(N);
  for (int r = 0; r < N; ++r) verts.push_back(subset_unrank(r, n, k));
  std::vector<uint8_t> sz(size_t(N) * N);
  for (int u = 0; u < N; ++u) {
    sz[size_t(u) * N + u] = static_cast<uint8_t>(k);
    for (int v = u + 1; v < N; ++v) {
      auto s = static_cast<uint8_t>(intersection_size(verts[u], verts[v]));
      sz[size_t(u) * N + v] = s;
      sz[size_t(v) * N + u] = s;
    }
  }
  return sz;
}

// C = A*B - shift*B, with A given implicitly by the intersection table.
template <class T>
std::vector<T> profile_mul(int N, const std::vector<T>& entry,
                           const std::vector<uint8_t>& sz, const std::vector<T>& B,
                           const T& shift) {
  std::vector<T> C(size_t(N) * N, T(0));
  for (int i = 0; i < N; ++i) {
    const size_t irow = size_t(i) * N;
    for (int j = 0; j < N; ++j) {
      const T& a = entry[sz[irow + j]];
      if (a == 0) continue;
      const size_t jrow = size_t(j) * N;
      for (int c = 0; c < N; ++c)
        C[irow + c] = checked_add(C[irow + c], checked_mul(a, B[jrow + c]));
    }
    if (shift != 0)
      for (int c = 0; c < N; ++c)
        C[irow + c] = checked_sub(C[irow + c], checked_mul(shift, B[irow + c]));
  }
  return C;
}

// Exact solve of the r x r Vandermonde system sum_u x_u node_u^p = rhs_p.
std::vector<Rat> solve_vandermonde(const std::vector<Int>& nodes,
                                   const std::vector<Int>& rhs) {
  const int r = static_cast<int>(nodes.size());
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(r + 1));
  for (int p = 0; p < r; ++p) {
    for (int u = 0; u < r; ++u) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), nodes[u].get_mpz_t(), p);
      m[p][u] = Rat(pw);
    }
    m[p][r] = Rat(rhs[p]);
  }
  for (int col = 0; col < r; ++col) {
    int pivot = -1;
    for (int row = col; row < r; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::logic_error("solve_vandermonde: singular system");
    std::swap(m[col], m[pivot]);
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rat factor = m[row][col] / m[col][col];
      for (int c = col; c <= r; ++c) m[row][c] -= factor * m[col][c];
    }
  }
  std::vector<Rat> x(r);
  for (int u = 0; u < r; ++u) x[u] = m[u][r] / m[u][u];
  return x;
}

// Closed-form spectrum without any certification; for n < 2k the profile is
// rewritten on the complement side first.
Spectrum claimed_spectrum(const ProfileMatrixSpec& spec);

template <class T>
DenseCheckReport dense_checks_impl(const ProfileMatrixSpec& spec, int N,
                                   const std::vector<uint8_t>& sz,
                                   const std::vector<Int>& f_scaled,
                                   const std::vector<Int>& lambdas_scaled,
                                   const std::vector<Int>& mults) {
  DenseCheckReport report;
  report.n = spec.n;
  report.k = spec.k;

  std::vector<T> entry(f_scaled.size());
  for (size_t s = 0; s < f_scaled.size(); ++s) entry[s] = to_fixed<T>(f_scaled[s]);

  std::vector<Int> distinct;
  for (const Int& lam : lambdas_scaled)
    if (std::find(distinct.begin(), distinct.end(), lam) == distinct.end())
      distinct.push_back(lam);

  // (a) annihilation: apply the factors (A - lambda I) right to left.
  {
    std::vector<T> P(size_t(N) * N, T(0));
    T last = to_fixed<T>(distinct.back());
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        P[size_t(i) * N + j] = entry[sz[size_t(i) * N + j]];
        if (i == j) P[size_t(i) * N + j] = checked_sub(P[size_t(i) * N + j], last);
      }
    for (int l = static_cast<int>(distinct.size()) - 2; l >= 0; --l)
      P = profile_mul(N, entry, sz, P, to_fixed<T>(distinct[l]));
    report.annihilation_ok = true;
    for (size_t idx = 0; idx < P.size(); ++idx) {
      if (P[idx] != 0) {
        report.annihilation_ok = false;
        std::ostringstream msg;
        msg << "annihilation residual " << rat_string(Rat(to_int(P[idx]))) << " at ("
            << idx / N << "," << idx % N << ")";
        report.detail = msg.str();
        break;
      }
    }
  }

  // Traces of powers of the scaled matrix, up to what the Vandermonde check
  // needs. Under the dense cap there are at most 6 distinct eigenvalues.
  const int max_power = std::max<int>(2, static_cast<int>(distinct.size()) - 1);
  if (max_power > 6)
    throw std::invalid_argument("verify_spectrum_dense: too many distinct eigenvalues");
  std::vector<Int> traces(max_power + 1);
  {
    std::vector<T> A(size_t(N) * N);
    for (size_t idx = 0; idx < A.size(); ++idx) A[idx] = entry[sz[idx]];
    traces[0] = N;
    T t1(0), t2(0);
    for (int i = 0; i < N; ++i) t1 = checked_add(t1, A[size_t(i) * N + i]);
    for (const T& a : A) t2 = checked_add(t2, checked_mul(a, a));
    traces[1] = to_int(t1);
    traces[2] = to_int(t2);
    if (max_power >= 3) {
      std::vector<T> A2 = profile_mul(N, entry, sz, A, T(0));
      T t3(0), t4(0);
      for (size_t idx = 0; idx < A.size(); ++idx)
        t3 = checked_add(t3, checked_mul(A2[idx], A[idx]));
      traces[3] = to_int(t3);
      if (max_power >= 4) {
        for (const T& a : A2) t4 = checked_add(t4, checked_mul(a, a));
        traces[4] = to_int(t4);
      }
      if (max_power >= 5) {
        std::vector<T> A3 = profile_mul(N, entry, sz, A2, T(0));
        T t5(0), t6(0);
        for (size_t idx = 0; idx < A.size(); ++idx)
          t5 = checked_add(t5, checked_mul(A2[idx], A3[idx]));
        traces[5] = to_int(t5);
        if (max_power >= 6) {
          for (const T& a : A3) t6 = checked_add(t6, checked_mul(a, a));
          traces[6] = to_int(t6);
        }
      }
    }
  }

  // (b) sum_j m_j lambda_j^p = tr(A^p) for p = 0, 1, 2.
  report.trace_ok = true;
  for (int p = 0; p <= 2; ++p) {
    Int lhs = 0;
    for (size_t j = 0; j < lambdas_scaled.size(); ++j) {
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), lambdas_scaled[j].get_mpz_t(), p);
      lhs += mults[j] * pw;
    }
    if (lhs != traces[p]) {
      report.trace_ok = false;
      if (report.detail.empty()) {
        std::ostringstream msg;
        msg << "trace identity failed at p=" << p << ": " << lhs << " vs " << traces[p];
        report.detail = msg.str();
      }
      break;
    }
  }

  // (c) the grouped multiplicities solve the Vandermonde system of traces.
  {
    const int r = static_cast<int>(distinct.size());
    std::vector<Int> grouped(r, 0);
    for (size_t j = 0; j < lambdas_scaled.size(); ++j)
      for (int u = 0; u < r; ++u)
        if (lambdas_scaled[j] == distinct[u]) {
          grouped[u] += mults[j];
          break;
        }
    std::vector<Int> rhs(traces.begin(), traces.begin() + r);
    std::vector<Rat> solved = solve_vandermonde(distinct, rhs);
    report.multiplicities_ok = true;
    for (int u = 0; u < r; ++u)
      if (solved[u] != Rat(grouped[u])) {
        report.multiplicities_ok = false;
        if (report.detail.empty()) {
          std::ostringstream msg;
          msg << "multiplicity mismatch on eigenvalue index " << u << ": solved "
              << rat_string(solved[u]) << " vs " << grouped[u];
          report.detail = msg.str();
        }
        break;
      }
  }

  return report;
}

}  // namespace

void ProfileMatrixSpec::validate() const {
  if (n <= 0 || k <= 0 || k > n)
    throw std::invalid_argument("ProfileMatrixSpec: need 0 < k <= n");
  if (f.size() != size_t(k) + 1)
    throw std::invalid_argument("ProfileMatrixSpec: profile must have k+1 entries");
}

ProfileMatrixSpec forbidden_profile(int n, int k, int t) {
  if (t < 0 || t > k) throw std::invalid_argument("forbidden_profile: need 0 <= t <= k");
  ProfileMatrixSpec spec;
  spec.n = n;
  spec.k = k;
  spec.f.assign(k + 1, Rat(0));
  spec.f[t] = 1;
  spec.validate();
  return spec;
}

BasisCoefficients decompose(const ProfileMatrixSpec& spec) {
  spec.validate();
  const int k = spec.k;
  BasisCoefficients out;
  out.b.assign(k + 1, Rat(0));
  for (int i = 0; i <= k; ++i) {
    Rat acc(0);
    for (int d = 0; d <= i; ++d) {
      Rat term = Rat(binomial(i, d)) * spec.f[k - d];
      if ((i - d) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    out.b[i] = acc;
  }
  return out;
}

std::vector<Rat> reconstruct_profile(const BasisCoefficients& coeffs, int k) {
  if (coeffs.b.size() != size_t(k) + 1)
    throw std::invalid_argument("reconstruct_profile: need k+1 coefficients");
  std::vector<Rat> f(k + 1, Rat(0));
  for (int d = 0; d <= k; ++d) {
    Rat acc(0);
    for (int i = 0; i <= d; ++i) acc += coeffs.b[i] * Rat(binomial(d, i));
    f[k - d] = acc;
  }
  return f;
}

Int basis_eigenvalue(int i, int j, int n, int k) {
  if (n <= 0 || k <= 0 || k > n) throw std::invalid_argument("basis_eigenvalue: bad (n, k)");
  if (i < 0 || i > k) throw std::invalid_argument("basis_eigenvalue: basis index out of range");
  if (j < 0 || j > std::min(k, n - k))
    throw std::invalid_argument("basis_eigenvalue: eigenspace index out of range");
  Int value = binomial(k - j, i - j) * binomial(n - i - j, k - j);
  return (j % 2 == 0) ? value : Int(-value);
}

Spectrum spectrum(const ProfileMatrixSpec& spec) {
  spec.validate();
  if (spec.n < 2 * spec.k)
    throw std::invalid_argument("spectrum: requires n >= 2k; use exact_spectrum for n < 2k");
  return claimed_spectrum(spec);
}

namespace {

Spectrum claimed_spectrum(const ProfileMatrixSpec& spec) {
  if (spec.n < 2 * spec.k) {
    // Complement side: (n-k)-subsets with |xc ∩ yc| = |x ∩ y| + n - 2k.
    ProfileMatrixSpec reduced;
    reduced.n = spec.n;
    reduced.k = spec.n - spec.k;
    const int shift = 2 * spec.k - spec.n;
    reduced.f.assign(reduced.k + 1, Rat(0));
    for (int s = 0; s <= reduced.k; ++s) reduced.f[s] = spec.f[s + shift];
    Spectrum inner = claimed_spectrum(reduced);
    Spectrum out;
    out.n = spec.n;
    out.k = spec.k;
    out.profile = spec.f;
    out.lambdas = std::move(inner.lambdas);
    out.multiplicities = std::move(inner.multiplicities);
    return out;
  }

  const int k = spec.k;
  const int m = std::min(spec.k, spec.n - spec.k);  // == k here
  BasisCoefficients coeffs = decompose(spec);
  Spectrum out;
  out.n = spec.n;
  out.k = spec.k;
  out.profile = spec.f;
  out.lambdas.resize(m + 1);
  out.multiplicities.resize(m + 1);
  for (int j = 0; j <= m; ++j) {
    Rat lam(0);
    for (int i = 0; i <= k; ++i)
      lam += coeffs.b[i] * Rat(basis_eigenvalue(i, j, spec.n, spec.k));
    out.lambdas[j] = lam;
    out.multiplicities[j] = binomial(spec.n, j) - binomial(spec.n, j - 1);
  }
  return out;
}

}  // namespace

Spectrum exact_spectrum(const ProfileMatrixSpec& spec, long dense_cap) {
  spec.validate();
  if (spec.n >= 2 * spec.k) return claimed_spectrum(spec);
  DenseCheckReport certificate = verify_spectrum_dense(spec, dense_cap);
  if (!certificate.all_ok())
    throw std::logic_error("exact_spectrum: dense certification failed: " + certificate.detail);
  return claimed_spectrum(spec);
}

DenseSymmetricMatrix dense_profile_matrix(const ProfileMatrixSpec& spec, long cap) {
  spec.validate();
  Int count = binomial(spec.n, spec.k);
  if (count > cap) {
    std::ostringstream msg;
    msg << "dense_profile_matrix: C(" << spec.n << "," << spec.k << ") = " << count
        << " exceeds cap " << cap;
    throw std::invalid_argument(msg.str());
  }
  const int N = static_cast<int>(count.get_si());
  std::vector<uint8_t> sz = intersection_table(spec.n, spec.k, N);
  DenseSymmetricMatrix A(N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A.at(i, j) = spec.f[sz[size_t(i) * N + j]];
  return A;
}

DenseCheckReport verify_spectrum_dense(const ProfileMatrixSpec& spec, long cap) {
  spec.validate();
  Int count = binomial(spec.n, spec.k);
  if (count > cap) {
    std::ostringstream msg;
    msg << "verify_spectrum_dense: C(" << spec.n << "," << spec.k << ") = " << count
        << " exceeds cap " << cap;
    throw std::invalid_argument(msg.str());
  }
  const int N = static_cast<int>(count.get_si());

  Spectrum claimed = claimed_spectrum(spec);

  // Clear denominators; a scaled matrix has scaled eigenvalues, and zero
  // products stay zero.
  Int scale = 1;
  for (const Rat& v : spec.f) {
    Int den = v.get_den();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Int> f_scaled(spec.f.size());
  for (size_t s = 0; s < spec.f.size(); ++s) {
    Rat v = spec.f[s] * Rat(scale);
    if (v.get_den() != 1) throw std::logic_error("verify_spectrum_dense: scaling failed");
    f_scaled[s] = v.get_num();
  }
  std::vector<Int> lambdas_scaled(claimed.lambdas.size());
  for (size_t j = 0; j < claimed.lambdas.size(); ++j) {
    Rat v = claimed.lambdas[j] * Rat(scale);
    if (v.get_den() != 1)
      throw std::logic_error("verify_spectrum_dense: non-integral scaled eigenvalue");
    lambdas_scaled[j] = v.get_num();
  }

  std::vector<uint8_t> sz = intersection_table(spec.n, spec.k, N);

  try {
    return dense_checks_impl<int64_t>(spec, N, sz, f_scaled, lambdas_scaled,
                                      claimed.multiplicities);
  } catch (const ArithmeticOverflow&) {
  }
  try {
    return dense_checks_impl<__int128>(spec, N, sz, f_scaled, lambdas_scaled,
                                       claimed.multiplicities);
  } catch (const ArithmeticOverflow&) {
  }
  return dense_checks_impl<Int>(spec, N, sz, f_scaled, lambdas_scaled,
                                claimed.multiplicities);
}

EigenspaceProfile eigenspace_profile(const std::vector<KSubset>& family, int n, int k,
                                     long cap) {
  if (n <= 0 || k <= 0 || k > n) throw std::invalid_argument("eigenspace_profile: bad (n, k)");
  Int count = binomial(n, k);
  if (count > cap) {
    std::ostringstream msg;
    msg << "eigenspace_profile: C(" << n << "," << k << ") = " << count << " exceeds cap "
        << cap;
    throw std::invalid_argument(msg.str());
  }
  const int N = static_cast<int>(count.get_si());
  const int m = std::min(k, n - k);

  // Eigenvalues of the intersection-(k-1) adjacency matrix, which generates
  // the algebra: nu_j = (k-j)(n-k-j) - j. Cross-checked against the standard
  // basis machinery, then required to be pairwise distinct.
  std::vector<Int> nu(m + 1);
  for (int j = 0; j <= m; ++j) nu[j] = Int(k - j) * Int(n - k - j) - j;
  {
    Spectrum generator = claimed_spectrum(forbidden_profile(n, k, k - 1));
    for (int j = 0; j <= m; ++j)
      if (generator.lambdas[j] != Rat(nu[j]))
        throw std::logic_error("eigenspace_profile: generator eigenvalue mismatch");
  }
  for (int a = 0; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      if (nu[a] == nu[b])
        throw std::domain_error(
            "eigenspace_profile: coincident generator eigenvalues; projectors undefined");

  JohnsonParams params{n, k, k - 1};
  JohnsonGraph graph = build_johnson_graph(params, cap);

  // Indicator vector over combinadic ranks.
  std::vector<int> chi(N, 0);
  for (const KSubset& member : family) {
    if (member.n != n || member.k() != k)
      throw std::invalid_argument("eigenspace_profile: family member has wrong (n, k)");
    Int r = subset_rank(member);
    int idx = static_cast<int>(r.get_si());
    if (chi[idx]) throw std::invalid_argument("eigenspace_profile: duplicate family member");
    chi[idx] = 1;
  }

  EigenspaceProfile out;
  out.n = n;
  out.k = k;
  out.family_size = static_cast<long>(family.size());
  out.norms.assign(m + 1, Rat(0));

  for (int j = 0; j <= m; ++j) {
    std::vector<Int> w(chi.begin(), chi.end());
    Int denom = 1;
    for (int l = 0; l <= m; ++l) {
      if (l == j) continue;
      denom *= nu[j] - nu[l];
      std::vector<Int> next(N, 0);
      for (int v = 0; v < N; ++v) {
        Int acc = 0;
        graph.adj[v].for_each([&](int u) { acc += w[u]; });
        next[v] = acc - nu[l] * w[v];
      }
      w = std::move(next);
    }
    Int norm2 = 0;
    for (const Int& v : w) norm2 += v * v;
    out.norms[j] = make_rat(norm2, denom * denom);
  }
  return out;
}

}  // namespace jspec
