#include <doctest.h>

#include <random>
#include <stdexcept>

#include "jspec/bose_mesner.hpp"

using namespace jspec;

namespace {

std::vector<Rat> random_profile(int k, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rat> f(k + 1);
  for (int s = 0; s <= k; ++s) f[s] = make_rat(num(rng), den(rng));
  return f;
}

}  // namespace

TEST_CASE("decompose on the forbidden-one profile") {
  // delta_1 decomposes with b_{k-1} = 1 and b_k = -k.
  for (int k = 2; k <= 12; ++k) {
    ProfileMatrixSpec spec = forbidden_profile(4 * k, k, 1);
    BasisCoefficients coeffs = decompose(spec);
    for (int i = 0; i <= k - 2; ++i) CHECK(coeffs.b[i] == 0);
    CHECK(coeffs.b[k - 1] == 1);
    CHECK(coeffs.b[k] == Rat(-k));
  }
}

TEST_CASE("decompose basics") {
  SUBCASE("disjointness profile selects the top basis matrix") {
    for (int k : {2, 3, 5}) {
      BasisCoefficients coeffs = decompose(forbidden_profile(3 * k, k, 0));
      for (int i = 0; i < k; ++i) CHECK(coeffs.b[i] == 0);
      CHECK(coeffs.b[k] == 1);
    }
  }
  SUBCASE("constant one profile is the zeroth basis matrix") {
    ProfileMatrixSpec spec;
    spec.n = 9;
    spec.k = 3;
    spec.f.assign(4, Rat(1));
    BasisCoefficients coeffs = decompose(spec);
    CHECK(coeffs.b[0] == 1);
    for (int i = 1; i <= 3; ++i) CHECK(coeffs.b[i] == 0);
  }
}

TEST_CASE("decompose round-trips random profiles") {
  std::mt19937 rng(20240801);
  for (int k = 2; k <= 8; ++k) {
    for (int trial = 0; trial < 200; ++trial) {
      ProfileMatrixSpec spec;
      spec.n = 2 * k + 3;
      spec.k = k;
      spec.f = random_profile(k, rng);
      CHECK(reconstruct_profile(decompose(spec), k) == spec.f);
    }
  }
}

TEST_CASE("basis eigenvalues") {
  SUBCASE("the zeroth basis matrix is all-ones") {
    for (auto [n, k] : {std::pair{7, 3}, {9, 4}}) {
      CHECK(basis_eigenvalue(0, 0, n, k) == binomial(n, k));
      for (int j = 1; j <= k; ++j) CHECK(basis_eigenvalue(0, j, n, k) == 0);
    }
  }

  SUBCASE("top eigenvalue matches brute-force row sums") {
    // mu_0^(i) is the row sum of B_i; computed here by direct enumeration.
    for (int n = 4; n <= 14; ++n) {
      for (int k = 1; k <= n / 2; ++k) {
        Int total = binomial(n, k);
        if (total > 500) continue;
        int N = static_cast<int>(total.get_si());
        std::vector<KSubset> verts;
        for (int r = 0; r < N; ++r) verts.push_back(subset_unrank(r, n, k));
        for (int i = 0; i <= k; ++i) {
          Int row_sum = 0;
          for (int v = 0; v < N; ++v)
            row_sum += binomial(k - intersection_size(verts[0], verts[v]), i);
          CHECK(basis_eigenvalue(i, 0, n, k) == row_sum);
        }
      }
    }
  }

  SUBCASE("J(7,3) spot values") {
    CHECK(basis_eigenvalue(2, 0, 7, 3) == 30);  // 18 + 12 by the row-sum expansion
    CHECK(basis_eigenvalue(3, 1, 7, 3) == -3);
    // The full eigenvalue list of B_3 (the disjointness matrix) is certified
    // against the literal 35x35 matrix below.
    DenseCheckReport dense = verify_spectrum_dense(forbidden_profile(7, 3, 0));
    CHECK(dense.all_ok());
    Spectrum sp = spectrum(forbidden_profile(7, 3, 0));
    CHECK(sp.lambdas[1] == Rat(-3));
  }

  SUBCASE("index range errors") {
    CHECK_THROWS_AS(basis_eigenvalue(4, 0, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(basis_eigenvalue(0, 4, 7, 3), std::invalid_argument);
    CHECK_THROWS_AS(basis_eigenvalue(0, 2, 3, 2), std::invalid_argument);
  }
}

TEST_CASE("spectrum closed forms") {
  SUBCASE("J(7,3,1)") {
    Spectrum sp = spectrum(forbidden_profile(7, 3, 1));
    CHECK(sp.lambdas == std::vector<Rat>{Rat(18), Rat(-3), Rat(-3), Rat(3)});
    CHECK(sp.multiplicities == std::vector<Int>{Int(1), Int(6), Int(14), Int(14)});
    Rat trace(0);
    for (size_t j = 0; j < sp.lambdas.size(); ++j)
      trace += Rat(sp.multiplicities[j]) * sp.lambdas[j];
    CHECK(trace == 0);
  }

  SUBCASE("J(13,4,1)") {
    Spectrum sp = spectrum(forbidden_profile(13, 4, 1));
    CHECK(sp.lambdas[0] == Rat(Int(4) * binomial(9, 3)));
    CHECK(sp.lambdas[0] == Rat(336));
    CHECK(sp.lambdas[1] == Rat(-28));
    CHECK(sp.lambdas[2] == Rat(-28));
    // lambda_1 = k C(n-k-1, k-1) - (k-1) C(n-k, k-1) = 4*C(8,3) - 3*C(9,3)
    CHECK(sp.lambdas[1] == Rat(Int(4) * binomial(8, 3) - Int(3) * binomial(9, 3)));
  }

  SUBCASE("all-ones profile") {
    ProfileMatrixSpec spec;
    spec.n = 9;
    spec.k = 3;
    spec.f.assign(4, Rat(1));
    Spectrum sp = spectrum(spec);
    CHECK(sp.lambdas[0] == Rat(binomial(9, 3)));
    for (int j = 1; j <= 3; ++j) CHECK(sp.lambdas[j] == 0);
  }

  SUBCASE("multiplicities sum to the vertex count") {
    for (auto [n, k] : {std::pair{7, 3}, {13, 4}, {10, 5}, {12, 2}}) {
      Spectrum sp = spectrum(forbidden_profile(n, k, 1));
      Int total = 0;
      for (const Int& mult : sp.multiplicities) total += mult;
      CHECK(total == binomial(n, k));
    }
  }

  SUBCASE("spectrum is linear in the profile") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
      ProfileMatrixSpec f{7, 3, random_profile(3, rng)};
      ProfileMatrixSpec g{7, 3, random_profile(3, rng)};
      Rat alpha = make_rat(trial + 1, 3);
      Rat beta = make_rat(-trial, 7);
      ProfileMatrixSpec mix{7, 3, {}};
      mix.f.resize(4);
      for (int s = 0; s <= 3; ++s) mix.f[s] = alpha * f.f[s] + beta * g.f[s];
      Spectrum sf = spectrum(f), sg = spectrum(g), sm = spectrum(mix);
      for (int j = 0; j <= 3; ++j)
        CHECK(sm.lambdas[j] == alpha * sf.lambdas[j] + beta * sg.lambdas[j]);
    }
  }

  SUBCASE("n < 2k is rejected by the closed-form entry point") {
    CHECK_THROWS_AS(spectrum(forbidden_profile(3, 2, 1)), std::invalid_argument);
  }

  SUBCASE("exact_spectrum covers n < 2k through dense certification") {
    Spectrum sp = exact_spectrum(forbidden_profile(3, 2, 1));
    CHECK(sp.lambdas == std::vector<Rat>{Rat(2), Rat(-1)});
    CHECK(sp.multiplicities == std::vector<Int>{Int(1), Int(2)});
  }
}

TEST_CASE("dense profile matrices") {
  SUBCASE("J(3,2,1) is all-ones minus identity") {
    DenseSymmetricMatrix A = dense_profile_matrix(forbidden_profile(3, 2, 1));
    REQUIRE(A.order == 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(A.at(i, j) == (i == j ? Rat(0) : Rat(1)));
  }

  SUBCASE("J(7,3,1) rows have eighteen ones") {
    DenseSymmetricMatrix A = dense_profile_matrix(forbidden_profile(7, 3, 1));
    REQUIRE(A.order == 35);
    CHECK(A.is_symmetric());
    for (int i = 0; i < 35; ++i) {
      Rat row(0);
      for (int j = 0; j < 35; ++j) row += A.at(i, j);
      CHECK(row == 18);
    }
  }

  SUBCASE("the diagonal profile gives the identity") {
    DenseSymmetricMatrix A = dense_profile_matrix(forbidden_profile(7, 3, 3));
    for (int i = 0; i < 35; ++i)
      for (int j = 0; j < 35; ++j) CHECK(A.at(i, j) == (i == j ? Rat(1) : Rat(0)));
  }

  SUBCASE("cap") {
    CHECK_THROWS_AS(dense_profile_matrix(forbidden_profile(13, 4, 1)),
                    std::invalid_argument);
  }
}

TEST_CASE("dense spectrum verification") {
  CHECK(verify_spectrum_dense(forbidden_profile(7, 3, 1)).all_ok());
  CHECK(verify_spectrum_dense(forbidden_profile(9, 4, 1)).all_ok());  // N = 126
  CHECK(verify_spectrum_dense(forbidden_profile(6, 3, 0)).all_ok());  // n = 2k boundary

  SUBCASE("random rational profiles annihilate as well") {
    std::mt19937 rng(4242);
    for (auto [n, k] : {std::pair{8, 2}, {7, 3}, {9, 4}, {10, 5}}) {
      ProfileMatrixSpec spec{n, k, random_profile(k, rng)};
      DenseCheckReport report = verify_spectrum_dense(spec);
      CAPTURE(n);
      CAPTURE(k);
      CAPTURE(report.detail);
      CHECK(report.all_ok());
    }
  }
}

TEST_CASE("eigenspace profiles") {
  SUBCASE("pair family at (7,3) misses the top eigenspace") {
    std::vector<KSubset> family;
    for (int x = 2; x < 7; ++x) family.push_back(KSubset(7, {0, 1, x}));
    EigenspaceProfile profile = eigenspace_profile(family, 7, 3);
    REQUIRE(profile.norms.size() == 4);
    CHECK(profile.norms[0] == make_rat(25, 35));
    CHECK(profile.norms[1] > 0);
    CHECK(profile.norms[2] > 0);
    CHECK(profile.norms[3] == 0);
    Rat total(0);
    for (const Rat& norm : profile.norms) total += norm;
    CHECK(total == 5);
  }

  SUBCASE("full family concentrates on the constant eigenspace") {
    std::vector<KSubset> family;
    for (int r = 0; r < 35; ++r) family.push_back(subset_unrank(r, 7, 3));
    EigenspaceProfile profile = eigenspace_profile(family, 7, 3);
    CHECK(profile.norms[0] == 35);
    for (int j = 1; j <= 3; ++j) CHECK(profile.norms[j] == 0);
  }

  SUBCASE("empty family") {
    EigenspaceProfile profile = eigenspace_profile({}, 7, 3);
    for (const Rat& norm : profile.norms) CHECK(norm == 0);
  }

  SUBCASE("Parseval holds for random families") {
    std::mt19937 rng(99);
    for (auto [n, k] : {std::pair{7, 3}, {9, 4}, {8, 2}}) {
      int N = static_cast<int>(binomial(n, k).get_si());
      std::uniform_int_distribution<int> coin(0, 2);
      for (int trial = 0; trial < 5; ++trial) {
        std::vector<KSubset> family;
        for (int r = 0; r < N; ++r)
          if (coin(rng) == 0) family.push_back(subset_unrank(r, n, k));
        EigenspaceProfile profile = eigenspace_profile(family, n, k);
        Rat total(0);
        for (const Rat& norm : profile.norms) total += norm;
        CHECK(total == Rat(Int(static_cast<long>(family.size()))));
        CHECK(profile.norms[0] ==
              make_rat(Int(static_cast<long>(family.size())) *
                           Int(static_cast<long>(family.size())),
                       binomial(n, k)));
      }
    }
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(eigenspace_profile({KSubset(8, {0, 1, 2})}, 7, 3),
                    std::invalid_argument);
    std::vector<KSubset> dup{KSubset(7, {0, 1, 2}), KSubset(7, {0, 1, 2})};
    CHECK_THROWS_AS(eigenspace_profile(dup, 7, 3), std::invalid_argument);
  }
}
