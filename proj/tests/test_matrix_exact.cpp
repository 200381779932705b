/*
   Copyright 2026 The pideal Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace pideal {
namespace {

using testing::kSeed;

IntPoly P(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(std::move(v));
}

const IntMatrix kCubic = int_matrix({{1, 0, 1}, {1, -2, -1}, {10, 0, 0}});

TEST(CharAdjugate, Cubic) {
  const CharAdjugate ca = char_and_adjugate(kCubic);
  EXPECT_EQ(ca.chi, P({-20, -12, 1, 1}));
  const std::vector<IntPoly> expected{P({0, 2, 1}),  P({}),  P({2, 1}),     P({-10, 1}), P({-10, -1, 1}),
                                      P({2, -1}),    P({20, 10}), P({}), P({-2, 1, 1})};
  EXPECT_EQ(row_major(ca.adj), expected);
}

TEST(CharAdjugate, Trivial) {
  const CharAdjugate one = char_and_adjugate(int_matrix({{0}}));
  EXPECT_EQ(one.chi, P({0, 1}));
  EXPECT_EQ(one.adj(0, 0), P({1}));
  const CharAdjugate zero = char_and_adjugate(int_matrix({{0, 0}, {0, 0}}));
  EXPECT_EQ(zero.chi, P({0, 0, 1}));
  EXPECT_EQ(zero.adj(0, 0), P({0, 1}));
  EXPECT_EQ(zero.adj(1, 1), P({0, 1}));
  EXPECT_TRUE(zero.adj(0, 1).is_zero());
}

TEST(CharAdjugate, IdentityPropertyRandom) {
  std::mt19937_64 rng(kSeed + 10);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + it % 6;
    const IntMatrix b = testing::random_matrix(rng, n, -9, 9);
    const CharAdjugate ca = char_and_adjugate(b);
    EXPECT_TRUE(ca.chi.is_monic());
    EXPECT_EQ(ca.chi.degree(), static_cast<int>(n));
    EXPECT_TRUE(testing::adjugate_identity_holds(b, ca));
    // Independent characteristic polynomial.
    EXPECT_EQ(testing::to_vec(ca.chi), oracle::characteristic_polynomial(testing::to_mat(b)));
  }
}

TEST(MinimalPolynomial, SpecValues) {
  EXPECT_EQ(minimal_polynomial(kCubic), P({-20, -12, 1, 1}));
  EXPECT_EQ(minimal_polynomial(identity_matrix(4)), P({-1, 1}));
  EXPECT_EQ(minimal_polynomial(int_matrix({{4, 5}, {3, 5}})), P({5, -9, 1}));
  EXPECT_EQ(minimal_polynomial(int_matrix({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}})), P({6, -5, 1}));
}

TEST(MinimalPolynomial, PropertyRandom) {
  std::mt19937_64 rng(kSeed + 11);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + it % 5;
    IntMatrix b = testing::random_matrix(rng, n, -3, 3);
    if (it % 3 == 0) {
      // Force a repeated eigenvalue structure.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) b(i, j) = i == j ? BigInt(it % 4) : BigInt(0);
      }
      if (n > 2) b(0, 1) = 1;
    }
    const IntPoly mu = minimal_polynomial(b);
    const IntPoly chi = char_and_adjugate(b).chi;
    EXPECT_TRUE(mu.is_monic());
    EXPECT_TRUE(is_zero_matrix(evaluate(mu, b)));
    EXPECT_TRUE(poly_rem(chi, mu).is_zero());
    // Krylov degree check: no lower-degree monic annihilates B.
    const unsigned oracle_deg = oracle::oracle_min_monic_degree(testing::to_mat(b), BigInt(1000003), 1);
    EXPECT_EQ(mu.degree(), static_cast<int>(oracle_deg));
  }
}

ModPolyMatrix modpoly_matrix(const FieldRef& f, std::vector<std::vector<ModPoly>> rows) {
  ModPolyMatrix m(rows.size(), rows[0].size(), ModPoly(f));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

TEST(Snf, Identity) {
  const FieldRef f = make_field(Prime(3));
  const ModPolyMatrix id = modpoly_identity(3, f);
  const SnfResult r = smith_normal_form(id, f);
  EXPECT_TRUE(testing::snf_contract_holds(id, r, f));
  for (const auto& d : r.diag) EXPECT_EQ(d, ModPoly::constant(f, 1));
  EXPECT_EQ(r.rank(), 3u);
}

TEST(Snf, DiagonalOverGf2) {
  const FieldRef f = make_field(Prime(2));
  const ModPoly x = ModPoly::monomial(f, 1, 1), x2 = ModPoly::monomial(f, 1, 2);
  const ModPolyMatrix m = modpoly_matrix(f, {{x, ModPoly(f)}, {ModPoly(f), x2}});
  const SnfResult r = smith_normal_form(m, f);
  EXPECT_TRUE(testing::snf_contract_holds(m, r, f));
  EXPECT_EQ(r.diag[0], x);
  EXPECT_EQ(r.diag[1], x2);
}

TEST(Snf, NeedsGcdPatch) {
  // diag(X, X+1) has Smith form diag(1, X(X+1)).
  const FieldRef f = make_field(Prime(5));
  const ModPoly x = ModPoly::monomial(f, 1, 1);
  const ModPolyMatrix m = modpoly_matrix(f, {{x, ModPoly(f)}, {ModPoly(f), ModPoly(f, {1, 1})}});
  const SnfResult r = smith_normal_form(m, f);
  EXPECT_TRUE(testing::snf_contract_holds(m, r, f));
  EXPECT_EQ(r.diag[0], ModPoly::constant(f, 1));
  EXPECT_EQ(r.diag[1], ModPoly(f, {0, 1, 1}));
}

TEST(Snf, PropertyRandomRectangular) {
  std::mt19937_64 rng(kSeed + 12);
  const long primes[] = {2, 3, 5};
  for (int it = 0; it < 80; ++it) {
    const FieldRef f = make_field(Prime(primes[it % 3]));
    const std::size_t rows = 1 + static_cast<std::size_t>(testing::uniform(rng, 0, 3));
    const std::size_t cols = 1 + static_cast<std::size_t>(testing::uniform(rng, 0, 5));
    ModPolyMatrix m(rows, cols, ModPoly(f));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = testing::random_modpoly(rng, f, 2);
    }
    const SnfResult r = smith_normal_form(m, f, it % 2 == 0);
    EXPECT_TRUE(testing::snf_contract_holds(m, r, f)) << "iteration " << it;
    if (rows == cols) {
      // Determinant agrees with the product of the diagonal up to a unit.
      ModPoly prod = ModPoly::constant(f, 1);
      for (const auto& d : r.diag) prod = prod * d;
      const ModPoly det = modpoly_determinant(m, f);
      EXPECT_EQ(det.is_zero() ? det : det.monic(), prod);
    }
  }
}

TEST(Snf, SpecRandom3x5OverGf3) {
  std::mt19937_64 rng(kSeed + 13);
  const FieldRef f = make_field(Prime(3));
  for (int it = 0; it < 20; ++it) {
    ModPolyMatrix m(3, 5, ModPoly(f));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = testing::random_modpoly(rng, f, 2);
    }
    EXPECT_TRUE(testing::snf_contract_holds(m, smith_normal_form(m, f), f));
  }
}

void expect_frobenius_valid(const IntMatrix& b, const FrobeniusForm& ff) {
  EXPECT_EQ(ff.transform * b, ff.form * ff.transform);
  EXPECT_NE(ff.det_transform, 0);
  EXPECT_EQ(determinant(ff.transform), ff.det_transform);
  ASSERT_FALSE(ff.invariant_factors.empty());
  EXPECT_EQ(ff.invariant_factors.front(), minimal_polynomial(b));
  for (std::size_t k = 0; k + 1 < ff.invariant_factors.size(); ++k) {
    EXPECT_TRUE(poly_rem(ff.invariant_factors[k], ff.invariant_factors[k + 1]).is_zero());
  }
  // Block structure.
  IntMatrix expected(b.rows(), b.rows(), BigInt(0));
  std::size_t off = 0;
  for (const auto& f : ff.invariant_factors) {
    const IntMatrix c = companion_matrix(f);
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) expected(off + i, off + j) = c(i, j);
    }
    off += c.rows();
  }
  EXPECT_EQ(off, b.rows());
  EXPECT_EQ(ff.form, expected);
}

TEST(Frobenius, Cyclic2x2) {
  const IntMatrix b = int_matrix({{4, 5}, {3, 5}});
  const FrobeniusForm ff = frobenius_form_with_transform(b);
  EXPECT_EQ(ff.form, int_matrix({{0, -5}, {1, 9}}));
  expect_frobenius_valid(b, ff);
}

TEST(Frobenius, CompanionIsFixed) {
  const IntMatrix c = companion_matrix(P({-20, -12, 1, 1}));
  const FrobeniusForm ff = frobenius_form_with_transform(c);
  EXPECT_EQ(ff.form, c);
  expect_frobenius_valid(c, ff);
}

TEST(Frobenius, DiagZeroTwo) {
  const IntMatrix b = int_matrix({{0, 0}, {0, 2}});
  const FrobeniusForm ff = frobenius_form_with_transform(b);
  EXPECT_EQ(ff.form, int_matrix({{0, 0}, {1, 2}}));
  expect_frobenius_valid(b, ff);
}

TEST(Frobenius, ScalarAndDerogatory) {
  expect_frobenius_valid(identity_matrix(3), frobenius_form_with_transform(identity_matrix(3)));
  const IntMatrix b = int_matrix({{2, 1, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 3}});
  const FrobeniusForm ff = frobenius_form_with_transform(b);
  expect_frobenius_valid(b, ff);
  EXPECT_EQ(ff.invariant_factors.size(), 2u);
}

TEST(Frobenius, PropertyRandom) {
  std::mt19937_64 rng(kSeed + 14);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 1 + it % 5;
    IntMatrix b = testing::random_matrix(rng, n, -4, 4);
    if (it % 4 == 0 && n > 1) {
      // Block-diagonal repeat gives a derogatory matrix.
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if ((i < n / 2) != (j < n / 2)) b(i, j) = 0;
        }
      }
      if (n % 2 == 0) {
        for (std::size_t i = 0; i < n / 2; ++i) {
          for (std::size_t j = 0; j < n / 2; ++j) b(n / 2 + i, n / 2 + j) = b(i, j);
        }
      }
    }
    expect_frobenius_valid(b, frobenius_form_with_transform(b));
  }
}

}  // namespace
}  // namespace pideal
