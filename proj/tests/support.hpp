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

#ifndef PIDEAL_TESTS_SUPPORT_HPP
#define PIDEAL_TESTS_SUPPORT_HPP

// Shared helpers for the test binaries: fixed-seed randomness and the
// conversions between library values and oracle vectors.

#include <cstdint>
#include <random>
#include <vector>

#include "pideal/oracle.hpp"
#include "pideal/pideal.hpp"

namespace pideal::testing {

inline constexpr std::uint64_t kSeed = 0x5eed2026ULL;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  IntMatrix m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(rng, lo, hi);
  }
  return m;
}

inline IntPoly random_poly(std::mt19937_64& rng, int degree, long lo, long hi) {
  std::vector<BigInt> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(rng, lo, hi));
  return IntPoly(std::move(c));
}

inline ModPoly random_modpoly(std::mt19937_64& rng, const FieldRef& field, int degree) {
  std::vector<BigInt> c;
  const long p = field->prime().value().get_si();
  for (int i = 0; i <= degree; ++i) c.emplace_back(uniform(rng, 0, p - 1));
  return ModPoly(field, std::move(c));
}

inline oracle::Vec to_vec(const IntPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

inline oracle::Mat to_mat(const IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline oracle::HowellBasis ideal_module(const std::vector<IntPoly>& gens, const IntMatrix& b, const BigInt& p,
                                        unsigned t) {
  std::vector<oracle::Vec> v;
  for (const auto& g : gens) v.push_back(to_vec(g));
  return oracle::oracle_ideal_module(v, to_mat(b), p, t);
}

inline bool annihilates(const IntPoly& f, const IntMatrix& b, const BigInt& m) {
  return oracle::annihilates_mod(to_vec(f), to_mat(b), m);
}

/// (XI - B) * adj == chi * I over Z[X].
inline bool adjugate_identity_holds(const IntMatrix& b, const CharAdjugate& ca) {
  const std::size_t n = b.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntPoly acc = IntPoly::x() * ca.adj(i, j);
      for (std::size_t k = 0; k < n; ++k) acc -= ca.adj(k, j) * b(i, k);
      if (acc != (i == j ? ca.chi : IntPoly{})) return false;
    }
  }
  return true;
}

/// Contract of an SNF result: left * m * right == diag, unit determinants of
/// the transforms, monic diagonal with the divisibility chain. Without a left
/// transform, m * right must vanish outside its first rank() columns and have
/// the same diagonal as a full run.
inline bool snf_contract_holds(const ModPolyMatrix& m, const SnfResult& r, const FieldRef& field) {
  const ModPoly zero(field);
  const std::size_t k = std::min(m.rows(), m.cols());
  if (r.diag.size() != k) return false;
  ModPolyMatrix prod = multiply(m, r.right, zero);
  if (r.left) {
    prod = multiply(*r.left, prod, zero);
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = 0; j < prod.cols(); ++j) {
        if (prod(i, j) != ((i == j) ? r.diag[i] : zero)) return false;
      }
    }
  } else {
    for (std::size_t i = 0; i < prod.rows(); ++i) {
      for (std::size_t j = r.rank(); j < prod.cols(); ++j) {
        if (!prod(i, j).is_zero()) return false;
      }
    }
    if (smith_normal_form(m, field, true).diag != r.diag) return false;
  }
  auto unit_det = [&](const ModPolyMatrix& t) {
    ModPoly d = modpoly_determinant(t, field);
    return !d.is_zero() && d.degree() == 0;
  };
  if (!unit_det(r.right)) return false;
  if (r.left && !unit_det(*r.left)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (!r.diag[i].is_zero() && !r.diag[i].is_monic()) return false;
    if (i + 1 < k) {
      if (r.diag[i].is_zero() && !r.diag[i + 1].is_zero()) return false;
      if (!r.diag[i].is_zero() && !modpoly_divmod(r.diag[i + 1], r.diag[i]).second.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace pideal::testing

#endif  // PIDEAL_TESTS_SUPPORT_HPP
