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

#ifndef PIDEAL_LIFTING_HPP
#define PIDEAL_LIFTING_HPP

#include <cstddef>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"
#include "snf.hpp"

namespace pideal {

/// A = [b | -chi_B I] for B in M_n(Z): c = n^2 rows, d = n^2 + 1 columns.
/// The first coordinate of the kernel of A modulo p^t is N_{(p^t)}(B).
struct McCoySystem {
  IntMatrix matrix;
  Prime p;
  FieldRef field;
  IntPoly chi;
  IntPoly mu;
  std::vector<IntPoly> b;  ///< adj(XI - B), row-major
  IntPolyMatrix a;
  ModPolyMatrix a_mod_p;

  std::size_t rows() const noexcept { return a.rows(); }
  std::size_t cols() const noexcept { return a.cols(); }
};

inline McCoySystem build_mccoy_system(const IntMatrix& b, const Prime& p) {
  CharAdjugate ca = char_and_adjugate(b);
  IntPoly mu = minimal_polynomial(ca);
  const std::size_t n = b.rows();
  const std::size_t c = n * n;
  std::vector<IntPoly> vec = row_major(ca.adj);
  IntPolyMatrix a(c, c + 1, IntPoly{});
  const IntPoly neg_chi = -ca.chi;
  for (std::size_t i = 0; i < c; ++i) {
    a(i, 0) = vec[i];
    a(i, i + 1) = neg_chi;
  }
  FieldRef field = make_field(p);
  ModPolyMatrix a_bar = a.transform([&](const IntPoly& f) { return reduce_mod_p(f, field); }, ModPoly(field));
  return {b, p, field, std::move(ca.chi), std::move(mu), std::move(vec), std::move(a), std::move(a_bar)};
}

/// Generator block G at level t: the columns of [p^t I | G] generate
/// M_t(A) = { f : A f = 0 mod p^t }.
struct LiftState {
  unsigned t = 0;
  IntPolyMatrix g;
};

/// Lifts generators of M_{t-1}(A) to F with [p^t I | F | p G] generating M_t(A).
/// A must have full row rank modulo p. The result has d - c + s columns and
/// entries reduced into [0, p^t).
inline IntPolyMatrix lift_step(const IntPolyMatrix& a, const ModPolyMatrix& a_bar, const FieldRef& field,
                               const LiftState& state) {
  const Prime& p = field->prime();
  const std::size_t c = a.rows();
  const std::size_t d = a.cols();
  const std::size_t s = state.g.cols();
  if (state.g.rows() != d) throw std::invalid_argument("lift_step: generator block has wrong row count");
  const BigInt pt_prev = p.pow(state.t);
  const BigInt pt = p.pow(state.t + 1);

  // R = A G / p^{t-1}
  ModPolyMatrix m = a_bar;
  if (s > 0) {
    IntPolyMatrix ag = multiply(a, state.g, IntPoly{});
    ModPolyMatrix r_bar(c, s, ModPoly(field));
    for (std::size_t i = 0; i < c; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (!all_divisible(ag(i, j), pt_prev)) {
          throw precondition_error("lift_step: A*G is not divisible by p^(t-1)");
        }
        r_bar(i, j) = reduce_mod_p(exact_div(ag(i, j), pt_prev), field);
      }
    }
    m = m.hconcat(r_bar);
  }

  SnfResult snf = smith_normal_form(m, field, /*want_left=*/false);
  if (snf.rank() != c) throw precondition_error("lift_step: A is not of full row rank modulo p");

  // F = last d - c + s columns of [p^{t-1} I | G] * T
  const std::size_t out_cols = d - c + s;
  IntPolyMatrix f(d, out_cols, IntPoly{});
  for (std::size_t k = 0; k < out_cols; ++k) {
    const std::size_t col = c + k;
    for (std::size_t i = 0; i < d; ++i) {
      IntPoly acc = lift_to_int(snf.right(i, col)) * pt_prev;
      for (std::size_t j = 0; j < s; ++j) {
        const ModPoly& tj = snf.right(d + j, col);
        if (tj.is_zero() || state.g(i, j).is_zero()) continue;
        acc += state.g(i, j) * lift_to_int(tj);
      }
      f(i, k) = acc.reduced(pt);
    }
  }
  return f;
}

inline IntPolyMatrix lift_step(const McCoySystem& sys, const LiftState& state) {
  return lift_step(sys.a, sys.a_mod_p, sys.field, state);
}

/// First row of a generator block.
inline std::vector<IntPoly> first_row(const IntPolyMatrix& m) {
  std::vector<IntPoly> out;
  out.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(0, j));
  return out;
}

/// Generators of N_{(p^t)}(B) for t = 1..levels by iterating the lifting
/// step alone, G_t = [F_t | p G_{t-1}]. Entry t-1 of the result lists
/// p^t, the first row of F_t and p times the first row of G_{t-1}.
/// The generator count doubles per level, so keep `levels` small.
inline std::vector<std::vector<IntPoly>> lifting_chain_generators(const McCoySystem& sys, unsigned levels) {
  std::vector<std::vector<IntPoly>> out;
  LiftState state{0, IntPolyMatrix::empty_columns(sys.cols())};
  for (unsigned t = 1; t <= levels; ++t) {
    const BigInt pt = sys.p.pow(t);
    IntPolyMatrix f = lift_step(sys, state);
    IntPolyMatrix pg = state.g.map([&](const IntPoly& x) { return (x * sys.p.value()).reduced(pt); });
    IntPolyMatrix next = f.hconcat(pg);
    std::vector<IntPoly> gens{IntPoly::constant(pt)};
    for (auto& g : first_row(next)) gens.push_back(std::move(g));
    out.push_back(std::move(gens));
    state = {t, std::move(next)};
  }
  return out;
}

}  // namespace pideal

#endif  // PIDEAL_LIFTING_HPP
