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

#ifndef PIDEAL_SNF_HPP
#define PIDEAL_SNF_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace pideal {

/// S * M * T = diag(alpha_1, ..., alpha_r, 0, ...) with alpha_1 | alpha_2 | ...
/// monic and S, T invertible over GF(p)[X]. `left` is empty when the caller
/// asked for the column transform only.
struct SnfResult {
  std::optional<ModPolyMatrix> left;
  ModPolyMatrix right;
  std::vector<ModPoly> diag;  ///< min(rows, cols) entries, trailing zeros for rank deficiency

  std::size_t rank() const {
    return static_cast<std::size_t>(
        std::count_if(diag.begin(), diag.end(), [](const ModPoly& a) { return !a.is_zero(); }));
  }
};

inline ModPolyMatrix modpoly_identity(std::size_t n, const FieldRef& field) {
  ModPolyMatrix m(n, n, ModPoly(field));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ModPoly::constant(field, 1);
  return m;
}

namespace detail {

class SnfEngine {
 public:
  SnfEngine(const ModPolyMatrix& m, const FieldRef& field, bool want_left)
      : d_(m), field_(field), zero_(field), t_(modpoly_identity(m.cols(), field)) {
    if (want_left) s_ = modpoly_identity(m.rows(), field);
  }

  SnfResult run() {
    const std::size_t steps = std::min(d_.rows(), d_.cols());
    std::size_t rank = 0;
    for (std::size_t k = 0; k < steps; ++k) {
      if (!diagonalize_at(k)) break;
      ++rank;
    }
    patch_divisibility(rank);
    SnfResult out{std::move(s_), std::move(t_), {}};
    for (std::size_t k = 0; k < steps; ++k) out.diag.push_back(k < rank ? d_(k, k) : zero_);
    return out;
  }

 private:
  // row_i -= q * row_k (also on S)
  void row_axpy(std::size_t i, std::size_t k, const ModPoly& q) {
    for (std::size_t j = 0; j < d_.cols(); ++j) {
      if (!d_(k, j).is_zero()) d_(i, j) -= q * d_(k, j);
    }
    if (s_) {
      for (std::size_t j = 0; j < s_->cols(); ++j) {
        if (!(*s_)(k, j).is_zero()) (*s_)(i, j) -= q * (*s_)(k, j);
      }
    }
  }

  // col_j -= q * col_k (also on T)
  void col_axpy(std::size_t j, std::size_t k, const ModPoly& q) {
    for (std::size_t i = 0; i < d_.rows(); ++i) {
      if (!d_(i, k).is_zero()) d_(i, j) -= q * d_(i, k);
    }
    for (std::size_t i = 0; i < t_.rows(); ++i) {
      if (!t_(i, k).is_zero()) t_(i, j) -= q * t_(i, k);
    }
  }

  void swap_rows(std::size_t i, std::size_t k) {
    d_.swap_rows(i, k);
    if (s_) s_->swap_rows(i, k);
  }

  void swap_cols(std::size_t j, std::size_t k) {
    d_.swap_cols(j, k);
    t_.swap_cols(j, k);
  }

  // Clears row k and column k outside the diagonal; false when the trailing
  // block is zero.
  bool diagonalize_at(std::size_t k) {
    for (;;) {
      std::size_t pi = 0, pj = 0;
      int best = kMinusInfinity;
      for (std::size_t i = k; i < d_.rows(); ++i) {
        for (std::size_t j = k; j < d_.cols(); ++j) {
          const int deg = d_(i, j).degree();
          if (deg == kMinusInfinity) continue;
          if (best == kMinusInfinity || deg < best) {
            best = deg;
            pi = i;
            pj = j;
          }
        }
      }
      if (best == kMinusInfinity) return false;
      swap_rows(k, pi);
      swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < d_.rows(); ++i) {
        if (d_(i, k).is_zero()) continue;
        auto [q, r] = modpoly_divmod(d_(i, k), d_(k, k));
        row_axpy(i, k, q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < d_.cols(); ++j) {
        if (d_(k, j).is_zero()) continue;
        auto [q, r] = modpoly_divmod(d_(k, j), d_(k, k));
        col_axpy(j, k, q);
        if (!r.is_zero()) clean = false;
      }
      if (clean) return true;
    }
  }

  // diag(a, b) -> diag(gcd, lcm) using
  //   [ s     t  ] diag(a,b) [ 1  -t*b/g ]
  //   [-b/g  a/g ]           [ 1   s*a/g ]
  void patch_pair(std::size_t i, std::size_t j) {
    const ModPoly a = d_(i, i);
    const ModPoly b = d_(j, j);
    auto [g, s, t] = modpoly_gcdext(a, b);
    const ModPoly a_g = modpoly_divmod(a, g).first;
    const ModPoly b_g = modpoly_divmod(b, g).first;

    if (s_) {
      for (std::size_t c = 0; c < s_->cols(); ++c) {
        const ModPoly ri = (*s_)(i, c);
        const ModPoly rj = (*s_)(j, c);
        (*s_)(i, c) = s * ri + t * rj;
        (*s_)(j, c) = a_g * rj - b_g * ri;
      }
    }
    const ModPoly tb_g = t * b_g;
    const ModPoly sa_g = s * a_g;
    for (std::size_t r = 0; r < t_.rows(); ++r) {
      const ModPoly ci = t_(r, i);
      const ModPoly cj = t_(r, j);
      t_(r, i) = ci + cj;
      t_(r, j) = sa_g * cj - tb_g * ci;
    }
    d_(i, i) = g;
    d_(j, j) = a_g * b;
  }

  void patch_divisibility(std::size_t rank) {
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i + 1; j < rank; ++j) {
        if (!modpoly_divmod(d_(j, j), d_(i, i)).second.is_zero()) patch_pair(i, j);
      }
    }
    for (std::size_t k = 0; k < rank; ++k) {
      if (d_(k, k).is_monic()) continue;
      const BigInt inv = field_->inverse(d_(k, k).lc());
      d_(k, k) *= inv;
      if (s_) {
        for (std::size_t c = 0; c < s_->cols(); ++c) (*s_)(k, c) *= inv;
      }
    }
  }

  ModPolyMatrix d_;
  FieldRef field_;
  ModPoly zero_;
  std::optional<ModPolyMatrix> s_;
  ModPolyMatrix t_;
};

}  // namespace detail

/// Smith normal form over GF(p)[X] with transformations. Pivots are chosen
/// of minimal degree; the divisibility chain is enforced afterwards.
inline SnfResult smith_normal_form(const ModPolyMatrix& m, const FieldRef& field, bool want_left = true) {
  return detail::SnfEngine(m, field, want_left).run();
}

/// Determinant over GF(p)[X] by fraction-free (Bareiss) elimination.
inline ModPoly modpoly_determinant(ModPolyMatrix m, const FieldRef& field) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  ModPoly prev = ModPoly::constant(field, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k).is_zero()) ++piv;
    if (piv == n) return ModPoly(field);
    if (piv != k) {
      m.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ModPoly num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = modpoly_divmod(num, prev).first;
      }
      m(i, k) = ModPoly(field);
    }
    prev = m(k, k);
  }
  ModPoly det = n == 0 ? ModPoly::constant(field, 1) : m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace pideal

#endif  // PIDEAL_SNF_HPP
