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

#ifndef PIDEAL_FROBENIUS_HPP
#define PIDEAL_FROBENIUS_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "poly.hpp"

namespace pideal {

using Rational = mpq_class;

/// Rational canonical form C = C_{mu_1} (+) ... (+) C_{mu_r} with
/// mu_1 = mu_B and mu_{k+1} | mu_k, and an integer T with T*B = C*T.
struct FrobeniusForm {
  IntMatrix form;
  IntMatrix transform;
  BigInt det_transform;
  std::vector<IntPoly> invariant_factors;  ///< block order, mu_B first
};

/// Companion matrix with ones on the subdiagonal and -coefficients in the
/// last column.
inline IntMatrix companion_matrix(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion_matrix: need monic, degree >= 1");
  const std::size_t m = static_cast<std::size_t>(f.degree());
  IntMatrix c(m, m, BigInt(0));
  for (std::size_t i = 1; i < m; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < m; ++i) c(i, m - 1) = -f.coeffs()[i];
  return c;
}

/// Integer determinant by Bareiss elimination.
inline BigInt determinant(IntMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && ring::is_zero(m(piv, k))) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = ring::exact_div(BigInt(m(k, k) * m(i, j) - m(i, k) * m(k, j)), prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace detail {

using QVector = std::vector<Rational>;

inline QVector mat_vec(const IntMatrix& b, const QVector& v) {
  QVector out(v.size(), Rational(0));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!ring::is_zero(b(i, j))) out[i] += b(i, j) * v[j];
    }
  }
  return out;
}

// Incremental echelon basis that remembers how each echelon row was built
// from the inserted vectors.
class SpanSolver {
 public:
  explicit SpanSolver(std::size_t dim) : dim_(dim) {}

  std::size_t size() const noexcept { return count_; }

  // v = residual + sum_j coeff[j] * inserted_j
  std::pair<QVector, QVector> reduce(QVector v) const {
    QVector coeff(count_, Rational(0));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational f = v[pivots_[r]];
      if (f == 0) continue;
      for (std::size_t i = 0; i < dim_; ++i) v[i] -= f * rows_[r][i];
      for (std::size_t i = 0; i < combos_[r].size(); ++i) coeff[i] += f * combos_[r][i];
    }
    return {std::move(v), std::move(coeff)};
  }

  // Inserts v; returns false (and inserts nothing) when v is dependent.
  bool insert(const QVector& v) {
    auto [res, coeff] = reduce(v);
    std::size_t piv = 0;
    while (piv < dim_ && res[piv] == 0) ++piv;
    if (piv == dim_) return false;
    QVector combo(count_ + 1, Rational(0));
    for (std::size_t i = 0; i < count_; ++i) combo[i] = -coeff[i];
    combo[count_] = 1;
    const Rational inv = 1 / res[piv];
    for (auto& x : res) x *= inv;
    for (auto& x : combo) x *= inv;
    for (auto& c : combos_) c.resize(count_ + 1, Rational(0));
    rows_.push_back(std::move(res));
    combos_.push_back(std::move(combo));
    pivots_.push_back(piv);
    ++count_;
    return true;
  }

 private:
  std::size_t dim_;
  std::size_t count_ = 0;
  std::vector<QVector> rows_;
  std::vector<QVector> combos_;
  std::vector<std::size_t> pivots_;
};

// Minimal monic m with m(B)u in span(W). Returns the polynomial (ascending
// rational coefficients) and the coefficients of m(B)u on W's basis.
struct QuotientMinPoly {
  QVector poly;
  QVector w_coeffs;
};

inline QuotientMinPoly quotient_min_poly(const IntMatrix& b, const SpanSolver& w, const QVector& u) {
  SpanSolver s = w;
  const std::size_t base = w.size();
  QVector cur = u;
  for (;;) {
    auto [res, coeff] = s.reduce(cur);
    bool dependent = true;
    for (const auto& x : res) {
      if (x != 0) {
        dependent = false;
        break;
      }
    }
    if (dependent) {
      const std::size_t m = coeff.size() - base;
      QVector poly(m + 1, Rational(0));
      for (std::size_t i = 0; i < m; ++i) poly[i] = -coeff[base + i];
      poly[m] = 1;
      QVector wc(coeff.begin(), coeff.begin() + static_cast<std::ptrdiff_t>(base));
      return {std::move(poly), std::move(wc)};
    }
    s.insert(cur);
    cur = mat_vec(b, cur);
  }
}

inline IntPoly to_int_poly(const QVector& c) {
  std::vector<BigInt> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].get_den() != 1) throw std::logic_error("frobenius: non-integral invariant factor");
    out[i] = c[i].get_num();
  }
  return IntPoly(std::move(out));
}

// Quotient of g by monic m over Q[X]; the remainder must vanish.
inline QVector exact_quotient(QVector g, const IntPoly& m) {
  while (!g.empty() && g.back() == 0) g.pop_back();
  const int dm = m.degree();
  if (static_cast<int>(g.size()) - 1 < dm) {
    if (!g.empty()) throw std::logic_error("frobenius: correction term not divisible");
    return {};
  }
  QVector q(g.size() - static_cast<std::size_t>(dm), Rational(0));
  for (std::size_t k = g.size(); k-- > static_cast<std::size_t>(dm);) {
    const Rational lead = g[k];
    const std::size_t shift = k - static_cast<std::size_t>(dm);
    q[shift] = lead;
    for (std::size_t j = 0; j <= static_cast<std::size_t>(dm); ++j) g[shift + j] -= lead * m.coeffs()[j];
  }
  for (std::size_t k = 0; k < static_cast<std::size_t>(dm); ++k) {
    if (g[k] != 0) throw std::logic_error("frobenius: correction term not divisible");
  }
  return q;
}

inline IntPoly lcm_monic(const IntPoly& a, const IntPoly& b) {
  const IntPoly g = primitive_gcd(a, b);
  return poly_divmod(a * b, g).first;
}

inline QVector candidate_vector(std::size_t n, std::size_t index) {
  QVector v(n, Rational(0));
  if (index < n) {
    v[index] = 1;
    return v;
  }
  // moment curve (1, c, c^2, ...), c = 1, 2, ...
  const long c = static_cast<long>(index - n + 1);
  Rational x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = x;
    x *= c;
  }
  return v;
}

}  // namespace detail

/// Rational canonical form over Q with an integral transformation matrix.
/// Each block is a Krylov chain v, Bv, ... of a vector that is maximal for
/// the operator induced on the quotient by the earlier blocks; the vector is
/// corrected so that its chain is an invariant complement. With P the matrix
/// of all chain vectors, T = L * P^{-1} where L clears every denominator.
inline FrobeniusForm frobenius_form_with_transform(const IntMatrix& b) {
  using detail::QVector;
  if (!b.is_square() || b.rows() == 0) throw std::invalid_argument("frobenius: need a square matrix");
  const std::size_t n = b.rows();

  detail::SpanSolver w(n);
  std::vector<QVector> columns;                // P, column by column
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (first column, length)
  std::vector<IntPoly> factors;

  while (w.size() < n) {
    IntPoly target = IntPoly::constant(1);
    for (std::size_t i = 0; i < n; ++i) {
      auto q = detail::quotient_min_poly(b, w, detail::candidate_vector(n, i));
      target = detail::lcm_monic(target, detail::to_int_poly(q.poly));
    }
    QVector u;
    detail::QuotientMinPoly qm;
    for (std::size_t idx = 0;; ++idx) {
      u = detail::candidate_vector(n, idx);
      qm = detail::quotient_min_poly(b, w, u);
      if (static_cast<int>(qm.poly.size()) - 1 == target.degree()) break;
      if (idx > n * n + 2 * n) throw std::logic_error("frobenius: no maximal vector found");
    }
    // m(B)u = sum_j g_j(B) v_j; subtract (g_j / m)(B) v_j from u.
    QVector v = u;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      const auto [first, len] = blocks[j];
      QVector g(qm.w_coeffs.begin() + static_cast<std::ptrdiff_t>(first),
                qm.w_coeffs.begin() + static_cast<std::ptrdiff_t>(first + len));
      QVector h = detail::exact_quotient(std::move(g), target);
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (h[i] == 0) continue;
        const QVector& chain = columns[first + i];
        for (std::size_t r = 0; r < n; ++r) v[r] -= h[i] * chain[r];
      }
    }
    const std::size_t first = columns.size();
    QVector cur = v;
    for (int k = 0; k < target.degree(); ++k) {
      if (!w.insert(cur)) throw std::logic_error("frobenius: chain is not independent");
      columns.push_back(cur);
      cur = detail::mat_vec(b, cur);
    }
    blocks.emplace_back(first, static_cast<std::size_t>(target.degree()));
    factors.push_back(target);
  }

  // Invert P by Gauss-Jordan over Q.
  std::vector<QVector> aug(n, QVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = columns[j][i];
    aug[i][n + i] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (aug[piv][k] == 0) ++piv;
    std::swap(aug[piv], aug[k]);
    const Rational inv = 1 / aug[k][k];
    for (auto& x : aug[k]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || aug[i][k] == 0) continue;
      const Rational f = aug[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[k][j];
    }
  }
  BigInt scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = ring::lcm(scale, aug[i][n + j].get_den());
  }
  IntMatrix t(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = aug[i][n + j] * scale;
      t(i, j) = x.get_num();
    }
  }

  IntMatrix c(n, n, BigInt(0));
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const IntMatrix comp = companion_matrix(factors[k]);
    const auto [first, len] = blocks[k];
    for (std::size_t i = 0; i < len; ++i) {
      for (std::size_t j = 0; j < len; ++j) c(first + i, first + j) = comp(i, j);
    }
  }
  BigInt det = determinant(t);
  return {std::move(c), std::move(t), std::move(det), std::move(factors)};
}

}  // namespace pideal

#endif  // PIDEAL_FROBENIUS_HPP
