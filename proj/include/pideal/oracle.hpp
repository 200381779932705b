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

#ifndef PIDEAL_ORACLE_HPP
#define PIDEAL_ORACLE_HPP

// Brute-force reference computations over Z/p^t. This header shares only the
// BigInt layer with the rest of the library; polynomials are plain
// coefficient vectors and matrices are nested vectors.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace pideal::oracle {

using Vec = std::vector<BigInt>;
using Mat = std::vector<Vec>;

/// Rows of residues modulo p^t.
struct ResidueMatrix {
  BigInt p;
  unsigned t = 1;
  Mat rows;
  std::size_t cols = 0;

  BigInt modulus() const { return ring::pow(p, t); }
};

/// Howell form over Z/p^t. Rows are in echelon form with pivots p^v, entries
/// above a pivot p^v lie in [0, p^v), and every element of the span whose
/// first k entries vanish lies in the span of the rows with pivot column
/// >= k. Two spans are equal iff their HowellBasis values are equal.
struct HowellBasis {
  BigInt p;
  unsigned t = 1;
  std::size_t cols = 0;
  Mat rows;

  friend bool operator==(const HowellBasis&, const HowellBasis&) = default;

  /// log_p of the number of elements in the span.
  unsigned long log_cardinality() const {
    unsigned long e = 0;
    for (const auto& r : rows) {
      for (const auto& x : r) {
        if (ring::is_zero(x)) continue;
        e += t - ring::valuation(x, p);
        break;
      }
    }
    return e;
  }
};

inline HowellBasis howell_form(const ResidueMatrix& m) {
  const BigInt mod = m.modulus();
  const std::size_t k = m.cols;
  auto reduce_row = [&](Vec& r) {
    for (auto& x : r) x = ring::mod(x, mod);
  };
  auto is_zero_row = [](const Vec& r) {
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return ring::is_zero(x); });
  };

  Mat pending;
  for (Vec r : m.rows) {
    if (r.size() != k) throw std::invalid_argument("howell_form: ragged rows");
    reduce_row(r);
    if (!is_zero_row(r)) pending.push_back(std::move(r));
  }

  Mat basis;
  std::vector<std::size_t> pivot_col;
  std::vector<BigInt> pivot_val;
  for (std::size_t j = 0; j < k; ++j) {
    std::size_t best = pending.size();
    unsigned long best_v = 0;
    for (std::size_t i = 0; i < pending.size(); ++i) {
      if (ring::is_zero(pending[i][j])) continue;
      const unsigned long v = ring::valuation(pending[i][j], m.p);
      if (best == pending.size() || v < best_v) {
        best = i;
        best_v = v;
      }
    }
    if (best == pending.size()) continue;
    Vec piv = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    const BigInt pv = ring::pow(m.p, best_v);
    const BigInt unit = ring::exact_div(piv[j], pv);
    const BigInt unit_inv = ring::inverse_mod(unit, mod);
    for (auto& x : piv) x = ring::mod(x * unit_inv, mod);

    Mat next;
    for (auto& r : pending) {
      if (!ring::is_zero(r[j])) {
        const BigInt q = ring::exact_div(r[j], pv);
        for (std::size_t c = 0; c < k; ++c) r[c] = ring::mod(r[c] - q * piv[c], mod);
      }
      if (!is_zero_row(r)) next.push_back(std::move(r));
    }
    if (best_v > 0) {
      // p^{t-v} * pivot row vanishes in column j but may not vanish later.
      Vec closure(k);
      const BigInt f = ring::pow(m.p, m.t - best_v);
      for (std::size_t c = 0; c < k; ++c) closure[c] = ring::mod(f * piv[c], mod);
      if (!is_zero_row(closure)) next.push_back(std::move(closure));
    }
    pending = std::move(next);
    basis.push_back(std::move(piv));
    pivot_col.push_back(j);
    pivot_val.push_back(pv);
  }

  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::size_t j = pivot_col[i];
    for (std::size_t h = 0; h < i; ++h) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), basis[h][j].get_mpz_t(), pivot_val[i].get_mpz_t());
      if (ring::is_zero(q)) continue;
      for (std::size_t c = 0; c < k; ++c) basis[h][c] = ring::mod(basis[h][c] - q * basis[i][c], mod);
    }
  }
  return {m.p, m.t, k, std::move(basis)};
}

/// True iff v lies in the span of `rows` over Z/p^t.
inline bool in_span(const Mat& rows, const Vec& v, const BigInt& p, unsigned t) {
  const std::size_t k = v.size();
  ResidueMatrix base{p, t, rows, k};
  ResidueMatrix ext = base;
  ext.rows.push_back(v);
  return howell_form(base) == howell_form(ext);
}

/// Characteristic polynomial det(XI - B), ascending coefficients, by
/// Berkowitz's division-free recursion.
inline Vec characteristic_polynomial(const Mat& b) {
  const std::size_t n = b.size();
  if (n == 0) throw std::invalid_argument("characteristic_polynomial: empty matrix");
  Vec c{BigInt(1), BigInt(-b[0][0])};  // descending
  for (std::size_t r = 1; r < n; ++r) {
    // Leading (r+1)x(r+1) block: a = b[r][r], row R = b[r][0..r), column S = b[0..r)[r].
    Vec col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = b[i][r];
    Vec toeplitz{BigInt(1), BigInt(-b[r][r])};
    Vec cur = col;
    for (std::size_t k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += b[r][i] * cur[i];
      toeplitz.push_back(-dot);
      Vec nxt(r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) nxt[i] += b[i][j] * cur[j];
      }
      cur = std::move(nxt);
    }
    Vec next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j < c.size() && j <= i; ++j) next[i] += toeplitz[i - j] * c[j];
    }
    c = std::move(next);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

namespace detail {

inline Mat mat_mul_mod(const Mat& a, const Mat& b, const BigInt& mod) {
  const std::size_t n = a.size();
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (ring::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
    for (auto& x : out[i]) x = ring::mod(x, mod);
  }
  return out;
}

// vec(B^k mod m) for k = 0..count-1, row-major.
inline Mat power_vectors(const Mat& b, std::size_t count, const BigInt& mod) {
  const std::size_t n = b.size();
  Mat reduced(n, Vec(n));
  Mat power(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    power[i][i] = ring::mod(BigInt(1), mod);
    for (std::size_t j = 0; j < n; ++j) reduced[i][j] = ring::mod(b[i][j], mod);
  }
  Mat out;
  for (std::size_t k = 0; k < count; ++k) {
    Vec v;
    v.reserve(n * n);
    for (const auto& row : power) v.insert(v.end(), row.begin(), row.end());
    out.push_back(std::move(v));
    power = mat_mul_mod(power, reduced, mod);
  }
  return out;
}

// f mod (chi, m) with chi monic of degree n; result has exactly n entries.
inline Vec reduce_mod_monic(Vec f, const Vec& chi, const BigInt& mod) {
  const std::size_t n = chi.size() - 1;
  for (std::size_t k = f.size(); k-- > n;) {
    const BigInt lead = ring::mod(f[k], mod);
    if (ring::is_zero(lead)) continue;
    for (std::size_t j = 0; j <= n; ++j) f[k - n + j] -= lead * chi[j];
  }
  f.resize(n);
  for (auto& x : f) x = ring::mod(x, mod);
  return f;
}

}  // namespace detail

inline Mat to_mat(std::size_t n, const std::vector<BigInt>& row_major) {
  Mat m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = row_major[i * n + j];
  }
  return m;
}

/// Smallest m with B^m in the Z/p^t-span of I, B, ..., B^{m-1}: the degree of
/// a monic polynomial of minimal degree in N_{(p^t)}(B).
inline unsigned oracle_min_monic_degree(const Mat& b, const BigInt& p, unsigned t) {
  if (t == 0) throw std::invalid_argument("oracle_min_monic_degree: t must be positive");
  const BigInt mod = ring::pow(p, t);
  const Mat powers = detail::power_vectors(b, b.size() + 1, mod);
  for (std::size_t m = 1; m <= b.size(); ++m) {
    Mat lower(powers.begin(), powers.begin() + static_cast<std::ptrdiff_t>(m));
    if (in_span(lower, powers[m], p, t)) return static_cast<unsigned>(m);
  }
  throw std::logic_error("oracle_min_monic_degree: Cayley-Hamilton bound exceeded");
}

/// Canonical image of the ideal (generators, chi_B, p^t) inside
/// (Z/p^t)[X]/(chi_B), which is free of rank n.
inline HowellBasis oracle_ideal_module(const std::vector<Vec>& generators, const Mat& b, const BigInt& p, unsigned t) {
  const BigInt mod = ring::pow(p, t);
  const Vec chi = characteristic_polynomial(b);
  const std::size_t n = b.size();
  ResidueMatrix rm{p, t, {}, n};
  auto add_multiples = [&](const Vec& g) {
    Vec cur = detail::reduce_mod_monic(g, chi, mod);
    for (std::size_t i = 0; i < n; ++i) {
      rm.rows.push_back(cur);
      Vec shifted(n + 1);
      for (std::size_t j = 0; j < n; ++j) shifted[j + 1] = cur[j];
      cur = detail::reduce_mod_monic(std::move(shifted), chi, mod);
    }
  };
  for (const auto& g : generators) add_multiples(g);
  add_multiples(chi);
  add_multiples(Vec{mod});
  return howell_form(rm);
}

/// log_p of |span{ B^k mod p^t : 0 <= k < n }|.
inline unsigned long oracle_module_log_cardinality(const Mat& b, const BigInt& p, unsigned t) {
  const BigInt mod = ring::pow(p, t);
  ResidueMatrix rm{p, t, detail::power_vectors(b, b.size(), mod), b.size() * b.size()};
  return howell_form(rm).log_cardinality();
}

/// f(B) = 0 mod m, by Horner evaluation.
inline bool annihilates_mod(const Vec& f, const Mat& b, const BigInt& m) {
  const std::size_t n = b.size();
  Mat acc(n, Vec(n));
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = detail::mat_mul_mod(acc, b, m);
    for (std::size_t i = 0; i < n; ++i) acc[i][i] = ring::mod(acc[i][i] + f[k], m);
  }
  for (const auto& row : acc) {
    for (const auto& x : row) {
      if (!ring::is_zero(x)) return false;
    }
  }
  return true;
}

}  // namespace pideal::oracle

#endif  // PIDEAL_ORACLE_HPP
