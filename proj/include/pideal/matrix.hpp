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

#ifndef PIDEAL_MATRIX_HPP
#define PIDEAL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "poly.hpp"

namespace pideal {

/// Dense row-major matrix. Entries carry their own ring context (ModPoly
/// needs its field), so every constructor takes an explicit fill value.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }

  /// Columns [first, first + count).
  Matrix column_block(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw std::out_of_range("column_block");
    Matrix out;
    out.rows_ = rows_;
    out.cols_ = count;
    out.a_.reserve(rows_ * count);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < count; ++j) out.a_.push_back((*this)(i, first + j));
    }
    return out;
  }

  /// [this | other]; row counts must agree.
  Matrix hconcat(const Matrix& other) const {
    if (cols_ == 0) return other;
    if (other.cols_ == 0) return *this;
    if (rows_ != other.rows_) throw std::invalid_argument("hconcat: row mismatch");
    Matrix out;
    out.rows_ = rows_;
    out.cols_ = cols_ + other.cols_;
    out.a_.reserve(out.rows_ * out.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out.a_.push_back((*this)(i, j));
      for (std::size_t j = 0; j < other.cols_; ++j) out.a_.push_back(other(i, j));
    }
    return out;
  }

  /// A rows x 0 matrix; used as the empty generator block.
  static Matrix empty_columns(std::size_t rows) {
    Matrix out;
    out.rows_ = rows;
    return out;
  }

  template <class F>
  Matrix map(F&& f) const {
    Matrix out = *this;
    for (auto& x : out.a_) x = f(x);
    return out;
  }

  template <class U, class F>
  Matrix<U> transform(F&& f, const U& fill) const {
    Matrix<U> out(rows_, cols_, fill);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

/// Product with an explicit zero (the ring context of the result).
template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

using IntMatrix = Matrix<BigInt>;
using IntPolyMatrix = Matrix<IntPoly>;
using ModPolyMatrix = Matrix<ModPoly>;

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  if (r == 0 || c == 0) throw std::invalid_argument("matrix dimensions must be positive");
  IntMatrix m(r, c, BigInt(0));
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix rows");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b, BigInt(0)); }

inline IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("dimension mismatch");
  IntMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
  }
  return out;
}

inline bool is_zero_matrix(const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!ring::is_zero(m(i, j))) return false;
    }
  }
  return true;
}

/// f(B) by Horner's scheme.
inline IntMatrix evaluate(const IntPoly& f, const IntMatrix& b) {
  if (!b.is_square()) throw std::invalid_argument("evaluate: matrix must be square");
  const std::size_t n = b.rows();
  IntMatrix acc(n, n, BigInt(0));
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = acc * b;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += f.coeffs()[k];
  }
  return acc;
}

/// f(B) mod m, entries in [0, m).
inline IntMatrix evaluate_mod(const IntPoly& f, const IntMatrix& b, const BigInt& m) {
  const std::size_t n = b.rows();
  IntMatrix bm = b.map([&](const BigInt& x) { return ring::mod(x, m); });
  IntMatrix acc(n, n, BigInt(0));
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = (acc * bm).map([&](const BigInt& x) { return ring::mod(x, m); });
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = ring::mod(acc(i, i) + f.coeffs()[k], m);
  }
  return acc;
}

/// Characteristic polynomial det(XI - B) and adj(XI - B).
struct CharAdjugate {
  IntPoly chi;
  IntPolyMatrix adj;
};

/// Faddeev-LeVerrier: with N_0 = I and N_k = B N_{k-1} + c_{n-k} I,
/// adj(XI - B) = sum_k N_k X^{n-1-k} and c_{n-k} = -tr(B N_{k-1}) / k exactly.
inline CharAdjugate char_and_adjugate(const IntMatrix& b) {
  if (!b.is_square() || b.rows() == 0) throw std::invalid_argument("char_and_adjugate: need a square matrix");
  const std::size_t n = b.rows();
  std::vector<BigInt> chi(n + 1);
  chi[n] = 1;
  std::vector<IntMatrix> terms;  // N_0 .. N_{n-1}
  terms.reserve(n);
  IntMatrix nk = identity_matrix(n);
  for (std::size_t k = 1; k <= n; ++k) {
    terms.push_back(nk);
    IntMatrix bn = b * nk;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += bn(i, i);
    chi[n - k] = -ring::exact_div(trace, BigInt(static_cast<unsigned long>(k)));
    nk = bn;
    for (std::size_t i = 0; i < n; ++i) nk(i, i) += chi[n - k];
  }
  IntPolyMatrix adj(n, n, IntPoly{});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<BigInt> c(n);
      for (std::size_t k = 0; k < n; ++k) c[n - 1 - k] = terms[k](i, j);
      adj(i, j) = IntPoly(std::move(c));
    }
  }
  return {IntPoly(std::move(chi)), std::move(adj)};
}

/// chi_B divided by the monic gcd of the entries of adj(XI - B).
inline IntPoly minimal_polynomial(const CharAdjugate& ca) {
  IntPoly g;
  for (std::size_t i = 0; i < ca.adj.rows(); ++i) {
    for (std::size_t j = 0; j < ca.adj.cols(); ++j) g = primitive_gcd(g, ca.adj(i, j));
  }
  // The entries divide chi over Q and chi is monic, so by Gauss the
  // primitive gcd has leading coefficient one.
  if (!g.is_monic()) throw std::logic_error("minimal_polynomial: adjugate gcd is not monic");
  auto [mu, r] = poly_divmod(ca.chi, g);
  if (!r.is_zero()) throw std::logic_error("minimal_polynomial: gcd does not divide chi");
  return mu;
}

inline IntPoly minimal_polynomial(const IntMatrix& b) { return minimal_polynomial(char_and_adjugate(b)); }

/// Entries of a square IntPoly matrix in row-major order.
inline std::vector<IntPoly> row_major(const IntPolyMatrix& m) {
  std::vector<IntPoly> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  }
  return out;
}

}  // namespace pideal

#endif  // PIDEAL_MATRIX_HPP
