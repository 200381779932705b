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

#ifndef PIDEAL_POLY_HPP
#define PIDEAL_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace pideal {

/// Degree of the zero polynomial.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

namespace detail {

template <class Coeff>
void trim(std::vector<Coeff>& c) {
  while (!c.empty() && ring::is_zero(c.back())) c.pop_back();
}

inline std::string term_text(const std::string& coeff, std::size_t k) {
  if (k == 0) return coeff;
  std::string mono = k == 1 ? "X" : "X^" + std::to_string(k);
  if (coeff == "1") return mono;
  return coeff + "*" + mono;
}

// "X^3 + 3*X^2 - 12*X - 20"; coefficients given ascending.
inline std::string poly_text(std::span<const BigInt> c) {
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (ring::is_zero(c[k])) continue;
    bool negative = ring::sign(c[k]) < 0;
    std::string mag = ring::to_string(abs(c[k]));
    if (out.empty()) {
      out = (negative ? "-" : "") + term_text(mag, k);
    } else {
      out += negative ? " - " : " + ";
      out += term_text(mag, k);
    }
  }
  return out;
}

}  // namespace detail

/// Dense univariate polynomial over Z, coefficients in ascending degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { detail::trim(c_); }
  IntPoly(std::initializer_list<BigInt> coeffs) : c_(coeffs) { detail::trim(c_); }

  static IntPoly constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }
  static IntPoly monomial(BigInt c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPoly(std::move(v));
  }
  static IntPoly x() { return monomial(1, 1); }

  int degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Leading coefficient; zero for the zero polynomial.
  BigInt lc() const { return c_.empty() ? BigInt(0) : c_.back(); }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  std::span<const BigInt> coeffs() const noexcept { return c_; }
  std::size_t size() const noexcept { return c_.size(); }

  IntPoly& operator+=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    detail::trim(c_);
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    detail::trim(c_);
    return *this;
  }
  IntPoly& operator*=(const BigInt& s) {
    if (ring::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator-(IntPoly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
  friend IntPoly operator*(const BigInt& s, IntPoly a) { return a *= s; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return IntPoly(std::move(r));
  }
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }

  /// Multiply by X^k.
  IntPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(k, BigInt(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return IntPoly(std::move(r));
  }

  /// Every coefficient replaced by its representative in [0, m).
  IntPoly reduced(const BigInt& m) const {
    std::vector<BigInt> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ring::mod(c_[i], m);
    return IntPoly(std::move(r));
  }

  /// Non-leading coefficients reduced into [0, m); keeps a monic polynomial monic.
  IntPoly reduced_below_leading(const BigInt& m) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(c_);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] = ring::mod(r[i], m);
    return IntPoly(std::move(r));
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
  }

  std::string to_text() const { return detail::poly_text(c_); }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  std::vector<BigInt> c_;
};

/// Canonical output order: degree first, then coefficients from the constant
/// term upwards.
inline bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

/// Sorts with canonical_less and drops duplicates.
inline void canonicalize_list(std::vector<IntPoly>& polys) {
  std::sort(polys.begin(), polys.end(), canonical_less);
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
}

/// f = q*g + r with deg r < deg g; g must be monic.
inline std::pair<IntPoly, IntPoly> poly_divmod(const IntPoly& f, const IntPoly& g) {
  if (!g.is_monic()) throw precondition_error("poly_divmod: divisor must be monic");
  const int dg = g.degree();
  if (f.degree() < dg) return {IntPoly{}, f};
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<BigInt> q(r.size() - static_cast<std::size_t>(dg));
  auto gc = g.coeffs();
  for (std::size_t k = r.size(); k-- > static_cast<std::size_t>(dg);) {
    if (ring::is_zero(r[k])) continue;
    const BigInt lead = r[k];
    const std::size_t shift = k - static_cast<std::size_t>(dg);
    q[shift] = lead;
    for (std::size_t j = 0; j < gc.size(); ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), gc[j].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(dg));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

inline IntPoly poly_rem(const IntPoly& f, const IntPoly& g) { return poly_divmod(f, g).second; }

/// True iff every coefficient of f is divisible by m (f in mZ[X]).
inline bool all_divisible(const IntPoly& f, const BigInt& m) {
  for (const auto& c : f.coeffs()) {
    if (!ring::divides(m, c)) return false;
  }
  return true;
}

/// f / m coefficientwise; must be exact.
inline IntPoly exact_div(const IntPoly& f, const BigInt& m) {
  std::vector<BigInt> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = ring::exact_div(f.coeffs()[i], m);
  return IntPoly(std::move(r));
}

/// f = f1 + p*f2 where no nonzero coefficient of f1 is divisible by p.
inline std::pair<IntPoly, IntPoly> split_p_part(const IntPoly& f, const Prime& p) {
  std::vector<BigInt> f1(f.size()), f2(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const BigInt& c = f.coeffs()[i];
    if (ring::divides(p.value(), c)) {
      f2[i] = ring::exact_div(c, p.value());
    } else {
      f1[i] = c;
    }
  }
  return {IntPoly(std::move(f1)), IntPoly(std::move(f2))};
}

inline BigInt content(const IntPoly& f) {
  BigInt g = 0;
  for (const auto& c : f.coeffs()) g = ring::gcd(g, c);
  return g;
}

/// f divided by its content, with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  BigInt g = content(f);
  if (ring::sign(f.lc()) < 0) g = -g;
  return exact_div(f, g);
}

/// Primitive gcd over Z[X] via primitive pseudo-remainder sequences.
inline IntPoly primitive_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    // pseudo-remainder of a by b
    IntPoly r = a;
    const BigInt lb = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      const BigInt lr = r.lc();
      r = r * lb - b.shifted(shift) * lr;
    }
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

/// Field of residues modulo a prime; shared between ModPoly values.
class PrimeField {
 public:
  explicit PrimeField(Prime p) : p_(std::move(p)) {}
  const Prime& prime() const noexcept { return p_; }
  const BigInt& modulus() const noexcept { return p_.value(); }
  BigInt reduce(const BigInt& x) const { return ring::mod(x, p_.value()); }
  BigInt inverse(const BigInt& x) const { return ring::inverse_mod(x, p_.value()); }

 private:
  Prime p_;
};

using FieldRef = std::shared_ptr<const PrimeField>;

inline FieldRef make_field(const Prime& p) { return std::make_shared<const PrimeField>(p); }

/// Dense univariate polynomial over GF(p); coefficients always in [0, p).
class ModPoly {
 public:
  explicit ModPoly(FieldRef field) : field_(std::move(field)) {}
  ModPoly(FieldRef field, std::vector<BigInt> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& x : c_) x = field_->reduce(x);
    detail::trim(c_);
  }

  static ModPoly constant(FieldRef field, const BigInt& c) { return ModPoly(std::move(field), {c}); }
  static ModPoly monomial(FieldRef field, const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1);
    v[k] = c;
    return ModPoly(std::move(field), std::move(v));
  }

  const FieldRef& field() const noexcept { return field_; }
  const BigInt& modulus() const noexcept { return field_->modulus(); }
  int degree() const noexcept { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  BigInt lc() const { return c_.empty() ? BigInt(0) : c_.back(); }
  BigInt coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }
  std::span<const BigInt> coeffs() const noexcept { return c_; }

  ModPoly& operator+=(const ModPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      c_[i] += o.c_[i];
      if (c_[i] >= modulus()) c_[i] -= modulus();
    }
    detail::trim(c_);
    return *this;
  }
  ModPoly& operator-=(const ModPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      c_[i] -= o.c_[i];
      if (ring::sign(c_[i]) < 0) c_[i] += modulus();
    }
    detail::trim(c_);
    return *this;
  }
  ModPoly& operator*=(const BigInt& s) {
    const BigInt r = field_->reduce(s);
    if (ring::is_zero(r)) {
      c_.clear();
      return *this;
    }
    for (auto& x : c_) x = field_->reduce(x * r);
    return *this;
  }

  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator-(const ModPoly& a) { return ModPoly(a.field_) - a; }
  friend ModPoly operator*(ModPoly a, const BigInt& s) { return a *= s; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    if (a.is_zero() || b.is_zero()) return ModPoly(a.field_);
    std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (ring::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        mpz_addmul(r[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
      }
    }
    return ModPoly(a.field_, std::move(r));
  }
  ModPoly& operator*=(const ModPoly& o) { return *this = *this * o; }

  /// Scaled to leading coefficient one; zero stays zero.
  ModPoly monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * field_->inverse(lc());
  }

  std::string to_text() const { return detail::poly_text(c_); }

  friend bool operator==(const ModPoly& a, const ModPoly& b) {
    return a.modulus() == b.modulus() && a.c_ == b.c_;
  }

 private:
  FieldRef field_;
  std::vector<BigInt> c_;
};

/// Euclidean division over GF(p)[X].
inline std::pair<ModPoly, ModPoly> modpoly_divmod(const ModPoly& f, const ModPoly& g) {
  if (g.is_zero()) throw std::domain_error("modpoly_divmod: division by zero polynomial");
  const auto& field = f.field();
  const int dg = g.degree();
  if (f.degree() < dg) return {ModPoly(field), f};
  const BigInt inv = field->inverse(g.lc());
  std::vector<BigInt> r(f.coeffs().begin(), f.coeffs().end());
  std::vector<BigInt> q(r.size() - static_cast<std::size_t>(dg));
  auto gc = g.coeffs();
  const BigInt& p = field->modulus();
  for (std::size_t k = r.size(); k-- > static_cast<std::size_t>(dg);) {
    r[k] = ring::mod(r[k], p);
    if (ring::is_zero(r[k])) continue;
    const BigInt lead = ring::mod(r[k] * inv, p);
    const std::size_t shift = k - static_cast<std::size_t>(dg);
    q[shift] = lead;
    for (std::size_t j = 0; j < gc.size(); ++j) {
      mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), gc[j].get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(dg));
  return {ModPoly(field, std::move(q)), ModPoly(field, std::move(r))};
}

/// Monic gcd; gcd(0, 0) = 0.
inline ModPoly modpoly_gcd(ModPoly a, ModPoly b) {
  while (!b.is_zero()) {
    ModPoly r = modpoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// (g, s, t) with s*a + t*b = g monic gcd.
inline std::array<ModPoly, 3> modpoly_gcdext(const ModPoly& a, const ModPoly& b) {
  const auto& field = a.field();
  ModPoly r0 = a, r1 = b;
  ModPoly s0 = ModPoly::constant(field, 1), s1(field);
  ModPoly t0(field), t1 = ModPoly::constant(field, 1);
  while (!r1.is_zero()) {
    auto [q, r] = modpoly_divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const BigInt inv = field->inverse(r0.lc());
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Inverse of a nonzero constant.
inline ModPoly modpoly_invert_unit(const ModPoly& u) {
  if (u.is_zero() || !u.is_constant()) {
    throw precondition_error("modpoly_invert_unit: not a nonzero constant");
  }
  return ModPoly::constant(u.field(), u.field()->inverse(u.lc()));
}

inline ModPoly reduce_mod_p(const IntPoly& f, const FieldRef& field) {
  return ModPoly(field, std::vector<BigInt>(f.coeffs().begin(), f.coeffs().end()));
}

inline ModPoly reduce_mod_p(const IntPoly& f, const Prime& p) { return reduce_mod_p(f, make_field(p)); }

/// Lift with representatives in [0, p).
inline IntPoly lift_to_int(const ModPoly& f) {
  return IntPoly(std::vector<BigInt>(f.coeffs().begin(), f.coeffs().end()));
}

}  // namespace pideal

#endif  // PIDEAL_POLY_HPP
