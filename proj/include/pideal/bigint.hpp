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

#ifndef PIDEAL_BIGINT_HPP
#define PIDEAL_BIGINT_HPP

// Ring layer for the coefficient domain. Everything above this header talks
// to Z only through the functions declared here, so swapping the base PID
// touches this file and nothing else.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace pideal {

using BigInt = mpz_class;

/// Raised when a documented precondition of an algorithm is violated.
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace ring {

inline BigInt from_string(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  BigInt out;
  if (s.empty() || out.set_str(s, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
  }
  return out;
}

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

inline int sign(const BigInt& x) { return sgn(x); }

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }

inline bool divides(const BigInt& d, const BigInt& x) {
  if (is_zero(d)) return is_zero(x);
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Representative of x modulo m in [0, |m|).
inline BigInt mod(const BigInt& x, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// x / d, which must be exact.
inline BigInt exact_div(const BigInt& x, const BigInt& d) {
  if (!divides(d, x)) {
    throw precondition_error("inexact division " + to_string(x) + " / " + to_string(d));
  }
  BigInt q;
  mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

/// (g, u, v) with u*a + v*b = g = gcd(a, b).
inline std::array<BigInt, 3> gcdext(const BigInt& a, const BigInt& b) {
  BigInt g, u, v;
  mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return {g, u, v};
}

/// Inverse of a modulo m; a must be a unit.
inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw precondition_error(to_string(a) + " is not invertible modulo " + to_string(m));
  }
  return r;
}

inline BigInt powmod(const BigInt& base, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Largest k with p^k | x (x != 0).
inline unsigned long valuation(const BigInt& x, const BigInt& p) {
  if (is_zero(x)) throw precondition_error("valuation of zero");
  BigInt rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

/// Deterministic Miller-Rabin. The first thirteen prime bases are a proof of
/// primality below 3.3e24; above that bound the test is strong-probable-prime
/// with GMP's BPSW-backed check layered on top.
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (divides(BigInt(b), n)) return false;
  }
  BigInt d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  const BigInt n_minus_1 = n - 1;
  for (unsigned b : kBases) {
    BigInt x = powmod(BigInt(b), d, n);
    if (x == 1 || x == n_minus_1) continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      x = mod(x * x, n);
      if (x == n_minus_1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  static const BigInt kProvenBound("3317044064679887385961981");
  if (n < kProvenBound) return true;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

}  // namespace ring

/// A positive rational prime.
class Prime {
 public:
  explicit Prime(BigInt value) : value_(std::move(value)) {
    if (!ring::is_prime(value_)) {
      throw std::invalid_argument(ring::to_string(value_) + " is not prime");
    }
  }
  explicit Prime(long value) : Prime(BigInt(value)) {}

  const BigInt& value() const noexcept { return value_; }

  /// p^e as a BigInt.
  BigInt pow(unsigned long e) const { return ring::pow(value_, e); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.value_ == b.value_; }
  friend bool operator<(const Prime& a, const Prime& b) { return a.value_ < b.value_; }

 private:
  BigInt value_;
};

/// (u, v) with u*a + v*p = 1; requires p not dividing a.
inline std::pair<BigInt, BigInt> bezout_unit(const BigInt& a, const Prime& p) {
  if (ring::divides(p.value(), a)) {
    throw precondition_error("bezout_unit: " + ring::to_string(p.value()) + " divides " +
                             ring::to_string(a));
  }
  auto [g, u, v] = ring::gcdext(a, p.value());
  return {u, v};
}

}  // namespace pideal

#endif  // PIDEAL_BIGINT_HPP
