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

#ifndef PIDEAL_FACTOR_HPP
#define PIDEAL_FACTOR_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"

namespace pideal {

/// Pollard-rho iterations allowed for one factorization.
inline constexpr std::uint64_t kDefaultFactorBudget = 2'000'000;

struct Factorization {
  std::map<BigInt, unsigned> primes;
  std::vector<BigInt> unfactored;  ///< composite cofactors the budget could not split

  bool complete() const noexcept { return unfactored.empty(); }
};

class factorization_error : public std::runtime_error {
 public:
  explicit factorization_error(std::vector<BigInt> unfactored)
      : std::runtime_error(describe(unfactored)), unfactored_(std::move(unfactored)) {}
  const std::vector<BigInt>& unfactored() const noexcept { return unfactored_; }

 private:
  static std::string describe(const std::vector<BigInt>& u) {
    std::string s = "factoring budget exhausted; unfactored:";
    for (const auto& x : u) s += " " + ring::to_string(x);
    return s;
  }
  std::vector<BigInt> unfactored_;
};

namespace detail {

// Brent's variant of Pollard rho with batched gcds. Returns a nontrivial
// factor or 0 once `budget` is spent.
inline BigInt pollard_brent(const BigInt& n, std::uint64_t& budget) {
  for (unsigned long c = 1; budget > 0; ++c) {
    BigInt y = 2, x, ys, q = 1, g = 1;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    auto step = [&](const BigInt& v) { return ring::mod(BigInt(v * v + c), n); };
    while (g == 1 && budget > 0) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1 && budget > 0) {
        ys = y;
        const std::uint64_t lim = std::min(kBatch, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = step(y);
          q = ring::mod(BigInt(q * abs(BigInt(x - y))), n);
        }
        budget = budget > lim ? budget - lim : 0;
        g = ring::gcd(q, n);
        k += lim;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = ring::gcd(abs(BigInt(x - ys)), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  return 0;
}

inline void split_into(const BigInt& n, Factorization& out, std::uint64_t& budget) {
  if (n == 1) return;
  if (ring::is_prime(n)) {
    ++out.primes[n];
    return;
  }
  BigInt root;
  for (unsigned long k = 2; mpz_sizeinbase(n.get_mpz_t(), 2) / k >= 1; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      Factorization sub;
      split_into(root, sub, budget);
      for (auto& [p, e] : sub.primes) out.primes[p] += e * static_cast<unsigned>(k);
      for (auto& u : sub.unfactored) out.unfactored.push_back(ring::pow(u, k));
      return;
    }
  }
  BigInt d = pollard_brent(n, budget);
  if (d == 0) {
    out.unfactored.push_back(n);
    return;
  }
  split_into(d, out, budget);
  split_into(ring::exact_div(n, d), out, budget);
}

}  // namespace detail

/// Prime factorization of |n| (n != 0). Small primes are removed by trial
/// division, the rest by Pollard-Brent within `budget` iterations. Cofactors
/// that could not be split are listed, never guessed.
inline Factorization factorize(const BigInt& n, std::uint64_t budget = kDefaultFactorBudget) {
  if (ring::is_zero(n)) throw std::invalid_argument("factorize: zero has no factorization");
  Factorization out;
  BigInt m = abs(n);
  for (unsigned long q = 2; q < 10000 && m > 1; ++q) {
    if (q > 2 && q % 2 == 0) continue;
    while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      ++out.primes[BigInt(q)];
      m /= q;
    }
  }
  detail::split_into(m, out, budget);
  return out;
}

}  // namespace pideal

#endif  // PIDEAL_FACTOR_HPP
