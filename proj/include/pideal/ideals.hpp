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

#ifndef PIDEAL_IDEALS_HPP
#define PIDEAL_IDEALS_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "factor.hpp"
#include "frobenius.hpp"
#include "matrix.hpp"
#include "pminpoly.hpp"

namespace pideal {

/// Generators of N_{(modulus)}(B) = { f in Z[X] : f(B) = 0 mod modulus }.
struct IdealGenerators {
  BigInt modulus;
  std::vector<IntPoly> generators;  ///< sorted by degree, then coefficients; no duplicates
};

/// N_{(p^t)}(B) = mu_B Z[X] + p^t Z[X] + sum_{s in S, s <= b(t)} p^{max(0, t-s)} nu_s Z[X],
/// where mu_B is dropped when t <= max S.
inline IdealGenerators null_ideal_prime_power(const PMinimalResult& r, unsigned t) {
  if (t == 0) return {BigInt(1), {IntPoly::constant(1)}};
  const BigInt pt = r.p.pow(t);
  IdealGenerators out{pt, {IntPoly::constant(pt)}};
  const auto b = r.b_of(t);
  for (unsigned s : r.S) {
    if (b && s > *b) break;
    const unsigned e = t > s ? t - s : 0;
    out.generators.push_back(r.nu.at(s) * r.p.pow(e));
  }
  if (!b) out.generators.push_back(r.mu);
  canonicalize_list(out.generators);
  return out;
}

inline IdealGenerators null_ideal_prime_power(const IntMatrix& b, const Prime& p, unsigned t) {
  return null_ideal_prime_power(p_minimal_polynomials(b, p), t);
}

/// N_{(a)}(B) for a >= 0. For a = prod p_i^{t_i} the ideal is
/// sum_i (a / p_i^{t_i}) N_{(p_i^{t_i})}(B); a = 0 gives mu_B Z[X].
inline IdealGenerators null_ideal(const IntMatrix& b, const BigInt& a,
                                  std::uint64_t factor_budget = kDefaultFactorBudget) {
  if (ring::sign(a) < 0) throw std::invalid_argument("null_ideal: modulus must be non-negative");
  if (ring::is_zero(a)) return {BigInt(0), {minimal_polynomial(b)}};
  if (a == 1) return {BigInt(1), {IntPoly::constant(1)}};
  Factorization fac = factorize(a, factor_budget);
  if (!fac.complete()) throw factorization_error(fac.unfactored);
  IdealGenerators out{a, {}};
  for (const auto& [prime, e] : fac.primes) {
    const Prime p(prime);
    const BigInt cofactor = ring::exact_div(a, p.pow(e));
    for (const auto& g : null_ideal_prime_power(b, p, e).generators) out.generators.push_back(g * cofactor);
  }
  canonicalize_list(out.generators);
  return out;
}

/// Primes outside of which every (p^t)-ideal is mu_B Z[X] + p^t Z[X]: the
/// prime divisors of det(T) for the Frobenius transform T.
struct CandidatePrimes {
  std::vector<Prime> primes;       ///< ascending
  BigInt det_transform;
  std::vector<BigInt> unfactored;  ///< nonempty when the factoring budget ran out
  FrobeniusForm frobenius;

  bool complete() const noexcept { return unfactored.empty(); }
};

inline CandidatePrimes candidate_primes(const IntMatrix& b, std::uint64_t factor_budget = kDefaultFactorBudget) {
  FrobeniusForm ff = frobenius_form_with_transform(b);
  CandidatePrimes out{{}, ff.det_transform, {}, ff};
  Factorization fac = factorize(ff.det_transform, factor_budget);
  for (const auto& [q, e] : fac.primes) out.primes.emplace_back(q);
  out.unfactored = std::move(fac.unfactored);
  return out;
}

/// Int(B, M_n(Z)) = mu_B Q[X] + Z[X] + sum_p sum_{s in S_p} (1/p^s) nu_{(p,s)} Z[X].
struct IVPGenerators {
  IntPoly mu;
  std::vector<std::pair<IntPoly, BigInt>> fractional;  ///< (nu, p^s), ordered by p then s
  std::vector<Prime> primes;                          ///< primes that were examined
};

/// Per-prime work runs concurrently; results are assembled in prime order.
/// `primes` overrides the candidate-prime computation when given.
inline IVPGenerators integer_valued_polynomials(const IntMatrix& b,
                                                std::optional<std::vector<Prime>> primes = std::nullopt,
                                                std::uint64_t factor_budget = kDefaultFactorBudget) {
  if (!primes) {
    CandidatePrimes cand = candidate_primes(b, factor_budget);
    if (!cand.complete()) throw factorization_error(cand.unfactored);
    primes = std::move(cand.primes);
  }
  std::sort(primes->begin(), primes->end());
  primes->erase(std::unique(primes->begin(), primes->end()), primes->end());

  std::vector<std::future<PMinimalResult>> jobs;
  jobs.reserve(primes->size());
  for (const auto& p : *primes) {
    jobs.push_back(std::async(std::launch::async, [&b, p] { return p_minimal_polynomials(b, p); }));
  }
  IVPGenerators out{minimal_polynomial(b), {}, *primes};
  for (auto& job : jobs) {
    PMinimalResult r = job.get();
    for (unsigned s : r.S) out.fractional.emplace_back(r.nu.at(s), r.p.pow(s));
  }
  return out;
}

/// (Z/p^t)[B] = (Z/p^t)^d (+) sum_{s in S, s <= t} (Z/p^{t-s})^{d_s}.
struct ModuleDecomposition {
  BigInt p;
  unsigned t = 0;
  unsigned d = 0;
  std::map<unsigned, unsigned> parts;  ///< s -> d_s

  /// log_p of the module's cardinality.
  unsigned long exponent() const {
    unsigned long e = static_cast<unsigned long>(t) * d;
    for (const auto& [s, ds] : parts) e += static_cast<unsigned long>(t - s) * ds;
    return e;
  }
};

/// Orders {nu_s} and mu_B by degree; d is the smallest degree and d_s the
/// degree gap from nu_s to its successor.
inline ModuleDecomposition module_decomposition(const PMinimalResult& r, unsigned t) {
  ModuleDecomposition out{r.p.value(), t, 0, {}};
  if (r.S.empty()) {
    out.d = static_cast<unsigned>(r.mu.degree());
    return out;
  }
  out.d = static_cast<unsigned>(r.nu.at(r.S.front()).degree());
  for (std::size_t i = 0; i < r.S.size(); ++i) {
    const unsigned s = r.S[i];
    const int next = i + 1 < r.S.size() ? r.nu.at(r.S[i + 1]).degree() : r.mu.degree();
    if (s <= t) out.parts[s] = static_cast<unsigned>(next - r.nu.at(s).degree());
  }
  return out;
}

inline ModuleDecomposition module_decomposition(const IntMatrix& b, const Prime& p, unsigned t) {
  return module_decomposition(p_minimal_polynomials(b, p), t);
}

}  // namespace pideal

#endif  // PIDEAL_IDEALS_HPP
