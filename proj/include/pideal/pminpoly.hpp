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

#ifndef PIDEAL_PMINPOLY_HPP
#define PIDEAL_PMINPOLY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lifting.hpp"
#include "matrix.hpp"
#include "poly.hpp"

namespace pideal {

/// Monic h in N_{(p^t)}(B) with deg h <= deg f, for f in N_{(p^t)}(B) outside
/// pZ[X], given a (p^{t-1})-minimal polynomial nu_prev.
///
/// Writes f = f1 + p f2, takes r = f2 mod nu_prev and u*lc(f1) + v*p = 1, and
/// returns u (f1 + p r) + v X^{deg f1 - deg nu_prev} p nu_prev.
inline IntPoly find_monic(const IntPoly& f, const IntPoly& nu_prev, const Prime& p, unsigned t) {
  if (t == 0) throw precondition_error("find_monic: t must be positive");
  if (!nu_prev.is_monic()) throw precondition_error("find_monic: nu_prev must be monic");
  auto [f1, f2] = split_p_part(f, p);
  if (f1.is_zero()) throw precondition_error("find_monic: f lies in pZ[X]");
  if (f1.degree() < nu_prev.degree()) {
    throw precondition_error("find_monic: deg(f1) < deg(nu_prev); f is not in the (p^t)-ideal");
  }
  const IntPoly r = poly_rem(f2, nu_prev);
  auto [u, v] = bezout_unit(f1.lc(), p);
  const auto shift = static_cast<std::size_t>(f1.degree() - nu_prev.degree());
  IntPoly h = (f1 + r * p.value()) * u + nu_prev.shifted(shift) * BigInt(v * p.value());
  if (!h.is_monic() || h.degree() > f.degree()) {
    throw precondition_error("find_monic: f is not in the (p^t)-ideal");
  }
  return h;
}

/// Monic h_1, ..., h_s of strictly decreasing degree with
/// f in (h_1, ..., h_s) + p N_{(p^{t-1})}(B). Intermediate polynomials are
/// kept reduced modulo p^t.
inline std::vector<IntPoly> replace_by_monics(const IntPoly& f, const IntPoly& nu_prev, const Prime& p, unsigned t) {
  const BigInt pt = p.pow(t);
  std::vector<IntPoly> out;
  IntPoly cur = f.reduced(pt);
  if (all_divisible(cur, p.value())) throw precondition_error("replace_by_monics: f lies in pZ[X]");
  while (!all_divisible(cur, p.value())) {
    IntPoly h = find_monic(cur, nu_prev, p, t).reduced_below_leading(pt);
    cur = poly_rem(cur, h).reduced(pt);
    out.push_back(std::move(h));
  }
  return out;
}

/// Loop measure (min degree, set size) observed by compute_nu; strictly
/// decreasing lexicographically from one entry to the next.
struct ComputeNuTrace {
  std::vector<std::pair<int, std::size_t>> measures;
};

namespace detail {

// Coefficients are already in [0, p^t) below a leading one, so plain
// lexicographic comparison is the reduced comparison.
inline bool nu_order_less(const IntPoly& a, const IntPoly& b) { return canonical_less(a, b); }

class MonicSet {
 public:
  void insert(IntPoly f) {
    auto it = std::lower_bound(items_.begin(), items_.end(), f, nu_order_less);
    if (it != items_.end() && *it == f) return;
    items_.insert(it, std::move(f));
  }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const IntPoly& minimal() const { return items_.front(); }

  // Highest degree first; among equal degrees the smallest coefficient
  // sequence first. Never returns `avoid`.
  IntPoly take_next(const IntPoly& avoid) {
    for (auto it = items_.end(); it != items_.begin();) {
      --it;
      auto start = it;
      while (start != items_.begin() && std::prev(start)->degree() == it->degree()) --start;
      for (auto j = start; j != std::next(it); ++j) {
        if (*j == avoid) continue;
        IntPoly out = std::move(*j);
        items_.erase(j);
        return out;
      }
      it = start;
    }
    throw std::logic_error("MonicSet::take_next on a singleton");
  }

 private:
  std::vector<IntPoly> items_;
};

}  // namespace detail

/// A (p^t)-minimal polynomial from a set with the (p^t)-generating property
/// and a (p^{t-1})-minimal nu_prev. The result is monic with non-leading
/// coefficients in [0, p^t).
inline IntPoly compute_nu(const std::vector<IntPoly>& generating, const IntPoly& nu_prev, const Prime& p, unsigned t,
                          ComputeNuTrace* trace = nullptr) {
  const BigInt pt = p.pow(t);
  detail::MonicSet set;
  for (const auto& f : generating) {
    if (all_divisible(f, p.value())) continue;
    if (f.is_monic()) {
      set.insert(f.reduced_below_leading(pt));
    } else {
      for (auto& h : replace_by_monics(f, nu_prev, p, t)) set.insert(std::move(h));
    }
  }
  if (set.empty()) throw precondition_error("compute_nu: generating set lies in pZ[X]");

  IntPoly g = set.minimal();
  if (trace) trace->measures.emplace_back(g.degree(), set.size());
  while (set.size() > 1) {
    IntPoly f = set.take_next(g);
    IntPoly r = poly_rem(f, g).reduced(pt);
    if (!all_divisible(r, p.value())) {
      std::vector<IntPoly> hs = replace_by_monics(r, nu_prev, p, t);
      g = hs.back();
      for (auto& h : hs) set.insert(std::move(h));
    }
    if (trace) trace->measures.emplace_back(set.minimal().degree(), set.size());
  }
  return g;
}

/// Per-level record of the driver loop.
struct LevelRecord {
  unsigned t = 0;
  IntPolyMatrix lifted;  ///< F returned by the lifting step
  IntPoly nu;            ///< the (p^t)-minimal polynomial found at this level
  ComputeNuTrace nu_trace;
};

/// S_p, the nu_s for s in S_p, and mu_B.
struct PMinimalResult {
  Prime p;
  std::vector<unsigned> S;  ///< strictly increasing
  std::map<unsigned, IntPoly> nu;
  IntPoly mu;
  IntPoly chi;
  std::vector<LevelRecord> levels;

  /// b(t) = min{ s in S : s >= t }, empty when no such s exists.
  std::optional<unsigned> b_of(unsigned t) const {
    auto it = std::lower_bound(S.begin(), S.end(), t);
    if (it == S.end()) return std::nullopt;
    return *it;
  }

  /// A (p^t)-minimal polynomial for any t >= 0.
  IntPoly nu_at(unsigned t) const {
    if (t == 0) return IntPoly::constant(1);
    auto b = b_of(t);
    return b ? nu.at(*b) : mu;
  }
};

/// Computes S_p and the (p^s)-minimal polynomials nu_s of B.
///
/// Level t lifts the generators of M_{t-1}(A), extracts nu_t from the first
/// row and stops once deg nu_t reaches deg mu_B. Otherwise the column
/// (nu_t; g) with nu_t b_i = g_i chi_B + r_i joins p G; when deg nu_t equals
/// deg nu_{t-1} the column of level t-1 is dropped first and t-1 leaves S.
inline PMinimalResult p_minimal_polynomials(const McCoySystem& sys) {
  const Prime& p = sys.p;
  PMinimalResult out{p, {}, {}, sys.mu, sys.chi, {}};
  LiftState state{0, IntPolyMatrix::empty_columns(sys.cols())};
  IntPoly nu_prev = IntPoly::constant(1);

  for (unsigned t = 1;; ++t) {
    const BigInt pt = p.pow(t);
    LevelRecord level{t, lift_step(sys, state), {}, {}};
    level.nu = compute_nu(first_row(level.lifted), nu_prev, p, t, &level.nu_trace);
    const IntPoly nu_t = level.nu;
    out.levels.push_back(std::move(level));
    if (nu_t.degree() >= sys.mu.degree()) break;

    IntPolyMatrix column(sys.cols(), 1, IntPoly{});
    column(0, 0) = nu_t;
    for (std::size_t i = 0; i < sys.b.size(); ++i) {
      column(i + 1, 0) = poly_divmod(nu_t * sys.b[i], sys.chi).first.reduced(pt);
    }

    IntPolyMatrix g = state.g;
    if (nu_t.degree() == nu_prev.degree()) {
      g = g.column_block(0, g.cols() - 1);
      out.S.pop_back();
      out.nu.erase(t - 1);
    }
    g = g.map([&](const IntPoly& x) { return (x * p.value()).reduced(pt); }).hconcat(column);
    state = {t, std::move(g)};
    out.S.push_back(t);
    out.nu.emplace(t, nu_t);
    nu_prev = nu_t;
  }
  return out;
}

inline PMinimalResult p_minimal_polynomials(const IntMatrix& b, const Prime& p) {
  return p_minimal_polynomials(build_mccoy_system(b, p));
}

}  // namespace pideal

#endif  // PIDEAL_PMINPOLY_HPP
