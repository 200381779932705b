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

#ifndef PIDEAL_IO_HPP
#define PIDEAL_IO_HPP

// Text and JSON formats. Big integers are always decimal strings in JSON;
// polynomials are ascending coefficient arrays.

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ideals.hpp"
#include "matrix.hpp"
#include "pminpoly.hpp"
#include "poly.hpp"

namespace pideal::io {

using nlohmann::json;

/// Malformed input text.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Serialized form used by the CLI; stable under parse and re-dump.
inline std::string dump(const json& j) { return j.dump(2); }

inline json to_json(const BigInt& x) { return ring::to_string(x); }

inline json to_json(const IntPoly& f) {
  json arr = json::array();
  for (const auto& c : f.coeffs()) arr.push_back(ring::to_string(c));
  return arr;
}

inline BigInt bigint_from_json(const json& j) {
  if (j.is_string()) return ring::from_string(j.get<std::string>());
  if (j.is_number_integer()) return BigInt(j.dump());
  if (j.is_number_float()) {
    throw parse_error("non-integral or out-of-range JSON number " + j.dump() +
                      "; write integers wider than 64 bits as decimal strings");
  }
  throw parse_error("expected an integer or decimal string, got " + j.dump());
}

inline IntPoly intpoly_from_json(const json& j) {
  if (!j.is_array()) throw parse_error("polynomial must be a coefficient array");
  std::vector<BigInt> c;
  for (const auto& x : j) c.push_back(bigint_from_json(x));
  return IntPoly(std::move(c));
}

inline json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ring::to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

namespace detail {

inline IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) throw parse_error("matrix has no rows");
  const std::size_t n = rows.size();
  IntMatrix m(n, n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw parse_error("matrix must be square: row " + std::to_string(i + 1) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline std::vector<std::vector<BigInt>> rows_from_json(const json& entries) {
  if (!entries.is_array()) throw parse_error("\"entries\" must be an array of rows");
  std::vector<std::vector<BigInt>> rows;
  for (const auto& row : entries) {
    if (!row.is_array()) throw parse_error("matrix rows must be arrays");
    std::vector<BigInt> r;
    for (const auto& x : row) r.push_back(bigint_from_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace detail

/// Square integer matrix from either format, detected by the first
/// non-space byte: '{' for {"n": .., "entries": [[..]]}, '[' for a bare array
/// of rows, anything else for whitespace-separated integers with one row per
/// line (';' also ends a row).
inline IntMatrix parse_matrix(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(), [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) throw parse_error("empty matrix input");
  if (*first == '{' || *first == '[') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::parse_error& e) {
      throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (j.is_array()) return detail::from_rows(detail::rows_from_json(j));
    if (!j.contains("entries")) throw parse_error("matrix JSON needs an \"entries\" field");
    IntMatrix m = detail::from_rows(detail::rows_from_json(j["entries"]));
    if (j.contains("n")) {
      if (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(m.rows())) {
        throw parse_error("\"n\" does not match the number of rows");
      }
    }
    return m;
  }
  std::vector<std::vector<BigInt>> rows;
  std::string line;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ';', '\n');
  std::istringstream in(normalized);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<BigInt> row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.push_back(ring::from_string(tok));
      } catch (const std::invalid_argument&) {
        throw parse_error("not an integer: '" + tok + "'");
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return detail::from_rows(rows);
}

inline std::string matrix_text(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += ring::to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

// ---- results -------------------------------------------------------------

inline json to_json(const PMinimalResult& r) {
  json nu = json::object();
  for (const auto& [s, f] : r.nu) nu[std::to_string(s)] = to_json(f);
  return json{{"p", ring::to_string(r.p.value())}, {"S", r.S}, {"nu", std::move(nu)}, {"mu", to_json(r.mu)}};
}

inline std::string set_text(const std::vector<unsigned>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + "}";
}

inline std::string to_text(const PMinimalResult& r) {
  std::string out = "p = " + ring::to_string(r.p.value()) + "\n";
  out += "mu_B = " + r.mu.to_text() + "\n";
  out += "S = " + set_text(r.S) + "\n";
  for (const auto& [s, f] : r.nu) out += "nu_" + std::to_string(s) + " = " + f.to_text() + "\n";
  return out;
}

inline json to_json(const IdealGenerators& g) {
  json gens = json::array();
  for (const auto& f : g.generators) gens.push_back(to_json(f));
  return json{{"modulus", ring::to_string(g.modulus)}, {"generators", std::move(gens)}};
}

inline std::string to_text(const IdealGenerators& g) {
  std::string out = "modulus = " + ring::to_string(g.modulus) + "\n";
  if (ring::is_zero(g.modulus) && g.generators.size() == 1) {
    return out + "mu_B = " + g.generators.front().to_text() + "\n";
  }
  for (const auto& f : g.generators) out += "  " + f.to_text() + "\n";
  return out;
}

inline json to_json(const IVPGenerators& v) {
  json frac = json::array();
  for (const auto& [f, d] : v.fractional) frac.push_back(json{{"nu", to_json(f)}, {"denominator", to_json(d)}});
  json primes = json::array();
  for (const auto& p : v.primes) primes.push_back(to_json(p.value()));
  return json{{"mu", to_json(v.mu)}, {"primes", std::move(primes)}, {"fractional", std::move(frac)}};
}

inline std::string to_text(const IVPGenerators& v) {
  std::string out = "mu_B = " + v.mu.to_text() + "\n";
  out += "primes examined = {";
  for (std::size_t i = 0; i < v.primes.size(); ++i) out += (i ? ", " : "") + ring::to_string(v.primes[i].value());
  out += "}\n";
  if (v.fractional.empty()) out += "Int(B) = mu_B Q[X] + Z[X]\n";
  for (const auto& [f, d] : v.fractional) out += "(" + f.to_text() + ") / " + ring::to_string(d) + "\n";
  return out;
}

inline json to_json(const CandidatePrimes& c) {
  json primes = json::array();
  for (const auto& p : c.primes) primes.push_back(to_json(p.value()));
  json unf = json::array();
  for (const auto& u : c.unfactored) unf.push_back(to_json(u));
  return json{{"primes", std::move(primes)},
              {"det_transform", to_json(c.det_transform)},
              {"complete", c.complete()},
              {"unfactored", std::move(unf)},
              {"form", to_json(c.frobenius.form)},
              {"transform", to_json(c.frobenius.transform)}};
}

inline std::string to_text(const CandidatePrimes& c) {
  std::string out = "rational canonical form C =\n" + matrix_text(c.frobenius.form);
  out += "transform T (T*B = C*T) =\n" + matrix_text(c.frobenius.transform);
  out += "det(T) = " + ring::to_string(c.det_transform) + "\n";
  out += "candidate primes = {";
  for (std::size_t i = 0; i < c.primes.size(); ++i) out += (i ? ", " : "") + ring::to_string(c.primes[i].value());
  out += "}\n";
  if (!c.complete()) {
    out += "INCOMPLETE: unfactored cofactors:";
    for (const auto& u : c.unfactored) out += " " + ring::to_string(u);
    out += "\n";
  }
  return out;
}

inline json to_json(const ModuleDecomposition& m) {
  json parts = json::object();
  for (const auto& [s, ds] : m.parts) parts[std::to_string(s)] = ds;
  return json{{"p", to_json(m.p)}, {"t", m.t}, {"d", m.d}, {"parts", std::move(parts)},
              {"log_cardinality", m.exponent()}};
}

inline std::string to_text(const ModuleDecomposition& m) {
  const std::string p = ring::to_string(m.p);
  std::string out = "(Z/" + p + "^" + std::to_string(m.t) + ")[B] = (Z/" + p + "^" + std::to_string(m.t) + ")^" +
                    std::to_string(m.d);
  for (const auto& [s, ds] : m.parts) {
    out += " + (Z/" + p + "^" + std::to_string(m.t - s) + ")^" + std::to_string(ds);
  }
  out += "\nlog_" + p + " |(Z/" + p + "^" + std::to_string(m.t) + ")[B]| = " + std::to_string(m.exponent()) + "\n";
  return out;
}

/// Polynomial text for a lifted block, one column per line.
inline std::string block_text(const IntPolyMatrix& f) {
  std::string out;
  for (std::size_t j = 0; j < f.cols(); ++j) {
    out += "  [";
    for (std::size_t i = 0; i < f.rows(); ++i) out += (i ? ", " : "") + f(i, j).to_text();
    out += "]\n";
  }
  return out;
}

}  // namespace pideal::io

#endif  // PIDEAL_IO_HPP
