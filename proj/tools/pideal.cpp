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

// pideal: null ideals and (p^s)-minimal polynomials of integer matrices.
//
// Exit codes: 0 success, 1 verify mismatch, 2 bad input, 3 factoring budget
// exhausted.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pideal/io.hpp"
#include "pideal/oracle.hpp"
#include "pideal/pideal.hpp"

namespace {

using namespace pideal;
using io::json;

enum ExitCode : int { kOk = 0, kMismatch = 1, kBadInput = 2, kBudget = 3 };

struct Options {
  std::string matrix;
  std::string p;
  std::string a;
  long t = -1;
  bool json = false;
  bool dump_lift = false;
  std::string primes;
  std::optional<std::uint64_t> factor_budget;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& src) {
  if (src == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::error_code ec;
  if (std::filesystem::is_regular_file(src, ec)) {
    std::ifstream in(src);
    if (!in) throw usage_error("cannot read " + src);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return src;  // inline matrix text
}

BigInt parse_integer(const std::string& s, const char* what) {
  try {
    return ring::from_string(s);
  } catch (const std::invalid_argument&) {
    throw usage_error(std::string(what) + " must be an integer, got '" + s + "'");
  }
}

Prime parse_prime(const std::string& s) {
  const BigInt v = parse_integer(s, "p");
  if (!ring::is_prime(v)) throw usage_error("p must be prime, got " + s);
  return Prime(v);
}

std::uint64_t factor_budget(const Options& o) {
  if (o.factor_budget) return *o.factor_budget;
  if (const char* env = std::getenv("PIDEAL_FACTOR_BUDGET")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::exception&) {
      throw usage_error(std::string("PIDEAL_FACTOR_BUDGET must be a non-negative integer, got '") + env + "'");
    }
  }
  return kDefaultFactorBudget;
}

std::vector<Prime> parse_prime_list(const std::string& list) {
  std::vector<Prime> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(parse_prime(item));
  }
  if (out.empty()) throw usage_error("--primes needs at least one prime");
  return out;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json) {
    std::cout << io::dump(j) << '\n';
  } else {
    std::cout << text;
  }
}

json lift_json(const PMinimalResult& r) {
  json levels = json::array();
  for (const auto& lv : r.levels) {
    json cols = json::array();
    for (std::size_t j = 0; j < lv.lifted.cols(); ++j) {
      json col = json::array();
      for (std::size_t i = 0; i < lv.lifted.rows(); ++i) col.push_back(io::to_json(lv.lifted(i, j)));
      cols.push_back(std::move(col));
    }
    levels.push_back(json{{"t", lv.t}, {"nu", io::to_json(lv.nu)}, {"F", std::move(cols)}});
  }
  return levels;
}

std::string lift_text(const PMinimalResult& r) {
  std::string out;
  for (const auto& lv : r.levels) {
    out += "level t = " + std::to_string(lv.t) + ": nu_t = " + lv.nu.to_text() + "\n";
    out += io::block_text(lv.lifted);
  }
  return out;
}

int run_p_minimal(const Options& o) {
  const IntMatrix b = io::parse_matrix(read_source(o.matrix));
  const PMinimalResult r = p_minimal_polynomials(b, parse_prime(o.p));
  json j = io::to_json(r);
  std::string text;
  if (o.dump_lift) {
    j["lift"] = lift_json(r);
    text = lift_text(r);
  }
  emit(o, j, text + io::to_text(r));
  return kOk;
}

int run_null_ideal(const Options& o) {
  const IntMatrix b = io::parse_matrix(read_source(o.matrix));
  const BigInt a = parse_integer(o.a, "a");
  if (ring::sign(a) < 0) throw usage_error("a must be non-negative");
  const IdealGenerators g = null_ideal(b, a, factor_budget(o));
  emit(o, io::to_json(g), io::to_text(g));
  return kOk;
}

int run_int_valued(const Options& o) {
  const IntMatrix b = io::parse_matrix(read_source(o.matrix));
  std::optional<std::vector<Prime>> primes;
  if (!o.primes.empty()) primes = parse_prime_list(o.primes);
  const IVPGenerators v = integer_valued_polynomials(b, primes, factor_budget(o));
  emit(o, io::to_json(v), io::to_text(v));
  return kOk;
}

int run_candidate_primes(const Options& o) {
  const IntMatrix b = io::parse_matrix(read_source(o.matrix));
  const CandidatePrimes c = candidate_primes(b, factor_budget(o));
  emit(o, io::to_json(c), io::to_text(c));
  if (!c.complete()) {
    std::cerr << "pideal: factoring budget exhausted; candidate set is incomplete\n";
    return kBudget;
  }
  return kOk;
}

unsigned level_arg(const Options& o, long min) {
  if (o.t < min) throw usage_error("t must be >= " + std::to_string(min));
  return static_cast<unsigned>(o.t);
}

int run_module_decomposition(const Options& o) {
  const IntMatrix b = io::parse_matrix(read_source(o.matrix));
  const ModuleDecomposition m = module_decomposition(b, parse_prime(o.p), level_arg(o, 0));
  emit(o, io::to_json(m), io::to_text(m));
  return kOk;
}

oracle::Vec to_vec(const IntPoly& f) { return {f.coeffs().begin(), f.coeffs().end()}; }

oracle::HowellBasis ideal_basis(const std::vector<IntPoly>& gens, const oracle::Mat& b, const BigInt& p, unsigned t) {
  std::vector<oracle::Vec> v;
  for (const auto& g : gens) v.push_back(to_vec(g));
  return oracle::oracle_ideal_module(v, b, p, t);
}

// Cross-checks every level up to t against the oracle.
int run_verify(const Options& o) {
  const IntMatrix b = io::parse_matrix(read_source(o.matrix));
  const Prime p = parse_prime(o.p);
  const unsigned t_max = level_arg(o, 1);
  oracle::Mat bo(b.rows(), oracle::Vec(b.cols()));
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) bo[i][j] = b(i, j);
  }
  const McCoySystem sys = build_mccoy_system(b, p);
  const PMinimalResult r = p_minimal_polynomials(sys);
  const auto chain = lifting_chain_generators(sys, t_max);

  bool all_ok = true;
  json levels = json::array();
  std::string text;
  for (unsigned t = 1; t <= t_max; ++t) {
    const IntPoly nu = r.nu_at(t);
    const unsigned oracle_deg = oracle::oracle_min_monic_degree(bo, p.value(), t);
    const bool kills = oracle::annihilates_mod(to_vec(nu), bo, p.pow(t));
    const bool same_ideal = ideal_basis(null_ideal_prime_power(r, t).generators, bo, p.value(), t) ==
                            ideal_basis(chain[t - 1], bo, p.value(), t);
    const unsigned long card = module_decomposition(r, t).exponent();
    const unsigned long oracle_card = oracle::oracle_module_log_cardinality(bo, p.value(), t);
    const bool ok = static_cast<unsigned>(nu.degree()) == oracle_deg && kills && same_ideal && card == oracle_card;
    all_ok = all_ok && ok;
    levels.push_back(json{{"t", t},
                          {"degree", nu.degree()},
                          {"oracle_degree", oracle_deg},
                          {"annihilates", kills},
                          {"ideal_match", same_ideal},
                          {"log_cardinality", card},
                          {"oracle_log_cardinality", oracle_card},
                          {"ok", ok}});
    text += "t = " + std::to_string(t) + ": deg nu_t = " + std::to_string(nu.degree()) + " (oracle " +
            std::to_string(oracle_deg) + "), nu_t(B) = 0 mod p^t: " + (kills ? "yes" : "NO") +
            ", ideal matches lifting chain: " + (same_ideal ? "yes" : "NO") + ", log_p |module| = " +
            std::to_string(card) + " (oracle " + std::to_string(oracle_card) + ") " + (ok ? "ok" : "MISMATCH") + "\n";
  }
  text += all_ok ? "verify: all levels agree\n" : "verify: MISMATCH\n";
  emit(o, json{{"p", io::to_json(p.value())}, {"t", t_max}, {"levels", std::move(levels)}, {"ok", all_ok}}, text);
  return all_ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Null ideals and (p^s)-minimal polynomials of integer matrices"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_option("--factor-budget", o.factor_budget,
                 "Pollard-rho iteration budget (overrides PIDEAL_FACTOR_BUDGET)");

  const char* matrix_help = "Matrix: file path, '-' for stdin, or inline text such as \"1 2; 3 4\"";
  auto* pmin = app.add_subcommand("p-minimal", "Index set S_p and the (p^s)-minimal polynomials");
  pmin->add_option("B", o.matrix, matrix_help)->required();
  pmin->add_option("p", o.p, "Prime")->required();
  pmin->add_flag("--dump-lift", o.dump_lift, "Print the lifted generator block F of every level");

  auto* nullid = app.add_subcommand("null-ideal", "Generators of N_(a)(B) for a >= 0");
  nullid->add_option("B", o.matrix, matrix_help)->required();
  nullid->add_option("a", o.a, "Non-negative modulus")->required();

  auto* ivp = app.add_subcommand("int-valued", "Generators of Int(B, M_n(Z))");
  ivp->add_option("B", o.matrix, matrix_help)->required();
  ivp->add_option("--primes", o.primes, "Comma-separated primes to use instead of the candidate set");

  auto* cand = app.add_subcommand("candidate-primes", "Primes dividing det(T) for the Frobenius transform T");
  cand->add_option("B", o.matrix, matrix_help)->required();

  auto* mod = app.add_subcommand("module-decomposition", "Invariants of (Z/p^t)[B]");
  mod->add_option("B", o.matrix, matrix_help)->required();
  mod->add_option("p", o.p, "Prime")->required();
  mod->add_option("t", o.t, "Exponent")->required();

  auto* ver = app.add_subcommand("verify", "Cross-check levels 1..t against the brute-force oracle");
  ver->add_option("B", o.matrix, matrix_help)->required();
  ver->add_option("p", o.p, "Prime")->required();
  ver->add_option("t", o.t, "Highest level")->required();

  for (auto* sub : {pmin, nullid, ivp, cand, mod, ver}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*pmin) return run_p_minimal(o);
    if (*nullid) return run_null_ideal(o);
    if (*ivp) return run_int_valued(o);
    if (*cand) return run_candidate_primes(o);
    if (*mod) return run_module_decomposition(o);
    if (*ver) return run_verify(o);
  } catch (const factorization_error& e) {
    std::cerr << "pideal: " << e.what() << '\n';
    return kBudget;
  } catch (const usage_error& e) {
    std::cerr << "pideal: " << e.what() << '\n';
    return kBadInput;
  } catch (const io::parse_error& e) {
    std::cerr << "pideal: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "pideal: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
