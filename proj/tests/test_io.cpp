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

#include <gtest/gtest.h>

#include "pideal/io.hpp"
#include "support.hpp"

namespace pideal {
namespace {

const IntMatrix kCubic = int_matrix({{1, 0, 1}, {1, -2, -1}, {10, 0, 0}});

TEST(ParseMatrix, AllFormats) {
  EXPECT_EQ(io::parse_matrix(R"({"n": 3, "entries": [["1","0","1"],["1","-2","-1"],["10","0","0"]]})"), kCubic);
  EXPECT_EQ(io::parse_matrix("  [[1,0,1],[1,-2,-1],[10,0,0]]"), kCubic);
  EXPECT_EQ(io::parse_matrix("1 0 1\n1 -2 -1\n10 0 0\n"), kCubic);
  EXPECT_EQ(io::parse_matrix("1 0 1; 1 -2 -1; 10 0 0"), kCubic);
  EXPECT_EQ(io::parse_matrix("123456789012345678901234567890")(0, 0), ring::from_string("123456789012345678901234567890"));
}

TEST(ParseMatrix, Errors) {
  EXPECT_THROW(io::parse_matrix(""), io::parse_error);
  EXPECT_THROW(io::parse_matrix("1 2\n3"), io::parse_error);
  EXPECT_THROW(io::parse_matrix("1 x"), io::parse_error);
  EXPECT_THROW(io::parse_matrix("{\"n\": 2, \"entries\": [[\"1\"]]}"), io::parse_error);
  EXPECT_THROW(io::parse_matrix("{\"entries\": [[1,2],[3,4]], \"n\": 3}"), io::parse_error);
  EXPECT_THROW(io::parse_matrix("[[1,2],[3,4]"), io::parse_error);
}

TEST(Json, MatrixRoundTrip) {
  const auto j = io::to_json(kCubic);
  EXPECT_EQ(io::parse_matrix(j.dump()), kCubic);
}

TEST(Json, PMinimalSchema) {
  const PMinimalResult r = p_minimal_polynomials(kCubic, Prime(2));
  const auto j = io::to_json(r);
  EXPECT_EQ(j.dump(), R"({"S":[2],"mu":["-20","-12","1","1"],"nu":{"2":["2","3","1"]},"p":"2"})");
  EXPECT_EQ(io::json::parse(j.dump()).dump(), j.dump());
  EXPECT_EQ(io::intpoly_from_json(j["nu"]["2"]), r.nu.at(2));
}

TEST(Json, IdealSchema) {
  const auto j = io::to_json(null_ideal_prime_power(kCubic, Prime(2), 2));
  EXPECT_EQ(j.dump(), R"({"generators":[["4"],["2","3","1"]],"modulus":"4"})");
  EXPECT_EQ(io::to_json(null_ideal(kCubic, 0)).dump(), R"({"generators":[["-20","-12","1","1"]],"modulus":"0"})");
}

TEST(Json, EverySchemaRoundTripsByteIdentically) {
  const IntMatrix diag = int_matrix({{0, 0}, {0, 2}});
  const std::vector<io::json> docs{
      io::to_json(kCubic),
      io::to_json(p_minimal_polynomials(kCubic, Prime(2))),
      io::to_json(null_ideal(diag, 12)),
      io::to_json(integer_valued_polynomials(kCubic)),
      io::to_json(candidate_primes(int_matrix({{4, 5}, {3, 5}}))),
      io::to_json(module_decomposition(kCubic, Prime(2), 3))};
  for (const auto& j : docs) {
    const std::string once = io::dump(j);
    EXPECT_EQ(io::dump(io::json::parse(once)), once);
  }
}

TEST(Json, ZeroPolynomialIsEmptyArray) { EXPECT_EQ(io::to_json(IntPoly{}).dump(), "[]"); }

TEST(Text, PMinimal) {
  const std::string s = io::to_text(p_minimal_polynomials(kCubic, Prime(2)));
  EXPECT_NE(s.find("S = {2}"), std::string::npos);
  EXPECT_NE(s.find("nu_2 = X^2 + 3*X + 2"), std::string::npos);
}

TEST(Text, ModuleDecomposition) {
  const std::string s = io::to_text(module_decomposition(kCubic, Prime(2), 3));
  EXPECT_NE(s.find("(Z/2^3)^2 + (Z/2^1)^1"), std::string::npos);
}

}  // namespace
}  // namespace pideal
