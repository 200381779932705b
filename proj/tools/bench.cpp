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

// Timing harness for p_minimal_polynomials on random integer matrices.
// Reports wall-clock time per size; there are no pass/fail thresholds.
//
//   pideal_bench [max_n=11] [trials=3] [prime=2] [entry_bound=9]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "pideal/pideal.hpp"

int main(int argc, char** argv) {
  using namespace pideal;
  const long max_n = argc > 1 ? std::atol(argv[1]) : 11;
  const long trials = argc > 2 ? std::atol(argv[2]) : 3;
  const Prime p(argc > 3 ? std::atol(argv[3]) : 2);
  const long bound = argc > 4 ? std::atol(argv[4]) : 9;

  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<long> entry(-bound, bound);
  std::printf("%4s %6s %12s %12s %6s\n", "n", "trial", "seconds", "levels", "|S|");
  for (long n = 1; n <= max_n; ++n) {
    for (long k = 0; k < trials; ++k) {
      IntMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n), BigInt(0));
      for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) b(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(rng);
      }
      const auto start = std::chrono::steady_clock::now();
      const PMinimalResult r = p_minimal_polynomials(b, p);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::printf("%4ld %6ld %12.4f %12zu %6zu\n", n, k, secs, r.levels.size(), r.S.size());
      std::fflush(stdout);
    }
  }
  return 0;
}
