/*
   Copyright 2026 The ratcode Authors

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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratcode/bounds.hpp"
#include "ratcode/code.hpp"
#include "ratcode/distance.hpp"

namespace ratcode {

enum class DistanceMode { Exact, Sampled };

struct VerifyOptions {
  DistanceMode mode = DistanceMode::Exact;
  std::uint64_t budget = 1'000'000;  // sampled pairs
  std::uint64_t seed = 0;
  unsigned workers = 1;
  Limits limits{};
};

/// Measured parameters of C_m next to the values claimed for it.
struct VerifyReport {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  int m = 0;
  int n = 0;

  std::uint64_t measured_functions = 0;
  BigInt claimed_functions;
  std::uint64_t measured_size = 0;
  BigInt claimed_size;

  DistanceMode mode = DistanceMode::Exact;
  int measured_d = 0;  // exact value, or an upper bound when sampled
  int claimed_d = 0;   // q + 1 - 2m, also the proven lower bound
  std::uint64_t pairs_examined = 0;
  std::size_t witness_first = 0;
  std::size_t witness_second = 0;
  Codeword witness_word_first;
  Codeword witness_word_second;

  BigInt singleton_max;     // (q+1)^{n - d + 1} at the measured d
  BigInt singleton_defect;  // singleton_max - measured_size
  /// measured_size > (q+1)^{2m}: the size alone forces d <= q + 1 - 2m.
  bool size_forces_distance = false;

  int max_pole_count = 0;
  int distance_to_allinf = 0;
  bool injective = true;
  std::size_t collisions = 0;

  bool distance_bound_holds = true;
  std::optional<bool> singleton_holds;  // exact mode only
  bool pole_bound_holds = true;

  std::vector<std::string> discrepancies;

  double enumerate_seconds = 0;
  double scan_seconds = 0;

  bool invariants_hold() const {
    return distance_bound_holds && singleton_holds.value_or(true) && pole_bound_holds && injective;
  }
};

/// Builds C_m, scans its distance and adjudicates the claimed parameters.
/// Propagates ResourceLimit from enumeration or the exact scan.
VerifyReport verify_code(const CodeParams& params, const VerifyOptions& options = {});
VerifyReport verify_code(const Code& code, const CodeParams& params, const VerifyOptions& options);

}  // namespace ratcode
