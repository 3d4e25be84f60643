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

#include "ratcode/verify.hpp"

#include <chrono>

namespace ratcode {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

VerifyReport verify_code(const CodeParams& params, const VerifyOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const Code code = construct_code(params, options.limits);
  const double built = seconds_since(t0);
  VerifyReport r = verify_code(code, params, options);
  r.enumerate_seconds = built;
  return r;
}

VerifyReport verify_code(const Code& code, const CodeParams& params, const VerifyOptions& options) {
  params.validate();
  const Field& f = *params.field;
  const auto q = f.q();
  const auto m = static_cast<std::uint64_t>(params.m);

  VerifyReport r;
  r.p = f.p();
  r.k = f.k();
  r.q = q;
  r.modulus = f.modulus();
  r.m = params.m;
  r.n = params.n();

  r.measured_size = code.size();
  r.measured_functions = code.offered() - 1;  // all-inf word is not a function
  r.claimed_functions = claimed_function_count(q, m);
  r.claimed_size = claimed_code_size(q, m);
  r.injective = code.injective();
  r.collisions = code.collisions().size();

  const auto t1 = std::chrono::steady_clock::now();
  const ScanOptions scan{options.workers, options.limits};
  const DistanceResult dr = options.mode == DistanceMode::Exact
                                ? min_distance_exact(code, scan)
                                : min_distance_sampled(code, options.budget, options.seed, scan);
  r.scan_seconds = seconds_since(t1);
  r.mode = options.mode;
  r.measured_d = dr.distance;
  r.pairs_examined = dr.pairs;
  r.witness_first = dr.first;
  r.witness_second = dr.second;
  r.witness_word_first = code.word(dr.first);
  r.witness_word_second = code.word(dr.second);
  r.claimed_d = static_cast<int>(q + 1 - 2 * m);

  r.max_pole_count = max_pole_count(code);
  r.distance_to_allinf = distance_to_allinf(code);

  r.distance_bound_holds = r.measured_d >= r.claimed_d;
  r.pole_bound_holds = r.max_pole_count <= params.m && r.distance_to_allinf >= static_cast<int>(q + 1 - m);
  r.singleton_max = singleton_max(q + 1, static_cast<std::uint64_t>(r.n),
                                  static_cast<std::uint64_t>(std::max(1, r.measured_d)));
  r.singleton_defect = r.singleton_max - BigInt(r.measured_size);
  if (options.mode == DistanceMode::Exact) r.singleton_holds = r.singleton_defect >= 0;
  r.size_forces_distance = BigInt(r.measured_size) > ipow(q + 1, 2 * m);

  if (BigInt(r.measured_functions) != r.claimed_functions) {
    r.discrepancies.push_back("function count: measured " + std::to_string(r.measured_functions) +
                              ", claimed " + r.claimed_functions.str());
  }
  if (BigInt(r.measured_size) != r.claimed_size) {
    r.discrepancies.push_back("code size: measured " + std::to_string(r.measured_size) + ", claimed " +
                              r.claimed_size.str());
  }
  if (auto row = find_claim(q, m); row && row->size != BigInt(r.measured_size)) {
    r.discrepancies.push_back("table entry (" + std::to_string(row->n) + ", " + row->size.str() + ", " +
                              std::to_string(row->d) + ") does not match measured size " +
                              std::to_string(r.measured_size));
  }
  if (r.measured_d != r.claimed_d) {
    r.discrepancies.push_back(std::string(options.mode == DistanceMode::Exact ? "distance" : "sampled distance bound") +
                              ": measured " + std::to_string(r.measured_d) + ", claimed " +
                              std::to_string(r.claimed_d));
  }
  if (!r.injective) {
    r.discrepancies.push_back("evaluation map is not injective: " + std::to_string(r.collisions) +
                              " repeated codewords");
  }
  return r;
}

}  // namespace ratcode
