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
#include <limits>

#include "ratcode/code.hpp"

namespace ratcode {

/// Hamming distance over Sigma; inf agrees only with inf. Throws
/// std::invalid_argument on a length mismatch.
int hamming_distance(const Codeword& a, const Codeword& b);

struct DistanceResult {
  int distance = std::numeric_limits<int>::max();
  std::size_t first = 0;   // witness rows, first < second
  std::size_t second = 0;
  std::uint64_t pairs = 0;  // pairs examined

  bool found() const { return distance != std::numeric_limits<int>::max(); }
};

struct ScanOptions {
  unsigned workers = 1;
  Limits limits{};
};

/// Scalar reference: every unordered pair through hamming_distance on
/// unpacked words, lexicographically first witness.
DistanceResult min_distance_reference(const Code& code);

/// Exhaustive minimum distance over all unordered pairs on the packed table.
/// Rows are split into blocks handed to `workers` threads; the result and
/// its witness (the lexicographically smallest minimizing pair) do not
/// depend on the worker count. Throws ResourceLimit when the pair count
/// exceeds limits.max_pairs.
DistanceResult min_distance_exact(const Code& code, const ScanOptions& options = {});

/// Minimum over `budget` seeded pseudo-random pairs: an upper bound on the
/// true distance. Falls back to the exhaustive scan when the budget covers
/// every pair.
DistanceResult min_distance_sampled(const Code& code, std::uint64_t budget, std::uint64_t seed,
                                    const ScanOptions& options = {});

/// Largest number of inf symbols in a word other than the all-inf word.
int max_pole_count(const Code& code);
/// Smallest distance from a word other than the all-inf word to the all-inf
/// vector.
int distance_to_allinf(const Code& code);

struct DecodeResult {
  std::size_t index = 0;
  int distance = 0;
  bool tie = false;  // another codeword is equally close
};

/// Nearest codeword by exhaustive scan; ties go to the earliest row.
DecodeResult decode_nearest(const Code& code, const Codeword& word);

namespace detail {
/// Packed-row kernel exposed for testing against the scalar path.
int packed_distance(const std::uint8_t* a, const std::uint8_t* b, std::size_t stride);
}  // namespace detail

}  // namespace ratcode
