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

#include "ratcode/distance.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

#include "ratcode/error.hpp"

namespace ratcode {

int hamming_distance(const Codeword& a, const Codeword& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

namespace detail {

int packed_distance(const std::uint8_t* a, const std::uint8_t* b, std::size_t stride) {
  int d = 0;
#if defined(__SSE2__)
  for (std::size_t off = 0; off < stride; off += 16) {
    const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(a + off));
    const __m128i y = _mm_loadu_si128(reinterpret_cast<const __m128i*>(b + off));
    const int eq = _mm_movemask_epi8(_mm_cmpeq_epi8(x, y));
    d += 16 - __builtin_popcount(static_cast<unsigned>(eq));
  }
#else
  for (std::size_t i = 0; i < stride; ++i) d += a[i] != b[i];
#endif
  return d;
}

}  // namespace detail

namespace {

bool better(const DistanceResult& a, const DistanceResult& b) {
  return std::tie(a.distance, a.first, a.second) < std::tie(b.distance, b.first, b.second);
}

// Rows [begin, end) against every later row. Stops once distance 1 is found:
// rows are distinct, so nothing smaller exists and the first hit is the
// block's lexicographically smallest witness.
DistanceResult scan_block(const Code& code, std::size_t begin, std::size_t end) {
  DistanceResult best;
  const std::size_t n = code.size();
  const std::size_t stride = code.stride();
  const std::uint8_t* base = code.packed().data();
  for (std::size_t i = begin; i < end; ++i) {
    const std::uint8_t* ri = base + i * stride;
    if (stride == 16) {
#if defined(__SSE2__)
      const __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ri));
      for (std::size_t j = i + 1; j < n; ++j) {
        const __m128i y = _mm_loadu_si128(reinterpret_cast<const __m128i*>(base + j * 16));
        const int d = 16 - __builtin_popcount(static_cast<unsigned>(_mm_movemask_epi8(_mm_cmpeq_epi8(x, y))));
        if (d < best.distance) {
          best.distance = d;
          best.first = i;
          best.second = j;
        }
      }
#else
      for (std::size_t j = i + 1; j < n; ++j) {
        const int d = detail::packed_distance(ri, base + j * 16, 16);
        if (d < best.distance) best = {d, i, j, 0};
      }
#endif
    } else {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::uint8_t* rj = base + j * stride;
        int d = 0;
        for (std::size_t off = 0; off < stride && d < best.distance; off += 16) {
          d += detail::packed_distance(ri + off, rj + off, 16);
        }
        if (d < best.distance) {
          best.distance = d;
          best.first = i;
          best.second = j;
        }
      }
    }
    best.pairs += n - i - 1;
    if (best.distance <= 1) break;
  }
  return best;
}

std::uint64_t pair_count(std::size_t n) { return n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2; }

}  // namespace

DistanceResult min_distance_reference(const Code& code) {
  DistanceResult best;
  std::vector<Codeword> words;
  words.reserve(code.size());
  for (std::size_t i = 0; i < code.size(); ++i) words.push_back(code.word(i));
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const int d = hamming_distance(words[i], words[j]);
      ++best.pairs;
      if (d < best.distance) {
        best.distance = d;
        best.first = i;
        best.second = j;
      }
    }
  }
  return best;
}

DistanceResult min_distance_exact(const Code& code, const ScanOptions& options) {
  const std::size_t n = code.size();
  const std::uint64_t pairs = pair_count(n);
  if (pairs > options.limits.max_pairs) {
    throw ResourceLimit("min_distance_exact: " + std::to_string(pairs) + " pairs exceeds the limit of " +
                        std::to_string(options.limits.max_pairs));
  }
  if (n < 2) return {};
  const unsigned workers = std::max(1u, options.workers);
  if (workers == 1) return scan_block(code, 0, n);

  // Row blocks shrink toward the end of the table as rows get cheaper.
  const std::size_t block = std::max<std::size_t>(1, n / (static_cast<std::size_t>(workers) * 32));
  std::atomic<std::size_t> next{0};
  std::vector<DistanceResult> partial(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      DistanceResult local;
      while (true) {
        const std::size_t begin = next.fetch_add(block);
        if (begin >= n) break;
        DistanceResult r = scan_block(code, begin, std::min(n, begin + block));
        local.pairs += r.pairs;
        if (better(r, local)) {
          const auto p = local.pairs;
          local = r;
          local.pairs = p;
        }
      }
      partial[w] = local;
    });
  }
  for (auto& t : pool) t.join();
  DistanceResult best;
  std::uint64_t scanned = 0;
  for (const auto& r : partial) {
    scanned += r.pairs;
    if (better(r, best)) best = r;
  }
  best.pairs = scanned;
  return best;
}

DistanceResult min_distance_sampled(const Code& code, std::uint64_t budget, std::uint64_t seed,
                                    const ScanOptions& options) {
  if (budget < 1) throw std::invalid_argument("min_distance_sampled: budget must be >= 1");
  const std::size_t n = code.size();
  if (n < 2) return {};
  if (budget >= pair_count(n)) return min_distance_exact(code, options);
  std::mt19937_64 rng(seed);
  DistanceResult best;
  const std::uint8_t* base = code.packed().data();
  const std::size_t stride = code.stride();
  for (std::uint64_t s = 0; s < budget; ++s) {
    std::size_t i = static_cast<std::size_t>(rng() % n);
    std::size_t j = static_cast<std::size_t>(rng() % (n - 1));
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    const int d = detail::packed_distance(base + i * stride, base + j * stride, stride);
    ++best.pairs;
    const DistanceResult cand{d, i, j, 0};
    if (better(cand, best)) {
      best.distance = d;
      best.first = i;
      best.second = j;
    }
  }
  return best;
}

int max_pole_count(const Code& code) {
  int best = 0;
  const auto inf = code.inf_byte();
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (code.all_inf_index() == i) continue;
    const auto r = code.row(i);
    best = std::max(best, static_cast<int>(std::count(r.begin(), r.begin() + code.n(), inf)));
  }
  return best;
}

int distance_to_allinf(const Code& code) {
  return code.n() - max_pole_count(code);
}

DecodeResult decode_nearest(const Code& code, const Codeword& word) {
  if (code.size() == 0) throw std::invalid_argument("decode_nearest: empty code");
  const auto packed = code.pack(word);
  DecodeResult best{0, std::numeric_limits<int>::max(), false};
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int d = detail::packed_distance(packed.data(), code.row(i).data(), code.stride());
    if (d < best.distance) {
      best = {i, d, false};
    } else if (d == best.distance) {
      best.tie = true;
    }
  }
  return best;
}

}  // namespace ratcode
