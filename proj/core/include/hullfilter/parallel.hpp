// Copyright 2026 The hullfilter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace hullfilter {

/// Thread budget for the data-parallel kernels.
///
/// Every kernel splits its index range into contiguous chunks, processes the
/// chunks concurrently and combines the per-chunk results in chunk order, so
/// results are bit-identical for any thread count.
struct Parallelism {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Ranges shorter than this run inline on the calling thread.
  std::size_t min_chunk = std::size_t{1} << 14;

  static Parallelism sequential() { return {1, 0}; }
  static Parallelism with_threads(unsigned n) { return {n, std::size_t{1} << 14}; }
};

/// Resolves threads == 0 to the hardware thread count (at least 1).
unsigned resolve_threads(const Parallelism& par) noexcept;

/// Number of chunks parallel_chunks() will use for a range of length n.
std::size_t chunk_count(std::size_t n, const Parallelism& par) noexcept;

/// Calls body(chunk, begin, end) for each of chunk_count(n, par) contiguous
/// chunks covering [0, n). Chunk 0 runs on the calling thread. Exceptions
/// from any chunk are rethrown after all chunks finish.
void parallel_chunks(
    std::size_t n, const Parallelism& par,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace hullfilter
