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

#include "hullfilter/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace hullfilter {

unsigned resolve_threads(const Parallelism& par) noexcept {
  if (par.threads != 0) return par.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t chunk_count(std::size_t n, const Parallelism& par) noexcept {
  if (n == 0) return 1;
  const std::size_t threads = resolve_threads(par);
  const std::size_t by_size = par.min_chunk == 0 ? n : (n + par.min_chunk - 1) / par.min_chunk;
  return std::max<std::size_t>(1, std::min(threads, by_size));
}

void parallel_chunks(
    std::size_t n, const Parallelism& par,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  const std::size_t chunks = chunk_count(n, par);
  const auto bounds = [&](std::size_t c) { return c * n / chunks; };
  if (chunks == 1) {
    body(0, 0, n);
    return;
  }

  std::vector<std::exception_ptr> errors(chunks);
  {
    std::vector<std::jthread> workers;
    workers.reserve(chunks - 1);
    for (std::size_t c = 1; c < chunks; ++c) {
      workers.emplace_back([&, c] {
        try {
          body(c, bounds(c), bounds(c + 1));
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    try {
      body(0, 0, bounds(1));
    } catch (...) {
      errors[0] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace hullfilter
