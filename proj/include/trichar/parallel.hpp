/* Copyright 2026 The trichar Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TRICHAR_PARALLEL_HPP_
#define TRICHAR_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace trichar {

/// Worker count: TRICHAR_THREADS if set and positive, otherwise the hardware
/// concurrency (at least 1).
unsigned worker_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs
/// body(begin, end, worker_index) on each. Callers merge per-worker results
/// in worker order, so output never depends on scheduling.
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, unsigned)>& body);

}  // namespace trichar

#endif  // TRICHAR_PARALLEL_HPP_
