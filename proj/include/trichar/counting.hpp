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

#ifndef TRICHAR_COUNTING_HPP_
#define TRICHAR_COUNTING_HPP_

#include <cstdint>
#include <numeric>

namespace trichar {

constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

constexpr std::int64_t spow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  while (exp--) r *= base;
  return r;
}

/// Points of PG(r, Q); also the number of hyperplanes.
constexpr std::uint64_t projective_point_count(std::uint64_t Q, unsigned r) {
  return (ipow(Q, r + 1) - 1) / (Q - 1);
}

/// Hyperplanes of PG(r, Q) through a fixed point.
constexpr std::uint64_t hyperplanes_through_point(std::uint64_t Q, unsigned r) {
  return (ipow(Q, r) - 1) / (Q - 1);
}

}  // namespace trichar

#endif  // TRICHAR_COUNTING_HPP_
