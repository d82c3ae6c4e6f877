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

#ifndef TRICHAR_ERROR_HPP_
#define TRICHAR_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace trichar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed field descriptors, non-prime characteristic, reducible moduli,
// operands outside the field, division by zero.
class FieldError : public Error {
 public:
  using Error::Error;
};

// Parameters outside the hypotheses of the construction (a = 0, b in GF(q),
// unsupported class tags, missing epsilon basis).
class ParamError : public Error {
 public:
  using Error::Error;
};

class NonSpanningError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t required, std::uint64_t budget)
      : Error(what + ": needs " + std::to_string(required) +
              " operations, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// Operation budget for the exhaustive routines. Costs are estimated up front
/// and the call is refused when the estimate exceeds the limit.
struct Budget {
  static constexpr std::uint64_t kDefault = 1'000'000'000ULL;
  std::uint64_t limit = kDefault;

  void require(std::uint64_t cost, const std::string& what) const {
    if (cost > limit) throw BudgetExceeded(what, cost, limit);
  }
};

}  // namespace trichar

#endif  // TRICHAR_ERROR_HPP_
