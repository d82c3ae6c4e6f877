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

#ifndef TRICHAR_VERIFY_HPP_
#define TRICHAR_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "trichar/codes.hpp"
#include "trichar/error.hpp"
#include "trichar/geometry.hpp"
#include "trichar/quadric.hpp"
#include "trichar/varieties.hpp"

namespace trichar {

using Json = nlohmann::ordered_json;

/// Marker attached to every expectation corrected against the printed value.
inline constexpr const char* kErratumMarker = "erratum";

Json to_json(const Spectrum& s);
Json to_json(const MinimalityReport& m);
Json to_json(const WeightEnumerator& w);
Json to_json(const SigmaCensus& c);
Json to_json(const Erratum& e);
Json to_json(const ExpectedProfile& p);
Json to_json(const Hyperplane& h);

struct VerifyOptions {
  bool spectrum = false;
  bool minimality = false;
  bool code = false;
  bool oracle = false;
  std::optional<std::uint64_t> multiset;  // j
  Budget budget{};
  bool timing = false;
};

enum class Outcome { pass, fail, open };
enum class Status { pass, fail, incomplete, applicability_open };

std::string to_string(Outcome o);
std::string to_string(Status s);

struct Verdict {
  std::string claim;
  Outcome outcome = Outcome::pass;
  std::string note;
};

struct VerificationReport {
  Json json;
  std::vector<Verdict> verdicts;
  Status status = Status::pass;
  std::optional<std::string> matrix_text;
  std::optional<Json> enumerator;

  /// 0 pass (or applicability open), 1 verdict failure, 3 budget exceeded.
  int exit_code() const;
};

/// Runs the requested checks on B(a, b). Budget overruns stop the run and
/// return the partial report with status incomplete.
VerificationReport verify(const Params& params, const VerifyOptions& options);

}  // namespace trichar

#endif  // TRICHAR_VERIFY_HPP_
