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

#include "doctest.h"
#include "trichar/verify.hpp"

using namespace trichar;

namespace {

VerifyOptions everything() {
  VerifyOptions o;
  o.spectrum = o.minimality = o.code = o.oracle = true;
  return o;
}

}  // namespace

TEST_CASE("ThmB report passes with errata recorded") {
  const Params p(FieldTower::for_q(3), 3, kOne, Elem{3});
  const VerificationReport rep = verify(p, everything());
  CHECK(rep.status == Status::pass);
  CHECK(rep.exit_code() == 0);
  const Json& j = rep.json;
  CHECK(j["class"]["tag"] == "ThmB");
  CHECK(j["measured"]["spectrum"]["histogram"]["36"] == 54);
  CHECK(j["measured"]["minimality"]["t"] == 9);
  bool middle = false;
  for (const auto& e : j["errata"]) {
    CHECK(e["marker"] == kErratumMarker);
    if (e["printed"] == 72 && e["corrected"] == 5904) middle = true;
  }
  CHECK(middle);
  CHECK_FALSE(j.contains("timing"));
  REQUIRE(rep.enumerator.has_value());
  CHECK((*rep.enumerator)["weights"]["216"] == 5904);
  REQUIRE(rep.matrix_text.has_value());
  CHECK(rep.matrix_text->rfind("# q2=9 modulus=1,0,1 k=4 n=243\n", 0) == 0);
}

TEST_CASE("reports are deterministic") {
  const Params p(FieldTower::for_q(3), 2, Elem{4}, Elem{3});
  CHECK(verify(p, everything()).json.dump() == verify(p, everything()).json.dump());
}

TEST_CASE("timing is opt-in") {
  const Params p(FieldTower::for_q(3), 2, Elem{4}, Elem{3});
  VerifyOptions o;
  o.spectrum = true;
  o.timing = true;
  CHECK(verify(p, o).json.contains("timing"));
}

TEST_CASE("budget overrun yields an incomplete report") {
  const Params p(FieldTower::for_q(3), 3, kOne, Elem{3});
  VerifyOptions o;
  o.spectrum = true;
  o.code = true;
  o.budget = Budget{1000};
  const VerificationReport rep = verify(p, o);
  CHECK(rep.status == Status::incomplete);
  CHECK(rep.exit_code() == 3);
  CHECK(rep.json["status"] == "incomplete");
  CHECK(rep.json["measured"].contains("spectrum"));
}

TEST_CASE("q = 2 is reported as applicability open") {
  const Params p(FieldTower::for_q(2), 4, kOne, Elem{2});
  VerifyOptions o;
  o.spectrum = true;
  o.code = true;
  o.oracle = true;
  o.multiset = 4;
  const VerificationReport rep = verify(p, o);
  CHECK(rep.status == Status::applicability_open);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.json["status"] == "theorem-applicability-open");
  CHECK(rep.json["measured"]["code"]["enumerator"]["n"] == 132);
}

TEST_CASE("unclassified parameters still get measured") {
  const auto p = search_class(FieldTower::for_q(3), 3, ClassTag::QuasiHermitian);
  REQUIRE(p.has_value());
  VerifyOptions o;
  o.spectrum = true;
  o.code = true;
  const VerificationReport rep = verify(*p, o);
  CHECK(rep.json["measured"].contains("spectrum"));
  CHECK_FALSE(rep.json["expected"].contains("profile"));
}

TEST_CASE("json shapes") {
  Spectrum s;
  s.histogram = {{9, 54}};
  CHECK(to_json(s).dump() == R"({"mode":"affine","histogram":{"9":54}})");
  WeightEnumerator w;
  w.n = 3;
  w.k = 1;
  w.counts = {{0, 1}, {3, 8}};
  CHECK(to_json(w).dump() == R"({"n":3,"k":1,"weights":{"0":1,"3":8}})");
  SigmaCensus c;
  c.sigma0 = 6399;
  c.sigma_plus = c.sigma_minus = 81;
  CHECK(to_json(c).dump() == R"({"sigma0":6399,"sigma_plus":81,"sigma_minus":81})");
}
