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

#include <set>

#include "doctest.h"
#include "trichar/codes.hpp"
#include "trichar/counting.hpp"
#include "trichar/error.hpp"

using namespace trichar;

namespace {

using Counts = std::map<std::uint64_t, std::uint64_t>;

// Weight of m.G computed from scratch, column by column.
std::uint64_t weight_of(const GeneratorMatrix& g, const std::vector<Elem>& m) {
  const Field& f = g.field();
  std::uint64_t w = 0;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Elem c = kZero;
    for (std::size_t i = 0; i < g.rows(); ++i) c = f.add(c, f.mul(m[i], g.at(i, j)));
    w += c != kZero;
  }
  return w;
}

Counts naive_enumerator(const GeneratorMatrix& g) {
  const std::uint32_t Q = g.field().order();
  Counts out;
  const std::uint64_t total = ipow(Q, static_cast<unsigned>(g.rows()));
  std::vector<Elem> m(g.rows());
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& x : m) {
      x = Elem{static_cast<std::uint32_t>(c % Q)};
      c /= Q;
    }
    ++out[weight_of(g, m)];
  }
  return out;
}

}  // namespace

TEST_CASE("repetition code") {
  const TowerPtr tw = FieldTower::for_q(3);
  GeneratorMatrix g(tw, 1, 3);
  for (std::size_t j = 0; j < 3; ++j) g.set(0, j, kOne);
  const WeightEnumerator w = weight_enumerator_bruteforce(g);
  CHECK(w.counts == Counts{{0, 1}, {3, 8}});
  CHECK(divisibility(w) == 3);
  CHECK(check_enumerator(w).ok());
}

TEST_CASE("frame points give an identity-like matrix of full rank") {
  const TowerPtr tw = FieldTower::for_q(2);
  PointMultiset s(tw, 3);
  for (unsigned i = 0; i < 4; ++i) {
    Coords c(4, kZero);
    c[i] = kOne;
    s.add(ProjectivePoint{c});
  }
  const GeneratorMatrix g = generator_matrix(s);
  CHECK(g.rows() == 4);
  CHECK(g.cols() == 4);
  CHECK(g.rank() == 4);
  CHECK_FALSE(g.has_zero_column());
  const WeightEnumerator w = weight_enumerator_bruteforce(g);
  CHECK(w.counts.at(0) == 1);
  CHECK(w.counts.at(4) == 81);
  CHECK(check_enumerator(w).ok());
}

TEST_CASE("brute force agrees with a column-by-column oracle") {
  const TowerPtr tw = FieldTower::for_q(2);
  const Params p(tw, 3, kOne, Elem{2});
  const GeneratorMatrix g = generator_matrix(build_B(p));
  CHECK(weight_enumerator_bruteforce(g).counts == naive_enumerator(g));
}

TEST_CASE("brute force agrees with the spectrum") {
  struct Case {
    std::uint64_t q;
    unsigned r;
    std::uint32_t a, b;
    std::uint64_t j;
  };
  for (const Case c : {Case{3, 3, 1, 3, 0}, Case{3, 2, 4, 3, 0}, Case{3, 2, 4, 3, 2},
                       Case{4, 2, 3, 5, 0}, Case{2, 4, 1, 2, 4}, Case{5, 2, 7, 5, 0}}) {
    const TowerPtr tw = FieldTower::for_q(c.q);
    const Params p(tw, c.r, Elem{c.a}, Elem{c.b});
    PointMultiset s = build_B(p);
    if (c.j != 0) s = extend_multiset(s, c.j);
    const WeightEnumerator brute = weight_enumerator_bruteforce(generator_matrix(s));
    const WeightEnumerator spec = weight_enumerator_from_spectrum(s);
    CHECK(brute == spec);
    CHECK(check_enumerator(brute).ok());
    CHECK(brute.total() == ipow(c.q * c.q, c.r + 1));
    CHECK(brute.n == s.size());
  }
}

TEST_CASE("ThmB enumerator at q = 3, r = 3") {
  const TowerPtr tw = FieldTower::for_q(3);
  const Params p(tw, 3, kOne, Elem{3});
  const PointMultiset b = build_B(p);
  const GeneratorMatrix g = generator_matrix(b);
  CHECK(g.rows() == 4);
  CHECK(g.cols() == 243);
  CHECK(g.rank() == 4);
  const WeightEnumerator w = weight_enumerator_bruteforce(g);
  const Counts expected{{0, 1}, {207, 432}, {216, 5904}, {234, 216}, {243, 8}};
  CHECK(w.counts == expected);
  CHECK(divisibility(w) == 9);
  CHECK(w.nonzero_weights().size() == 4);

  const ExpectedEnumerator ee = expected_enumerator(classify(p), p, Variant::bare);
  CHECK(ee.corrected.counts == expected);
  CHECK(ee.printed.at(216) == 72);
  std::int64_t printed_total = 0;
  for (const auto& [wt, n] : ee.printed) printed_total += n;
  CHECK(printed_total != 6561);
  REQUIRE(ee.errata.size() == 1);
  CHECK(ee.errata[0].printed == 72);
  CHECK(ee.errata[0].corrected == 5904);
}

TEST_CASE("closed forms always satisfy the identities") {
  for (std::uint64_t q : {3u, 4u, 5u, 7u}) {
    const TowerPtr tw = FieldTower::for_q(q);
    for (unsigned r : {2u, 3u, 4u, 5u, 6u}) {
      for (ClassTag tag : {ClassTag::ThmA, ClassTag::ThmB, ClassTag::ThmC, ClassTag::Mb1Odd,
                           ClassTag::Mb1Even}) {
        const auto p = search_class(tw, r, tag);
        if (!p) continue;
        const bool mb1 = tag == ClassTag::Mb1Odd || tag == ClassTag::Mb1Even;
        for (Variant v : {Variant::bare, Variant::multiset_j1, Variant::multiset_j2}) {
          if (v != Variant::bare && !mb1) {
            CHECK_THROWS_AS(expected_enumerator(classify(*p), *p, v), ParamError);
            continue;
          }
          CAPTURE(q);
          CAPTURE(r);
          CAPTURE(to_string(tag));
          const ExpectedEnumerator ee = expected_enumerator(classify(*p), *p, v);
          CHECK(check_enumerator(ee.corrected).ok());
          // Weights coincide for r = 2.
          if (r >= 3) {
            CHECK(ee.corrected.nonzero_weights().size() == (v == Variant::bare ? 4u : 3u));
          }
        }
      }
    }
  }
}

TEST_CASE("multiset completions at q = 3, r = 4") {
  const TowerPtr tw = FieldTower::for_q(3);
  const Params p(tw, 4, Elem{4}, Elem{3});
  const PointMultiset b = build_B(p);
  const PointMultiset j18 = extend_multiset(b, 18);
  const GeneratorMatrix g = generator_matrix(j18);
  CHECK(g.rows() == 5);
  CHECK(g.cols() == 2205);
  CHECK(g.rank() == 5);

  for (Variant v : {Variant::multiset_j1, Variant::multiset_j2}) {
    const std::uint64_t j = multiplicity_of(v, 3, 4);
    std::set<std::uint64_t> characters;
    for (const auto& [c, n] : spectrum(extend_multiset(b, j), Mode::projective).histogram) {
      characters.insert(c);
    }
    CHECK(characters == std::set<std::uint64_t>{j, 243 + j, 234, 261});
    const WeightEnumerator w = weight_enumerator_from_spectrum(extend_multiset(b, j));
    CHECK(w.nonzero_weights().size() == 3);
    CHECK(w == expected_enumerator(classify(p), p, v).corrected);
    CHECK(divisibility(w) % 3 == 0);
  }
  CHECK(multiplicity_of(Variant::multiset_j1, 3, 4) == 18);

  const WeightEnumerator generic = weight_enumerator_from_spectrum(extend_multiset(b, 1));
  CHECK(generic.nonzero_weights().size() == 4);
  const ExpectedProfile prof = expected_profile(classify(p), p);
  CHECK(generic == profile_enumerator(prof, p, 1));
}

TEST_CASE("completion preconditions") {
  const TowerPtr tw = FieldTower::for_q(2);
  const PointMultiset b = build_B(Params(tw, 2, kOne, Elem{2}));
  CHECK_THROWS_AS(extend_multiset(b, 0), ParamError);
  CHECK_THROWS_AS(extend_multiset(extend_multiset(b, 1), 1), ParamError);
}

TEST_CASE("non-spanning multisets are refused") {
  const TowerPtr tw = FieldTower::for_q(2);
  PointMultiset s(tw, 2);
  s.add(AffinePoint{{kZero, kZero}});
  s.add(AffinePoint{{kOne, kZero}});
  CHECK(generator_matrix(s).rank() == 2);
  CHECK_THROWS_AS(weight_enumerator_from_spectrum(s), NonSpanningError);
}

TEST_CASE("brute force respects the budget") {
  const TowerPtr tw = FieldTower::for_q(3);
  const GeneratorMatrix g = generator_matrix(build_B(Params(tw, 3, kOne, Elem{3})));
  CHECK_THROWS_AS(weight_enumerator_bruteforce(g, Budget{1000}), BudgetExceeded);
}

TEST_CASE("divisibility") {
  WeightEnumerator w;
  w.counts = {{0, 1}, {96, 636}, {104, 384}, {128, 3}};
  CHECK(divisibility(w) == 8);
  w.counts = {{0, 1}, {7, 3}};
  CHECK(divisibility(w) == 7);
  w.counts = {{0, 1}};
  CHECK_THROWS_AS(divisibility(w), Error);
}

TEST_CASE("matrix export format") {
  const TowerPtr tw = FieldTower::for_q(3);
  GeneratorMatrix g(tw, 2, 3);
  g.set(0, 0, kOne);
  g.set(1, 2, Elem{8});
  CHECK(g.export_text() == "# q2=9 modulus=1,0,1 k=2 n=3\n1 0 0\n0 0 8\n");
  CHECK(g.has_zero_column());
}
