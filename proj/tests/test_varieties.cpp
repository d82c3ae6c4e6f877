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

#include <map>

#include "doctest.h"
#include "trichar/counting.hpp"
#include "trichar/error.hpp"
#include "trichar/varieties.hpp"

using namespace trichar;

namespace {

// Class rule restated from the case tables, on discriminants computed with
// plain powers.
ClassTag oracle_class(const FieldTower& tw, unsigned r, Elem a, Elem b) {
  const Field& f = tw.field();
  const std::uint64_t q = tw.q();
  const Elem bq = f.pow(b, q);
  const Elem na = f.pow(a, q + 1);
  if (tw.q_odd()) {
    const Elem d = f.sub(bq, b);
    const Elem disc = f.add(f.mul(f.constant(4), na), f.mul(d, d));
    if (disc == kZero) {
      if (r % 2 == 0) return ClassTag::ThmC;
      if (r % 4 == 3 && q % 4 == 3) return ClassTag::ThmB;
      return ClassTag::ThmA;
    }
    if (r % 2 == 1) return ClassTag::QuasiHermitian;
    bool square = false;
    for (Elem x : tw.subfield()) square |= f.mul(x, x) == disc;
    return square ? ClassTag::Mb1Odd : ClassTag::QuasiHermitian;
  }
  const Elem s = f.add(bq, b);
  const Elem x = f.div(na, f.mul(s, s));
  Elem tr = kZero, power = x;
  for (unsigned i = 0; i < tw.h(); ++i, power = f.mul(power, power)) tr = f.add(tr, power);
  if (r % 2 == 1) return ClassTag::QuasiHermitian;
  return tr == kOne ? ClassTag::Mb1Even : ClassTag::QuasiHermitian;
}

// |H(n, q^2)| in PG(n, q^2).
std::uint64_t hermitian_size(std::int64_t q, unsigned n) {
  const std::int64_t sign = n % 2 == 0 ? 1 : -1;
  return static_cast<std::uint64_t>((spow(q, n + 1) + sign) * (spow(q, n) - sign) / (q * q - 1));
}

std::uint32_t first_norm_two(const FieldTower& tw) {
  for (std::uint32_t a = 1; a < tw.q2(); ++a) {
    if (tw.norm(Elem{a}) == tw.field().constant(2)) return a;
  }
  return 0;
}

}  // namespace

TEST_CASE("parameter validation") {
  const TowerPtr tw = FieldTower::for_q(3);
  CHECK_THROWS_AS(Params(tw, 3, kZero, Elem{3}), ParamError);
  CHECK_THROWS_AS(Params(tw, 3, kOne, Elem{2}), ParamError);
  CHECK_THROWS_AS(Params(tw, 1, kOne, Elem{3}), ParamError);
  CHECK_THROWS_AS(Params(tw, 3, kOne, Elem{9}), ParamError);
}

TEST_CASE("class tags round-trip") {
  for (ClassTag t : {ClassTag::QuasiHermitian, ClassTag::ThmA, ClassTag::ThmB, ClassTag::ThmC,
                     ClassTag::Mb1Odd, ClassTag::Mb1Even, ClassTag::Unclassified}) {
    CHECK(parse_class_tag(to_string(t)) == t);
  }
  CHECK_FALSE(parse_class_tag("thmb").has_value());
}

TEST_CASE("named instances") {
  const TowerPtr t3 = FieldTower::for_q(3);
  CHECK(classify(Params(t3, 3, kOne, Elem{3})).tag == ClassTag::ThmB);
  CHECK(classify(Params(t3, 4, kOne, Elem{3})).tag == ClassTag::ThmC);
  CHECK(classify(Params(t3, 4, Elem{4}, Elem{3})).tag == ClassTag::Mb1Odd);
  const TowerPtr t5 = FieldTower::for_q(5);
  CHECK(classify(Params(t5, 3, Elem{first_norm_two(*t5)}, Elem{5})).tag == ClassTag::ThmA);
  const TowerPtr t2 = FieldTower::for_q(2);
  CHECK(classify(Params(t2, 4, kOne, Elem{2})).tag == ClassTag::Mb1Even);
}

TEST_CASE("classification agrees with the case-table oracle") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u}) {
    const TowerPtr tw = FieldTower::for_q(q);
    for (unsigned r : {2u, 3u, 4u, 5u, 7u}) {
      for (std::uint32_t a = 1; a < tw->q2(); ++a) {
        for (std::uint32_t b = 0; b < tw->q2(); ++b) {
          if (tw->in_subfield(Elem{b})) continue;
          const ClassTag tag = classify(Params(tw, r, Elem{a}, Elem{b})).tag;
          CHECK(tag == oracle_class(*tw, r, Elem{a}, Elem{b}));
          if (tw->q_odd()) CHECK(tag != ClassTag::Unclassified);
        }
      }
    }
  }
}

TEST_CASE("sweep totals at q = 3, r = 3") {
  const TowerPtr tw = FieldTower::for_q(3);
  const Field& f = tw->field();
  std::map<ClassTag, std::size_t> totals;
  std::size_t vanishing = 0;
  for (std::uint32_t a = 1; a < 9; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      if (tw->in_subfield(Elem{b})) continue;
      ++totals[classify(Params(tw, 3, Elem{a}, Elem{b})).tag];
      const Elem d = f.sub(f.pow(Elem{b}, 3), Elem{b});
      vanishing += f.mul(f.constant(4), f.pow(Elem{a}, 4)) == f.neg(f.mul(d, d));
    }
  }
  std::size_t sum = 0;
  for (const auto& [tag, n] : totals) sum += n;
  CHECK(sum == 48);
  CHECK(totals[ClassTag::ThmB] == vanishing);
  CHECK(totals.count(ClassTag::Unclassified) == 0);
}

TEST_CASE("search is lexicographic") {
  const TowerPtr tw = FieldTower::for_q(3);
  const auto found = search_class(tw, 3, ClassTag::ThmB);
  REQUIRE(found.has_value());
  for (std::uint32_t a = 1; a <= found->a().code; ++a) {
    for (std::uint32_t b = 0; b < 9; ++b) {
      if (a == found->a().code && b == found->b().code) break;
      if (tw->in_subfield(Elem{b})) continue;
      CHECK(classify(Params(tw, 3, Elem{a}, Elem{b})).tag != ClassTag::ThmB);
    }
  }
  CHECK_FALSE(search_class(tw, 3, ClassTag::Mb1Even).has_value());
}

TEST_CASE("B agrees with direct membership and with phi of the Hermitian set") {
  struct Case {
    std::uint64_t q;
    unsigned r;
    std::uint32_t a, b;
  };
  for (const Case c : {Case{3, 3, 1, 3}, Case{3, 2, 4, 3}, Case{2, 3, 1, 2}, Case{4, 2, 3, 5},
                       Case{5, 2, 7, 5}, Case{2, 4, 1, 2}}) {
    const TowerPtr tw = FieldTower::for_q(c.q);
    const Params p(tw, c.r, Elem{c.a}, Elem{c.b});
    const PointMultiset b = build_B(p);
    CHECK(b.size() == ipow(c.q, 2 * c.r - 1));
    CHECK(b.is_set());
    std::size_t members = 0;
    for_each_affine_point(tw->field(), c.r, [&](const AffinePoint& x) {
      const bool in = in_B(p, x);
      members += in;
      CHECK(in == b.contains(x));
    });
    CHECK(members == b.size());

    const PointMultiset h = hermitian_affine(p);
    CHECK(h.size() == ipow(c.q, 2 * c.r - 1));
    PointMultiset image(tw, c.r);
    for (const auto& [pt, mult] : h.support()) {
      const AffinePoint x = pt.to_affine();
      image.add(phi(p, x, Direction::forward), mult);
      CHECK(phi(p, phi(p, x, Direction::forward), Direction::inverse) == x);
    }
    CHECK(image == b);
  }
}

TEST_CASE("cone at infinity") {
  for (std::uint64_t q : {2u, 3u}) {
    const TowerPtr tw = FieldTower::for_q(q);
    for (unsigned r : {3u, 4u}) {
      Elem b = kZero;
      for (std::uint32_t x = 0; x < tw->q2(); ++x) {
        if (!tw->in_subfield(Elem{x})) {
          b = Elem{x};
          break;
        }
      }
      const PointMultiset cone = infinity_cone(Params(tw, r, kOne, b));
      CHECK(cone.size() == q * q * hermitian_size(static_cast<std::int64_t>(q), r - 2) + 1);
      CHECK(cone.contains(ProjectivePoint::p_infinity(r)));
    }
  }
  const TowerPtr t3 = FieldTower::for_q(3);
  CHECK(infinity_cone(Params(t3, 3, kOne, Elem{3})).size() == 37);
}

TEST_CASE("expected profiles satisfy the structural identities") {
  for (std::uint64_t q : {3u, 4u, 5u, 7u}) {
    const TowerPtr tw = FieldTower::for_q(q);
    for (unsigned r : {2u, 3u, 4u, 5u, 6u}) {
      for (ClassTag tag : {ClassTag::ThmA, ClassTag::ThmB, ClassTag::ThmC, ClassTag::Mb1Odd,
                           ClassTag::Mb1Even}) {
        const auto p = search_class(tw, r, tag);
        if (!p) continue;
        CAPTURE(q);
        CAPTURE(r);
        CAPTURE(to_string(tag));
        const ExpectedProfile prof = expected_profile(classify(*p), *p);
        const std::uint64_t Q = q * q;
        std::uint64_t planes = 0, incidences = 0;
        for (const auto& [c, n] : prof.affine_counts) {
          planes += n;
          incidences += c * n;
        }
        CHECK(planes == affine_hyperplane_count(q, r));
        CHECK(incidences == prof.set_size * hyperplanes_through_point(Q, r));
        CHECK(prof.minimal_t == prof.characters.front());
      }
    }
  }
}

TEST_CASE("ThmB profile corrects the swapped extreme counts") {
  const TowerPtr tw = FieldTower::for_q(3);
  const Params p(tw, 3, kOne, Elem{3});
  const ExpectedProfile prof = expected_profile(classify(p), p);
  CHECK(prof.affine_counts == std::map<std::uint64_t, std::uint64_t>{{9, 27}, {27, 738}, {36, 54}});
  CHECK(prof.printed_counts.at(9) == 54);
  CHECK(prof.printed_counts.at(36) == 27);
  CHECK(prof.errata.size() == 2);
}

TEST_CASE("no profile outside the theorems") {
  const TowerPtr tw = FieldTower::for_q(3);
  const auto p = search_class(tw, 3, ClassTag::QuasiHermitian);
  REQUIRE(p.has_value());
  CHECK_THROWS_AS(expected_profile(classify(*p), *p), ParamError);
}
