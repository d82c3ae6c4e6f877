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
#include <vector>

#include "doctest.h"
#include "trichar/error.hpp"
#include "trichar/field.hpp"

using namespace trichar;

namespace {

// Prime powers p^k with p^k <= 81.
std::vector<std::pair<unsigned, unsigned>> small_orders() {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u,
                     59u, 61u, 67u, 71u, 73u, 79u}) {
    unsigned order = p;
    for (unsigned k = 1; order <= 81; ++k, order *= p) out.emplace_back(p, k);
  }
  return out;
}

// Root test: a polynomial of degree 2 or 3 is irreducible iff it has no root.
bool has_root(unsigned p, const std::vector<unsigned>& poly) {
  for (unsigned x = 0; x < p; ++x) {
    unsigned value = 0;
    for (std::size_t i = poly.size(); i-- > 0;) value = (value * x + poly[i]) % p;
    if (value == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(31));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power(9) == std::pair<unsigned, unsigned>{3, 2});
  CHECK(prime_power(16) == std::pair<unsigned, unsigned>{2, 4});
  CHECK_FALSE(prime_power(12).has_value());
  CHECK_FALSE(prime_power(1).has_value());
}

TEST_CASE("canonical moduli") {
  CHECK(FieldDescriptor::canonical(3, 2).modulus == std::vector<unsigned>{1, 0, 1});
  CHECK(FieldDescriptor::canonical(5, 2).modulus == std::vector<unsigned>{2, 0, 1});
  CHECK(FieldDescriptor::canonical(2, 2).modulus == std::vector<unsigned>{1, 1, 1});
  CHECK(FieldDescriptor::canonical(3, 1).modulus == std::vector<unsigned>{0, 1});
}

TEST_CASE("irreducibility agrees with root search in degrees 2 and 3") {
  for (unsigned p : {2u, 3u, 5u, 7u}) {
    for (unsigned deg : {2u, 3u}) {
      unsigned total = 1;
      for (unsigned i = 0; i < deg; ++i) total *= p;
      for (unsigned code = 0; code < total; ++code) {
        std::vector<unsigned> poly(deg + 1, 1);
        unsigned c = code;
        for (unsigned i = 0; i < deg; ++i, c /= p) poly[i] = c % p;
        CHECK(is_irreducible(p, poly) == !has_root(p, poly));
      }
    }
  }
}

TEST_CASE("descriptor strings") {
  const FieldDescriptor d = FieldDescriptor::parse("3^2/1,0,1");
  CHECK(d.p == 3);
  CHECK(d.k == 2);
  CHECK(d.to_string() == "3^2/1,0,1");
  CHECK(FieldDescriptor::parse("5^2") == FieldDescriptor::canonical(5, 2));
  CHECK_THROWS_AS(FieldDescriptor::parse("4^2/1,0,1"), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::parse("3^2/2,0,1"), FieldError);  // t^2 - 1 splits
  CHECK_THROWS_AS(FieldDescriptor::parse("3^2/1,0"), FieldError);
  CHECK_THROWS_AS(FieldDescriptor::parse("garbage"), FieldError);
}

TEST_CASE("field axioms, exhaustive for orders up to 81") {
  for (auto [p, k] : small_orders()) {
    const Field f(FieldDescriptor::canonical(p, k));
    const std::uint32_t n = f.order();
    CAPTURE(n);
    bool ok = true;
    for (std::uint32_t x = 0; x < n; ++x) {
      const Elem a{x};
      ok &= f.add(a, kZero) == a && f.mul(a, kOne) == a && f.mul(a, kZero) == kZero;
      ok &= f.add(a, f.neg(a)) == kZero;
      if (x != 0) ok &= f.mul(a, f.inv(a)) == kOne;
      for (std::uint32_t y = 0; y < n; ++y) {
        const Elem b{y};
        ok &= f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        ok &= f.sub(f.add(a, b), b) == a;
        for (std::uint32_t z = 0; z < n; ++z) {
          const Elem c{z};
          ok &= f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok &= f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("pow agrees with repeated multiplication") {
  const Field f(FieldDescriptor::canonical(2, 5));
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    Elem acc = kOne;
    for (std::uint64_t e = 0; e < 70; ++e) {
      CHECK(f.pow(Elem{x}, e) == acc);
      acc = f.mul(acc, Elem{x});
    }
  }
}

TEST_CASE("multiplicative group is cyclic of order n - 1") {
  const Field f(FieldDescriptor::canonical(3, 4));
  std::size_t generators = 0;
  for (std::uint32_t x = 1; x < f.order(); ++x) {
    std::set<Elem> powers;
    for (std::uint64_t e = 0; e < f.order() - 1; ++e) powers.insert(f.pow(Elem{x}, e));
    generators += powers.size() == f.order() - 1;
  }
  CHECK(generators == 32);  // phi(80)
}

TEST_CASE("frobenius is x^p") {
  const Field f(FieldDescriptor::canonical(5, 2));
  for (std::uint32_t x = 0; x < f.order(); ++x) CHECK(f.frobenius(Elem{x}) == f.pow(Elem{x}, 5));
}

TEST_CASE("arithmetic errors") {
  const Field f(FieldDescriptor::canonical(3, 2));
  CHECK_THROWS_AS(f.inv(kZero), FieldError);
  CHECK_THROWS_AS(f.element(9), FieldError);
  CHECK(f.constant(-1) == Elem{2});
  const Field g(FieldDescriptor::canonical(5, 1));
  CHECK_THROWS_AS(FieldElement(f, kOne) + FieldElement(g, kOne), FieldError);
  const FieldElement x(f, Elem{3});
  CHECK((x * x).value() == Elem{2});  // t^2 = -1
  CHECK((x / x).value() == kOne);
}

TEST_CASE("tower conjugation, norm and decomposition") {
  for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const TowerPtr tw = FieldTower::for_q(q);
    const Field& f = tw->field();
    CAPTURE(q);
    REQUIRE(tw->q2() == q * q);
    CHECK(tw->subfield().size() == q);
    std::size_t fixed = 0;
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const Elem a{x};
      CHECK(tw->conj(a) == f.pow(a, q));
      CHECK(tw->conj(tw->conj(a)) == a);
      fixed += tw->conj(a) == a;
      CHECK((tw->conj(a) == a) == tw->in_subfield(a));
      CHECK(tw->in_subfield(tw->norm(a)));
      CHECK(tw->in_subfield(tw->rtrace(a)));
      for (std::uint32_t y = 0; y < f.order(); ++y) {
        CHECK(tw->norm(f.mul(a, Elem{y})) == f.mul(tw->norm(a), tw->norm(Elem{y})));
      }
    }
    CHECK(fixed == q);

    if (!tw->has_eps_basis()) {
      CHECK(q == 2);
      CHECK_THROWS_AS(tw->decompose(kOne), ParamError);
      continue;
    }
    const Elem eps = *tw->eps();
    if (tw->q_odd()) {
      CHECK(tw->conj(eps) == f.neg(eps));
    } else {
      CHECK(tw->conj(eps) == f.add(eps, kOne));
      const Elem nu = *tw->nu();
      CHECK(nu == f.add(f.mul(eps, eps), eps));
      CHECK(tw->in_subfield(nu));
      CHECK(nu != kOne);
      CHECK(tw->absolute_trace(nu) == kOne);
    }
    std::set<std::pair<Elem, Elem>> seen;
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      const auto [x0, x1] = tw->decompose(Elem{x});
      CHECK(tw->in_subfield(x0));
      CHECK(tw->in_subfield(x1));
      CHECK(tw->recompose(x0, x1) == Elem{x});
      seen.emplace(x0, x1);
    }
    CHECK(seen.size() == f.order());
  }
}

TEST_CASE("epsilon examples") {
  CHECK(*FieldTower::for_q(3)->eps() == Elem{3});
  const TowerPtr t25 = FieldTower::for_q(5);
  CHECK(t25->field().descriptor().to_string() == "5^2/2,0,1");
  CHECK(*t25->eps() == Elem{5});
  CHECK_FALSE(FieldTower::for_q(2)->has_eps_basis());
}

TEST_CASE("absolute trace is balanced") {
  for (std::uint64_t q : {4u, 8u, 16u}) {
    const TowerPtr tw = FieldTower::for_q(q);
    std::size_t zero = 0;
    for (Elem x : tw->subfield()) {
      const Elem t = tw->absolute_trace(x);
      CHECK((t == kZero || t == kOne));
      zero += t == kZero;
    }
    CHECK(zero == q / 2);
  }
  const TowerPtr tw = FieldTower::for_q(4);
  Elem outside = kZero;
  for (std::uint32_t x = 0; x < tw->q2(); ++x) {
    if (!tw->in_subfield(Elem{x})) {
      outside = Elem{x};
      break;
    }
  }
  CHECK_THROWS_AS(tw->absolute_trace(outside), FieldError);
}

TEST_CASE("squares in the subfield") {
  for (std::uint64_t q : {3u, 5u, 7u, 9u}) {
    const TowerPtr tw = FieldTower::for_q(q);
    const Field& f = tw->field();
    std::set<Elem> squares;
    for (Elem x : tw->subfield()) squares.insert(f.mul(x, x));
    for (Elem x : tw->subfield()) CHECK(tw->is_square_in_subfield(x) == squares.count(x) > 0);
  }
  CHECK_THROWS(FieldTower::for_q(4)->is_square_in_subfield(kOne));
}

TEST_CASE("explicit modulus") {
  const TowerPtr tw = FieldTower::make(3, 1, std::vector<unsigned>{2, 2, 1});  // t^2 + 2t + 2
  CHECK(tw->q2() == 9);
  CHECK(tw->has_eps_basis());
  CHECK(tw->field().descriptor().to_string() == "3^2/2,2,1");
}
