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

#include "trichar/varieties.hpp"

#include <array>

#include "trichar/counting.hpp"
#include "trichar/error.hpp"

namespace trichar {

Params::Params(TowerPtr tower, unsigned r, Elem a, Elem b)
    : tower_(std::move(tower)), r_(r), a_(a), b_(b) {
  if (!tower_) throw ParamError("parameters need a field tower");
  const Field& f = tower_->field();
  if (r_ < 2) throw ParamError("dimension r must be at least 2");
  if (!f.contains(a_) || !f.contains(b_)) throw ParamError("a or b outside GF(q^2)");
  if (a_ == kZero) throw ParamError("a must be nonzero");
  if (tower_->in_subfield(b_)) throw ParamError("b must lie outside GF(q)");
}

namespace {

constexpr std::array<std::pair<ClassTag, const char*>, 7> kTagNames{{
    {ClassTag::QuasiHermitian, "QuasiHermitian"},
    {ClassTag::ThmA, "ThmA"},
    {ClassTag::ThmB, "ThmB"},
    {ClassTag::ThmC, "ThmC"},
    {ClassTag::Mb1Odd, "Mb1Odd"},
    {ClassTag::Mb1Even, "Mb1Even"},
    {ClassTag::Unclassified, "Unclassified"},
}};

}  // namespace

std::string to_string(ClassTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "Unclassified";
}

std::optional<ClassTag> parse_class_tag(const std::string& s) {
  for (const auto& [t, name] : kTagNames) {
    if (s == name) return t;
  }
  return std::nullopt;
}

ParamClass classify(const Params& params) {
  const FieldTower& tw = params.tower();
  const Field& f = tw.field();
  const unsigned r = params.r();
  const Elem a = params.a();
  const Elem b = params.b();
  ParamClass out;
  if (tw.q_odd()) {
    const Elem diff = f.sub(tw.conj(b), b);
    const Elem disc = f.add(f.mul(f.constant(4), tw.norm(a)), f.mul(diff, diff));
    out.discriminant = disc;
    const std::uint64_t q = tw.q();
    if (disc == kZero) {
      if (r % 2 == 0) {
        out.tag = ClassTag::ThmC;
      } else if (r % 4 == 3 && q % 4 == 3) {
        out.tag = ClassTag::ThmB;
      } else {
        out.tag = ClassTag::ThmA;
      }
    } else if (r % 2 == 1) {
      out.tag = ClassTag::QuasiHermitian;
    } else {
      out.tag = tw.is_square_in_subfield(disc) ? ClassTag::Mb1Odd : ClassTag::QuasiHermitian;
    }
  } else {
    const Elem sum = f.add(tw.conj(b), b);
    const Elem bit = tw.absolute_trace(f.div(tw.norm(a), f.mul(sum, sum)));
    out.trace_bit = bit;
    if (r % 2 == 1) {
      out.tag = ClassTag::QuasiHermitian;
    } else {
      out.tag = bit == kOne ? ClassTag::Mb1Even : ClassTag::QuasiHermitian;
    }
  }
  return out;
}

std::optional<Params> search_class(const TowerPtr& tower, unsigned r, ClassTag tag) {
  const std::uint32_t Q = tower->q2();
  for (std::uint32_t a = 1; a < Q; ++a) {
    for (std::uint32_t b = 0; b < Q; ++b) {
      if (tower->in_subfield(Elem{b})) continue;
      Params p(tower, r, Elem{a}, Elem{b});
      if (classify(p).tag == tag) return p;
    }
  }
  return std::nullopt;
}

namespace {

// For every w in GF(q^2), the z with z^q - z = w.
std::vector<std::vector<Elem>> artin_schreier_fibres(const FieldTower& tw) {
  const Field& f = tw.field();
  std::vector<std::vector<Elem>> fibres(f.order());
  for (std::uint32_t z = 0; z < f.order(); ++z) {
    const Elem w = f.sub(tw.conj(Elem{z}), Elem{z});
    fibres[w.code].push_back(Elem{z});
  }
  return fibres;
}

Elem norm_sum(const FieldTower& tw, const AffinePoint& head) {
  const Field& f = tw.field();
  Elem s = kZero;
  for (Elem x : head.coords) s = f.add(s, tw.norm(x));
  return s;
}

Elem square_sum(const Field& f, std::span<const Elem> xs) {
  Elem s = kZero;
  for (Elem x : xs) s = f.add(s, f.mul(x, x));
  return s;
}

// Visits (x_1..x_{r-1}) and every x_r with x_r^q - x_r = rhs(x_1..x_{r-1}).
template <typename Rhs>
PointMultiset solve_for_last(const Params& params, Rhs&& rhs) {
  const FieldTower& tw = params.tower();
  const auto fibres = artin_schreier_fibres(tw);
  PointMultiset out(params.tower_ptr(), params.r());
  for_each_affine_point(tw.field(), params.r() - 1, [&](const AffinePoint& head) {
    const Elem w = rhs(head);
    AffinePoint p{head.coords};
    p.coords.push_back(kZero);
    for (Elem z : fibres[w.code]) {
      p.coords.back() = z;
      out.add(p);
    }
  });
  return out;
}

}  // namespace

PointMultiset hermitian_affine(const Params& params) {
  const FieldTower& tw = params.tower();
  const Field& f = tw.field();
  const Elem diff = f.sub(tw.conj(params.b()), params.b());
  return solve_for_last(params, [&](const AffinePoint& head) {
    return f.mul(diff, norm_sum(tw, head));
  });
}

PointMultiset infinity_cone(const Params& params) {
  const FieldTower& tw = params.tower();
  const unsigned r = params.r();
  PointMultiset out(params.tower_ptr(), r);
  for (const auto& p : projective_points(tw.field(), r - 1)) {
    AffinePoint head{Coords(p.coords.begin(), p.coords.end() - 1)};
    if (norm_sum(tw, head) != kZero) continue;
    Coords c{kZero};
    c.insert(c.end(), p.coords.begin(), p.coords.end());
    out.add(ProjectivePoint{std::move(c)});
  }
  return out;
}

PointMultiset build_B(const Params& params) {
  const FieldTower& tw = params.tower();
  const Field& f = tw.field();
  const Elem diff = f.sub(tw.conj(params.b()), params.b());
  PointMultiset out = solve_for_last(params, [&](const AffinePoint& head) {
    const Elem s = f.mul(params.a(), square_sum(f, head.coords));
    return f.sub(f.mul(diff, norm_sum(tw, head)), f.sub(tw.conj(s), s));
  });
  const std::uint64_t expected = ipow(tw.q(), 2 * params.r() - 1);
  if (out.size() != expected) {
    throw Error("B(a,b) has " + std::to_string(out.size()) + " points, expected " +
                std::to_string(expected));
  }
  return out;
}

bool in_B(const Params& params, const AffinePoint& p) {
  const FieldTower& tw = params.tower();
  const Field& f = tw.field();
  const std::span<const Elem> head(p.coords.data(), p.coords.size() - 1);
  const Elem xr = p.coords.back();
  Elem sq_conj = kZero;
  Elem norms = kZero;
  for (Elem x : head) {
    sq_conj = f.add(sq_conj, f.pow(x, 2 * tw.q()));
    norms = f.add(norms, f.pow(x, tw.q() + 1));
  }
  const Elem a = params.a();
  const Elem b = params.b();
  const Elem lhs = f.add(f.sub(f.pow(xr, tw.q()), xr),
                         f.sub(f.mul(f.pow(a, tw.q()), sq_conj), f.mul(a, square_sum(f, head))));
  const Elem rhs = f.mul(f.sub(f.pow(b, tw.q()), b), norms);
  return lhs == rhs;
}

AffinePoint phi(const Params& params, const AffinePoint& p, Direction dir) {
  const Field& f = params.field();
  const std::span<const Elem> head(p.coords.data(), p.coords.size() - 1);
  const Elem shift = f.mul(params.a(), square_sum(f, head));
  AffinePoint out = p;
  out.coords.back() = dir == Direction::forward ? f.sub(p.coords.back(), shift)
                                                : f.add(p.coords.back(), shift);
  return out;
}

std::uint64_t affine_hyperplane_count(std::uint64_t q, unsigned r) {
  return projective_point_count(q * q, r) - 1;
}

ExpectedProfile expected_profile(const ParamClass& cls, const Params& params) {
  const std::int64_t q = static_cast<std::int64_t>(params.q());
  const unsigned r = params.r();
  const std::int64_t through_point =
      static_cast<std::int64_t>(hyperplanes_through_point(params.q() * params.q(), r));
  const std::int64_t mid = spow(q, 2 * r - 3);

  std::int64_t low = 0, high = 0;
  std::int64_t n_low = 0, n_mid = 0, n_high = 0;
  ExpectedProfile out;
  switch (cls.tag) {
    case ClassTag::ThmA: {
      const std::int64_t s = spow(q, (3 * r - 5) / 2);
      low = mid - s;
      high = low + spow(q, 3 * (r - 1) / 2);
      n_high = spow(q, r);
      n_mid = through_point - 1 + spow(q, 2 * r) - spow(q, r + 1);
      n_low = spow(q, r + 1) - spow(q, r);
      out.minimality_asserted = r > 2;
      break;
    }
    case ClassTag::ThmB: {
      const std::int64_t s = spow(q, (3 * r - 5) / 2);
      low = mid + s - spow(q, 3 * (r - 1) / 2);
      high = mid + s;
      n_high = spow(q, r);
      n_mid = through_point - 1 + spow(q, 2 * r) - spow(q, r + 1);
      n_low = spow(q, r + 1) - spow(q, r);
      out.minimality_asserted = r > 2;
      break;
    }
    case ClassTag::ThmC: {
      const std::int64_t s = spow(q, (3 * r - 4) / 2);
      low = mid - s;
      high = mid + s;
      n_low = n_high = (spow(q, r + 1) - spow(q, r)) / 2;
      n_mid = spow(q, r) + through_point - 1 + spow(q, 2 * r) - spow(q, r + 1);
      out.minimality_asserted = r > 2;
      if (r >= 4) {
        // The high character is printed with exponent 3(r-4)/2 in the count
        // table; only (3r-4)/2 agrees with the character list.
        out.errata.push_back({"ThmC high character exponent", mid + spow(q, 3 * (r - 4) / 2), high});
      }
      break;
    }
    case ClassTag::Mb1Odd:
    case ClassTag::Mb1Even: {
      low = mid - spow(q, r - 2);
      high = low + spow(q, r - 1);
      n_low = spow(q, 2 * r) - spow(q, 2 * r - 1);
      n_mid = through_point - 1;
      n_high = spow(q, 2 * r - 1);
      out.minimality_asserted = true;
      break;
    }
    default:
      throw ParamError("no closed-form profile for class " + to_string(cls.tag));
  }

  const std::int64_t set_size = spow(q, 2 * r - 1);
  const std::int64_t planes = static_cast<std::int64_t>(affine_hyperplane_count(params.q(), r));
  const std::int64_t incidences = set_size * through_point;

  // Re-solve the extreme counts from the two identities, keeping n_mid.
  const std::int64_t rest = planes - n_mid;
  const std::int64_t weighted = incidences - mid * n_mid - low * rest;
  if (weighted % (high - low) != 0) {
    throw Error("closed-form profile admits no integral correction");
  }
  const std::int64_t fixed_high = weighted / (high - low);
  const std::int64_t fixed_low = rest - fixed_high;
  if (fixed_high < 0 || fixed_low < 0) throw Error("closed-form profile admits no correction");
  if (fixed_low != n_low) {
    out.errata.push_back({to_string(cls.tag) + " count of character " + std::to_string(low), n_low,
                          fixed_low});
  }
  if (fixed_high != n_high) {
    out.errata.push_back({to_string(cls.tag) + " count of character " + std::to_string(high),
                          n_high, fixed_high});
  }

  out.set_size = static_cast<std::uint64_t>(set_size);
  out.characters = {static_cast<std::uint64_t>(low), static_cast<std::uint64_t>(mid),
                    static_cast<std::uint64_t>(high)};
  out.printed_counts = {{low, n_low}, {mid, n_mid}, {high, n_high}};
  out.affine_counts = {{low, fixed_low}, {mid, n_mid}, {high, fixed_high}};
  out.minimal_t = static_cast<std::uint64_t>(low);
  return out;
}

}  // namespace trichar
