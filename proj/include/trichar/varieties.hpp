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

#ifndef TRICHAR_VARIETIES_HPP_
#define TRICHAR_VARIETIES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trichar/field.hpp"
#include "trichar/geometry.hpp"

namespace trichar {

/// (q, r, a, b) with a != 0 and b outside GF(q).
class Params {
 public:
  /// Throws ParamError when r < 2, a = 0 or b lies in GF(q).
  Params(TowerPtr tower, unsigned r, Elem a, Elem b);

  const FieldTower& tower() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }
  const Field& field() const { return tower_->field(); }
  unsigned r() const { return r_; }
  Elem a() const { return a_; }
  Elem b() const { return b_; }
  std::uint64_t q() const { return tower_->q(); }

 private:
  TowerPtr tower_;
  unsigned r_;
  Elem a_;
  Elem b_;
};

enum class ClassTag { QuasiHermitian, ThmA, ThmB, ThmC, Mb1Odd, Mb1Even, Unclassified };

std::string to_string(ClassTag tag);
std::optional<ClassTag> parse_class_tag(const std::string& s);

struct ParamClass {
  ClassTag tag = ClassTag::Unclassified;
  std::optional<Elem> discriminant;  // q odd: 4 a^{q+1} + (b^q - b)^2
  std::optional<Elem> trace_bit;     // q even: Tr(a^{q+1} / (b^q + b)^2)
};

ParamClass classify(const Params& params);

/// First (a, b) in lexicographic order of encodings with the given class.
std::optional<Params> search_class(const TowerPtr& tower, unsigned r, ClassTag tag);

/// x_r^q - x_r = (b^q - b)(x_1^{q+1} + ... + x_{r-1}^{q+1}).
PointMultiset hermitian_affine(const Params& params);

/// Points (0, x_1, ..., x_r) of the hyperplane at infinity with
/// x_1^{q+1} + ... + x_{r-1}^{q+1} = 0.
PointMultiset infinity_cone(const Params& params);

/// The affine set B(a, b):
/// x_r^q - x_r + a^q sum x_i^{2q} - a sum x_i^2 = (b^q - b) sum x_i^{q+1}.
PointMultiset build_B(const Params& params);

/// Direct evaluation of the defining equation of B(a, b).
bool in_B(const Params& params, const AffinePoint& p);

enum class Direction { forward, inverse };

/// forward: x_r -> x_r - a(x_1^2 + ... + x_{r-1}^2); inverse adds it back.
AffinePoint phi(const Params& params, const AffinePoint& p, Direction dir);

/// A closed-form value as printed next to the value that satisfies the
/// structural identities.
struct Erratum {
  std::string claim;
  std::int64_t printed = 0;
  std::int64_t corrected = 0;
};

struct ExpectedProfile {
  std::uint64_t set_size = 0;
  std::vector<std::uint64_t> characters;                // ascending
  std::map<std::uint64_t, std::uint64_t> affine_counts;  // corrected
  std::map<std::uint64_t, std::int64_t> printed_counts;
  std::uint64_t minimal_t = 0;
  /// Whether the closed form asserts minimality for these parameters.
  bool minimality_asserted = false;
  std::vector<Erratum> errata;
};

/// Closed-form characters and affine hyperplane counts. When the printed
/// counts violate the total-count or double-counting identity, the two
/// extreme counts are re-solved from those identities and the difference is
/// listed in errata.
ExpectedProfile expected_profile(const ParamClass& cls, const Params& params);

/// Total number of affine hyperplanes of AG(r, q^2) and the double-counting
/// right-hand side |B| * (hyperplanes through a point) for |B| = q^{2r-1}.
std::uint64_t affine_hyperplane_count(std::uint64_t q, unsigned r);

}  // namespace trichar

#endif  // TRICHAR_VARIETIES_HPP_
