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

#ifndef TRICHAR_GEOMETRY_HPP_
#define TRICHAR_GEOMETRY_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "trichar/field.hpp"

namespace trichar {

enum class Mode { affine, projective };

using Coords = std::vector<Elem>;

struct AffinePoint {
  Coords coords;  // (x_1, ..., x_r)

  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

/// Homogeneous coordinates (X_0, ..., X_r), first nonzero coordinate 1.
struct ProjectivePoint {
  Coords coords;

  static ProjectivePoint normalized(const Field& field, Coords coords);
  static ProjectivePoint from_affine(const AffinePoint& p);
  /// P_inf = (0, ..., 0, 1).
  static ProjectivePoint p_infinity(unsigned r);

  bool at_infinity() const { return coords.front() == kZero; }
  AffinePoint to_affine() const;

  friend auto operator<=>(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// x_r = m_1 x_1 + ... + m_{r-1} x_{r-1} + d.
struct AffineView {
  Coords m;
  Elem d;
};

/// sum form_i X_i = 0, form normalized first-nonzero-is-1.
struct Hyperplane {
  Coords form;
  std::optional<AffineView> affine_view;  // present iff form[r] != 0
  bool through_p_inf = false;             // form[r] == 0

  static Hyperplane from_form(const Field& field, Coords form);
  static Hyperplane from_affine_view(const Field& field, Coords m, Elem d);
  /// The hyperplane at infinity X_0 = 0.
  static Hyperplane infinity(unsigned r);

  bool is_infinity() const;

  friend bool operator==(const Hyperplane& a, const Hyperplane& b) { return a.form == b.form; }
};

/// Points of PG(r, q^2) with positive multiplicities.
class PointMultiset {
 public:
  PointMultiset(TowerPtr tower, unsigned r);

  /// Adds mult to the multiplicity of p; p must be normalized.
  void add(const ProjectivePoint& p, std::uint64_t mult = 1);
  void add(const AffinePoint& p, std::uint64_t mult = 1);

  std::uint64_t multiplicity(const ProjectivePoint& p) const;
  bool contains(const ProjectivePoint& p) const { return multiplicity(p) > 0; }
  bool contains(const AffinePoint& p) const;

  /// Sum of multiplicities.
  std::uint64_t size() const { return size_; }
  std::size_t support_size() const { return support_.size(); }
  bool empty() const { return support_.empty(); }
  bool is_set() const;
  bool is_affine() const;

  const std::map<ProjectivePoint, std::uint64_t>& support() const { return support_; }
  const TowerPtr& tower() const { return tower_; }
  const Field& field() const { return tower_->field(); }
  unsigned dimension() const { return r_; }

  friend bool operator==(const PointMultiset& a, const PointMultiset& b) {
    return a.r_ == b.r_ && a.support_ == b.support_;
  }

 private:
  TowerPtr tower_;
  unsigned r_;
  std::uint64_t size_ = 0;
  std::map<ProjectivePoint, std::uint64_t> support_;
};

/// Histogram intersection size -> number of hyperplanes.
struct Spectrum {
  Mode mode = Mode::affine;
  std::map<std::uint64_t, std::uint64_t> histogram;

  std::uint64_t plane_count() const;
  std::uint64_t weighted_sum() const;
  std::uint64_t min_character() const { return histogram.begin()->first; }

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Affine points in lexicographic order of coordinate encodings (x_1 most
/// significant); (q^2)^r of them.
void for_each_affine_point(const Field& field, unsigned r,
                           const std::function<void(const AffinePoint&)>& visit);
std::vector<AffinePoint> affine_points(const Field& field, unsigned r);

/// Normalized points of PG(r, q^2) in lexicographic order.
std::vector<ProjectivePoint> projective_points(const Field& field, unsigned r);

/// Projective mode: all hyperplanes, the hyperplane at infinity first, the
/// rest in lexicographic order of their normalized forms. Affine mode: the
/// same stream without the hyperplane at infinity.
std::vector<Hyperplane> hyperplanes(const Field& field, unsigned r, Mode mode);

bool incident(const Field& field, const ProjectivePoint& p, const Hyperplane& h);
bool incident(const Field& field, const AffinePoint& p, const Hyperplane& h);

/// Multiset intersection size for each plane, in stream order.
std::vector<std::uint64_t> intersection_sizes(const PointMultiset& s,
                                              std::span<const Hyperplane> planes);

Spectrum spectrum(const PointMultiset& s, Mode mode);
Spectrum histogram_of(std::span<const std::uint64_t> sizes, Mode mode);

/// Checks the incidence identities of a spectrum of s:
/// the plane count matches the mode, and sum over all projective hyperplanes
/// of |H cap S| equals |S| times the number of hyperplanes on a point (the
/// hyperplane at infinity is added back for affine-mode spectra).
struct SpectrumIdentities {
  bool plane_count_ok = false;
  bool double_counting_ok = false;
  std::uint64_t incidence_sum = 0;
  std::uint64_t expected_incidence_sum = 0;

  bool ok() const { return plane_count_ok && double_counting_ok; }
};
SpectrumIdentities check_spectrum(const PointMultiset& s, const Spectrum& spec);

struct MinimalityReport {
  std::uint64_t t = 0;
  bool is_intersection_set = false;
  bool is_minimal = false;
  std::size_t inessential_points = 0;
  /// For every point of S, the first affine hyperplane (stream order) through
  /// it meeting S in exactly t points. Filled only when is_minimal.
  std::map<ProjectivePoint, Hyperplane> witnesses;
};

/// S must be an affine set (multiplicities 1, no points at infinity).
MinimalityReport minimality_report(const PointMultiset& s);

/// Affine points of S lying on h, as a sorted list.
std::vector<AffinePoint> points_on(const PointMultiset& s, const Hyperplane& h);

}  // namespace trichar

#endif  // TRICHAR_GEOMETRY_HPP_
