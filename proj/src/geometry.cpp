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

#include "trichar/geometry.hpp"

#include <algorithm>

#include "trichar/counting.hpp"
#include "trichar/error.hpp"
#include "trichar/parallel.hpp"

namespace trichar {

ProjectivePoint ProjectivePoint::normalized(const Field& field, Coords coords) {
  const auto lead = std::find_if(coords.begin(), coords.end(), [](Elem x) { return x != kZero; });
  if (lead == coords.end()) throw Error("the zero vector is not a projective point");
  const Elem scale = field.inv(*lead);
  for (auto it = lead; it != coords.end(); ++it) *it = field.mul(*it, scale);
  return ProjectivePoint{std::move(coords)};
}

ProjectivePoint ProjectivePoint::from_affine(const AffinePoint& p) {
  Coords c;
  c.reserve(p.coords.size() + 1);
  c.push_back(kOne);
  c.insert(c.end(), p.coords.begin(), p.coords.end());
  return ProjectivePoint{std::move(c)};
}

ProjectivePoint ProjectivePoint::p_infinity(unsigned r) {
  Coords c(r + 1, kZero);
  c.back() = kOne;
  return ProjectivePoint{std::move(c)};
}

AffinePoint ProjectivePoint::to_affine() const {
  if (at_infinity()) throw Error("point at infinity has no affine coordinates");
  return AffinePoint{Coords(coords.begin() + 1, coords.end())};
}

Hyperplane Hyperplane::from_form(const Field& field, Coords form) {
  Hyperplane h;
  h.form = ProjectivePoint::normalized(field, std::move(form)).coords;
  const std::size_t r = h.form.size() - 1;
  const Elem top = h.form[r];
  h.through_p_inf = top == kZero;
  if (!h.through_p_inf) {
    const Elem scale = field.neg(field.inv(top));
    AffineView view;
    view.m.reserve(r - 1);
    for (std::size_t i = 1; i < r; ++i) view.m.push_back(field.mul(h.form[i], scale));
    view.d = field.mul(h.form[0], scale);
    h.affine_view = std::move(view);
  }
  return h;
}

Hyperplane Hyperplane::from_affine_view(const Field& field, Coords m, Elem d) {
  // d + sum m_i x_i - x_r = 0
  Coords form;
  form.reserve(m.size() + 2);
  form.push_back(d);
  form.insert(form.end(), m.begin(), m.end());
  form.push_back(field.neg(kOne));
  return from_form(field, std::move(form));
}

Hyperplane Hyperplane::infinity(unsigned r) {
  Hyperplane h;
  h.form.assign(r + 1, kZero);
  h.form[0] = kOne;
  h.through_p_inf = true;
  return h;
}

bool Hyperplane::is_infinity() const {
  return form[0] == kOne &&
         std::all_of(form.begin() + 1, form.end(), [](Elem x) { return x == kZero; });
}

// ---------------------------------------------------------------------------

PointMultiset::PointMultiset(TowerPtr tower, unsigned r) : tower_(std::move(tower)), r_(r) {
  if (!tower_) throw Error("multiset needs a field tower");
}

void PointMultiset::add(const ProjectivePoint& p, std::uint64_t mult) {
  if (p.coords.size() != r_ + 1) throw Error("point has the wrong number of coordinates");
  if (mult == 0) return;
  support_[p] += mult;
  size_ += mult;
}

void PointMultiset::add(const AffinePoint& p, std::uint64_t mult) {
  add(ProjectivePoint::from_affine(p), mult);
}

std::uint64_t PointMultiset::multiplicity(const ProjectivePoint& p) const {
  const auto it = support_.find(p);
  return it == support_.end() ? 0 : it->second;
}

bool PointMultiset::contains(const AffinePoint& p) const {
  return contains(ProjectivePoint::from_affine(p));
}

bool PointMultiset::is_set() const {
  return std::all_of(support_.begin(), support_.end(), [](const auto& e) { return e.second == 1; });
}

bool PointMultiset::is_affine() const {
  return std::none_of(support_.begin(), support_.end(),
                      [](const auto& e) { return e.first.at_infinity(); });
}

std::uint64_t Spectrum::plane_count() const {
  std::uint64_t n = 0;
  for (const auto& [size, count] : histogram) n += count;
  return n;
}

std::uint64_t Spectrum::weighted_sum() const {
  std::uint64_t n = 0;
  for (const auto& [size, count] : histogram) n += size * count;
  return n;
}

// ---------------------------------------------------------------------------

void for_each_affine_point(const Field& field, unsigned r,
                           const std::function<void(const AffinePoint&)>& visit) {
  const std::uint32_t Q = field.order();
  AffinePoint p{Coords(r, kZero)};
  while (true) {
    visit(p);
    std::size_t i = r;
    while (i > 0) {
      --i;
      if (++p.coords[i].code < Q) break;
      p.coords[i] = kZero;
      if (i == 0) return;
    }
  }
}

std::vector<AffinePoint> affine_points(const Field& field, unsigned r) {
  std::vector<AffinePoint> out;
  out.reserve(ipow(field.order(), r));
  for_each_affine_point(field, r, [&](const AffinePoint& p) { out.push_back(p); });
  return out;
}

std::vector<ProjectivePoint> projective_points(const Field& field, unsigned r) {
  std::vector<ProjectivePoint> out;
  out.reserve(projective_point_count(field.order(), r));
  for (std::size_t lead = r + 1; lead-- > 0;) {
    const unsigned tail = static_cast<unsigned>(r - lead);
    Coords prefix(lead, kZero);
    prefix.push_back(kOne);
    if (tail == 0) {
      out.push_back(ProjectivePoint{prefix});
      continue;
    }
    for_each_affine_point(field, tail, [&](const AffinePoint& rest) {
      Coords c = prefix;
      c.insert(c.end(), rest.coords.begin(), rest.coords.end());
      out.push_back(ProjectivePoint{std::move(c)});
    });
  }
  return out;
}

std::vector<Hyperplane> hyperplanes(const Field& field, unsigned r, Mode mode) {
  if (r < 1) throw Error("dimension must be at least 1");
  std::vector<Hyperplane> out;
  out.reserve(projective_point_count(field.order(), r));
  if (mode == Mode::projective) out.push_back(Hyperplane::infinity(r));
  for (auto& p : projective_points(field, r)) {
    Hyperplane h = Hyperplane::from_form(field, std::move(p.coords));
    if (h.is_infinity()) continue;
    out.push_back(std::move(h));
  }
  return out;
}

bool incident(const Field& field, const ProjectivePoint& p, const Hyperplane& h) {
  if (p.coords.size() != h.form.size()) throw Error("point and hyperplane live in different spaces");
  Elem sum = kZero;
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    sum = field.add(sum, field.mul(p.coords[i], h.form[i]));
  }
  return sum == kZero;
}

bool incident(const Field& field, const AffinePoint& p, const Hyperplane& h) {
  return incident(field, ProjectivePoint::from_affine(p), h);
}

namespace {

constexpr std::uint64_t kMaxDenseIndex = std::uint64_t{1} << 25;

// Incidence engine for one multiset. Affine support is indexed densely by
// sum x_i Q^{r-i}; points at infinity are kept in a short list.
class IncidenceCounter {
 public:
  explicit IncidenceCounter(const PointMultiset& s)
      : field_(s.field()), r_(s.dimension()), Q_(field_.order()) {
    weights_.assign(r_ + 1, 0);
    std::uint64_t w = 1;
    for (std::size_t i = r_; i >= 1; --i) {
      weights_[i] = w;
      w *= Q_;
    }
    const std::uint64_t affine_total = w;
    for (const auto& [p, mult] : s.support()) {
      if (p.at_infinity()) {
        infinite_.emplace_back(p, mult);
      } else {
        affine_.emplace_back(index_of(p), mult);
        affine_coords_.push_back(p.coords);
      }
    }
    if (!affine_.empty() && affine_total <= kMaxDenseIndex) {
      dense_.assign(affine_total, 0);
      for (const auto& [idx, mult] : affine_) dense_[idx] = static_cast<std::uint32_t>(mult);
    }
  }

  std::uint64_t count(const Hyperplane& h) const {
    std::uint64_t total = 0;
    for (const auto& [p, mult] : infinite_) {
      if (incident(field_, p, h)) total += mult;
    }
    if (affine_.empty() || h.is_infinity()) return total;
    if (use_list(h)) {
      for (std::size_t k = 0; k < affine_.size(); ++k) {
        if (on_plane(affine_coords_[k], h)) total += affine_[k].second;
      }
    } else {
      walk_plane(h, [&](std::uint64_t idx) { total += dense_[idx]; });
    }
    return total;
  }

  // Affine support points on h, as dense indices.
  std::vector<std::uint64_t> support_on(const Hyperplane& h) const {
    std::vector<std::uint64_t> out;
    if (affine_.empty() || h.is_infinity()) return out;
    if (use_list(h)) {
      for (std::size_t k = 0; k < affine_.size(); ++k) {
        if (on_plane(affine_coords_[k], h)) out.push_back(affine_[k].first);
      }
    } else {
      walk_plane(h, [&](std::uint64_t idx) {
        if (dense_[idx]) out.push_back(idx);
      });
    }
    return out;
  }

  std::uint64_t index_of(const ProjectivePoint& p) const {
    std::uint64_t idx = 0;
    for (std::size_t i = 1; i <= r_; ++i) idx += p.coords[i].code * weights_[i];
    return idx;
  }

  AffinePoint point_at(std::uint64_t idx) const {
    AffinePoint p{Coords(r_)};
    for (std::size_t i = 1; i <= r_; ++i) {
      p.coords[i - 1] = Elem{static_cast<std::uint32_t>(idx / weights_[i] % Q_)};
    }
    return p;
  }

 private:
  bool use_list(const Hyperplane&) const {
    return dense_.empty() || affine_.size() * r_ < ipow(Q_, static_cast<unsigned>(r_ - 1));
  }

  bool on_plane(const Coords& c, const Hyperplane& h) const {
    Elem sum = kZero;
    for (std::size_t i = 0; i <= r_; ++i) sum = field_.add(sum, field_.mul(c[i], h.form[i]));
    return sum == kZero;
  }

  // Visits the dense index of every affine point of h. The coordinate x_j
  // with j the last nonzero position of the form is solved for; the others
  // run freely.
  template <typename Fn>
  void walk_plane(const Hyperplane& h, Fn&& fn) const {
    std::size_t pivot = r_;
    while (h.form[pivot] == kZero) --pivot;
    const Elem scale = field_.neg(field_.inv(h.form[pivot]));
    const Elem c0 = field_.mul(h.form[0], scale);

    struct FreeVar {
      std::vector<Elem> term;           // c_i * x for every x
      std::vector<std::uint64_t> step;  // x * weight_i
    };
    std::vector<FreeVar> vars;
    for (std::size_t i = 1; i <= r_; ++i) {
      if (i == pivot) continue;
      FreeVar v;
      const Elem c = field_.mul(h.form[i], scale);
      v.term.resize(Q_);
      v.step.resize(Q_);
      for (std::uint32_t x = 0; x < Q_; ++x) {
        v.term[x] = field_.mul(c, Elem{x});
        v.step[x] = x * weights_[i];
      }
      vars.push_back(std::move(v));
    }
    const std::uint64_t pivot_weight = weights_[pivot];

    auto rec = [&](auto&& self, std::size_t level, Elem value, std::uint64_t idx) -> void {
      if (level + 1 >= vars.size()) {
        if (vars.empty()) {
          fn(idx + value.code * pivot_weight);
          return;
        }
        const FreeVar& v = vars[level];
        for (std::uint32_t x = 0; x < Q_; ++x) {
          const Elem xj = field_.add(value, v.term[x]);
          fn(idx + v.step[x] + xj.code * pivot_weight);
        }
        return;
      }
      const FreeVar& v = vars[level];
      for (std::uint32_t x = 0; x < Q_; ++x) {
        self(self, level + 1, field_.add(value, v.term[x]), idx + v.step[x]);
      }
    };
    rec(rec, 0, c0, 0);
  }

  const Field& field_;
  std::size_t r_;
  std::uint32_t Q_;
  std::vector<std::uint64_t> weights_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> affine_;
  std::vector<Coords> affine_coords_;
  std::vector<std::pair<ProjectivePoint, std::uint64_t>> infinite_;
  std::vector<std::uint32_t> dense_;
};

}  // namespace

std::vector<std::uint64_t> intersection_sizes(const PointMultiset& s,
                                              std::span<const Hyperplane> planes) {
  const IncidenceCounter counter(s);
  std::vector<std::uint64_t> sizes(planes.size(), 0);
  parallel_chunks(planes.size(), [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t i = begin; i < end; ++i) sizes[i] = counter.count(planes[i]);
  });
  return sizes;
}

Spectrum histogram_of(std::span<const std::uint64_t> sizes, Mode mode) {
  Spectrum out;
  out.mode = mode;
  for (std::uint64_t s : sizes) ++out.histogram[s];
  return out;
}

Spectrum spectrum(const PointMultiset& s, Mode mode) {
  const auto planes = hyperplanes(s.field(), s.dimension(), mode);
  const auto sizes = intersection_sizes(s, planes);
  return histogram_of(sizes, mode);
}

SpectrumIdentities check_spectrum(const PointMultiset& s, const Spectrum& spec) {
  const std::uint64_t Q = s.field().order();
  const unsigned r = s.dimension();
  const std::uint64_t total = projective_point_count(Q, r);
  SpectrumIdentities out;
  out.plane_count_ok =
      spec.plane_count() == (spec.mode == Mode::projective ? total : total - 1);
  out.incidence_sum = spec.weighted_sum();
  if (spec.mode == Mode::affine) {
    for (const auto& [p, mult] : s.support()) {
      if (p.at_infinity()) out.incidence_sum += mult;
    }
  }
  out.expected_incidence_sum = s.size() * hyperplanes_through_point(Q, r);
  out.double_counting_ok = out.incidence_sum == out.expected_incidence_sum;
  return out;
}

MinimalityReport minimality_report(const PointMultiset& s) {
  if (s.empty()) throw Error("minimality of the empty set is undefined");
  if (!s.is_set() || !s.is_affine()) {
    throw Error("minimality is checked for affine point sets only");
  }
  const auto planes = hyperplanes(s.field(), s.dimension(), Mode::affine);
  const auto sizes = intersection_sizes(s, planes);
  MinimalityReport report;
  report.t = *std::min_element(sizes.begin(), sizes.end());
  report.is_intersection_set = report.t > 0;

  const IncidenceCounter counter(s);
  std::map<std::uint64_t, std::size_t> witness;  // dense index -> plane
  for (std::size_t i = 0; i < planes.size() && witness.size() < s.support_size(); ++i) {
    if (sizes[i] != report.t) continue;
    for (std::uint64_t idx : counter.support_on(planes[i])) witness.emplace(idx, i);
  }
  report.inessential_points = s.support_size() - witness.size();
  report.is_minimal = report.is_intersection_set && report.inessential_points == 0;
  if (report.is_minimal) {
    for (const auto& [idx, plane] : witness) {
      report.witnesses.emplace(ProjectivePoint::from_affine(counter.point_at(idx)), planes[plane]);
    }
  }
  return report;
}

std::vector<AffinePoint> points_on(const PointMultiset& s, const Hyperplane& h) {
  const IncidenceCounter counter(s);
  std::vector<AffinePoint> out;
  for (std::uint64_t idx : counter.support_on(h)) out.push_back(counter.point_at(idx));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace trichar
