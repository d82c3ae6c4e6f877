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

#ifndef TRICHAR_QUADRIC_HPP_
#define TRICHAR_QUADRIC_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trichar/error.hpp"
#include "trichar/field.hpp"
#include "trichar/varieties.hpp"

namespace trichar {

/// sum_{i<=j} quad(i,j) y_i y_j + sum lin_i y_i + constant over GF(q), with
/// GF(q) embedded in GF(q^2) as the tower's subfield.
class AffineQuadric {
 public:
  AffineQuadric(TowerPtr tower, std::size_t n);

  std::size_t variables() const { return n_; }
  const FieldTower& tower() const { return *tower_; }
  const TowerPtr& tower_ptr() const { return tower_; }

  /// Coefficient of y_i y_j (order of i, j irrelevant).
  Elem quad(std::size_t i, std::size_t j) const;
  Elem lin(std::size_t i) const { return lin_.at(i); }
  Elem constant() const { return constant_; }

  /// Setters reject values outside GF(q).
  void set_quad(std::size_t i, std::size_t j, Elem v);
  void add_quad(std::size_t i, std::size_t j, Elem v);
  void set_lin(std::size_t i, Elem v);
  void set_constant(Elem v);

  Elem evaluate(std::span<const Elem> y) const;
  /// Degree-two part only.
  Elem evaluate_form(std::span<const Elem> y) const;

 private:
  Elem checked(Elem v) const;

  TowerPtr tower_;
  std::size_t n_;
  std::vector<Elem> quad_;  // n x n, upper triangle used
  std::vector<Elem> lin_;
  Elem constant_ = kZero;
};

enum class Where { affine, at_infinity };

/// Brute-force point count: affine zeros in GF(q)^n, or zeros of the
/// degree-two part in PG(n-1, q).
std::uint64_t count_points(const AffineQuadric& quadric, Where where,
                           const Budget& budget = {});

enum class QuadricCharacter { hyperbolic, elliptic, parabolic, degenerate_cone };

std::string to_string(QuadricCharacter c);

struct QuadricClass {
  std::uint64_t affine_count = 0;
  std::uint64_t infinity_count = 0;
  /// Character of the nondegenerate basis of the quadric at infinity.
  QuadricCharacter character = QuadricCharacter::degenerate_cone;
  /// Rank of the quadric at infinity; empty when determined by counting
  /// (even q).
  std::optional<std::size_t> rank;
  /// Rank of the projective completion (q odd).
  std::optional<std::size_t> completion_rank;
  std::string description;
};

QuadricClass classify_quadric(const AffineQuadric& quadric, const Budget& budget = {});

/// The quadric over GF(q) in (x_1^0, x_1^1, ..., x_{r-1}^0, x_{r-1}^1) whose
/// affine zeros correspond to the points of B(a,b) on
/// x_r = m_1 x_1 + ... + m_{r-1} x_{r-1} + d.
AffineQuadric reduce(const Params& params, std::span<const Elem> m, Elem d);

struct SigmaCensus {
  std::uint64_t sigma0 = 0;
  std::uint64_t sigma_plus = 0;
  std::uint64_t sigma_minus = 0;
  std::uint64_t infinity_count = 0;  // |Q_inf|, the same for every (m, d)
  bool infinity_count_constant = true;
};

/// Classifies the reduced quadric of every hyperplane not through P_inf by
/// its affine count: q^{2r-3} (sigma0), q^{2r-3} + q^{(3r-4)/2} (sigma_plus)
/// or q^{2r-3} - q^{(3r-4)/2} (sigma_minus). Requires class ThmC.
SigmaCensus sigma_census(const Params& params, const Budget& budget = {});

/// (a1 + b1)(a0 + a1 + nu(a1 + b1)) / b1^2 for even q >= 4 and class Mb1Even.
Elem alpha_invariant(const Params& params);

}  // namespace trichar

#endif  // TRICHAR_QUADRIC_HPP_
