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

#ifndef TRICHAR_FIELD_HPP_
#define TRICHAR_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trichar {

/// A field element by its integer encoding enc(x) = sum c_i p^i over the
/// polynomial basis 1, t, ..., t^{k-1}. The encoding is only meaningful
/// together with the Field it was produced by.
struct Elem {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

bool is_prime(std::uint64_t n);

/// Returns (p, h) with q = p^h, or nullopt when q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(std::uint64_t q);

/// Monic polynomial over GF(p), constant term first. Degree is size() - 1.
bool is_irreducible(unsigned p, std::span<const unsigned> poly);

struct FieldDescriptor {
  unsigned p = 0;
  unsigned k = 0;
  std::vector<unsigned> modulus;  // k + 1 coefficients, constant first, monic

  std::uint64_t order() const;

  /// Smallest irreducible monic modulus of degree k, where candidates are
  /// ordered by the integer value of their lower coefficients
  /// c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
  static FieldDescriptor canonical(unsigned p, unsigned k);

  /// Validates and wraps an explicit modulus.
  static FieldDescriptor with_modulus(unsigned p, std::vector<unsigned> modulus);

  /// "p^k/c0,c1,...,ck", e.g. "3^2/1,0,1".
  std::string to_string() const;
  static FieldDescriptor parse(const std::string& spec);

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Table-driven arithmetic in GF(p^k). Immutable after construction.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1024;

  explicit Field(FieldDescriptor desc);

  const FieldDescriptor& descriptor() const { return desc_; }
  std::uint32_t order() const { return order_; }
  unsigned characteristic() const { return desc_.p; }
  unsigned degree() const { return desc_.k; }

  /// Range-checked conversion from an integer encoding.
  Elem element(std::uint64_t code) const;
  /// The prime-field element c mod p.
  Elem constant(std::int64_t c) const;
  Elem from_coefficients(std::span<const unsigned> coeffs) const;
  std::vector<unsigned> coefficients(Elem x) const;

  Elem add(Elem x, Elem y) const { return Elem{add_[idx(x, y)]}; }
  Elem sub(Elem x, Elem y) const { return Elem{add_[idx(x, neg(y))]}; }
  Elem neg(Elem x) const { return Elem{neg_[x.code]}; }
  Elem mul(Elem x, Elem y) const { return Elem{mul_[idx(x, y)]}; }
  Elem inv(Elem x) const;
  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
  Elem pow(Elem x, std::uint64_t e) const;
  /// x -> x^p.
  Elem frobenius(Elem x) const { return Elem{frob_[x.code]}; }

  bool contains(Elem x) const { return x.code < order_; }

 private:
  std::size_t idx(Elem x, Elem y) const {
    return static_cast<std::size_t>(x.code) * order_ + y.code;
  }

  FieldDescriptor desc_;
  std::uint32_t order_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint16_t> frob_;
};

/// An element bound to its field, for API boundaries where mixing fields
/// must be caught. Hot loops use Field and Elem directly.
class FieldElement {
 public:
  FieldElement(const Field& field, Elem value) : field_(&field), value_(value) {}

  const Field& field() const { return *field_; }
  Elem value() const { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {*field_, field_->neg(value_)}; }
  FieldElement pow(std::uint64_t e) const { return {*field_, field_->pow(value_, e)}; }
  FieldElement inv() const { return {*field_, field_->inv(value_)}; }

  bool operator==(const FieldElement& o) const;

 private:
  const Field& same_field(const FieldElement& o) const;

  const Field* field_;
  Elem value_;
};

/// GF(q^2) = GF(p^{2h}) together with its subfield GF(q), the conjugation
/// x -> x^q and the basis {1, eps} of GF(q^2) over GF(q).
///
/// For q odd eps is the smallest nonzero element with eps^q = -eps. For q even
/// eps is the smallest element outside GF(q) with nu = eps^2 + eps in
/// GF(q) \ {1}; then Tr(nu) = 1 and eps^q = eps + 1. For q = 2 no such eps
/// exists and the tower reports has_eps_basis() == false.
class FieldTower {
 public:
  static std::shared_ptr<const FieldTower> make(
      unsigned p, unsigned h, std::optional<std::vector<unsigned>> modulus = std::nullopt);
  static std::shared_ptr<const FieldTower> from_descriptor(FieldDescriptor big);
  /// Tower with subfield GF(q), q a prime power.
  static std::shared_ptr<const FieldTower> for_q(std::uint64_t q);

  const Field& field() const { return field_; }
  unsigned p() const { return field_.characteristic(); }
  unsigned h() const { return h_; }
  std::uint64_t q() const { return q_; }
  std::uint32_t q2() const { return field_.order(); }
  bool q_odd() const { return p() != 2; }

  /// The q elements of GF(q), ascending by encoding.
  std::span<const Elem> subfield() const { return subfield_; }
  bool in_subfield(Elem x) const { return subfield_index_[x.code] >= 0; }
  /// Position of x in subfield(); x must lie in GF(q).
  std::size_t subfield_index(Elem x) const;

  Elem conj(Elem x) const { return Elem{conj_[x.code]}; }
  Elem norm(Elem x) const { return field_.mul(x, conj(x)); }
  Elem rtrace(Elem x) const { return field_.add(x, conj(x)); }

  /// Sum of x^{p^i}, i < h, for x in GF(q). Lands in the prime field.
  Elem absolute_trace(Elem x) const;
  /// q odd only; x must lie in GF(q).
  bool is_square_in_subfield(Elem x) const;

  bool has_eps_basis() const { return eps_.has_value(); }
  std::optional<Elem> eps() const { return eps_; }
  std::optional<Elem> nu() const { return nu_; }

  /// x = x0 + eps * x1 with x0, x1 in GF(q).
  std::pair<Elem, Elem> decompose(Elem x) const;
  Elem recompose(Elem x0, Elem x1) const;

 private:
  FieldTower(FieldDescriptor big, unsigned h);

  Field field_;
  unsigned h_;
  std::uint64_t q_;
  std::vector<Elem> subfield_;
  std::vector<int> subfield_index_;
  std::vector<std::uint16_t> conj_;
  std::optional<Elem> eps_;
  std::optional<Elem> nu_;
  std::vector<std::pair<Elem, Elem>> decomposition_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

}  // namespace trichar

#endif  // TRICHAR_FIELD_HPP_
