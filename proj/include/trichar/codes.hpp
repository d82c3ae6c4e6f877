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

#ifndef TRICHAR_CODES_HPP_
#define TRICHAR_CODES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trichar/error.hpp"
#include "trichar/field.hpp"
#include "trichar/geometry.hpp"
#include "trichar/varieties.hpp"

namespace trichar {

/// k x n matrix over GF(q^2), row-major.
class GeneratorMatrix {
 public:
  GeneratorMatrix(TowerPtr tower, std::size_t k, std::size_t n);

  std::size_t rows() const { return k_; }
  std::size_t cols() const { return n_; }
  const FieldTower& tower() const { return *tower_; }
  const Field& field() const { return tower_->field(); }

  Elem at(std::size_t i, std::size_t j) const { return entries_.at(i * n_ + j); }
  void set(std::size_t i, std::size_t j, Elem v);

  std::size_t rank() const;
  bool has_zero_column() const;

  /// Header line and k rows of integer encodings.
  std::string export_text() const;

 private:
  TowerPtr tower_;
  std::size_t k_;
  std::size_t n_;
  std::vector<Elem> entries_;
};

/// Columns are the normalized coordinates of the support in enumeration
/// order, each repeated by its multiplicity.
GeneratorMatrix generator_matrix(const PointMultiset& s);

struct WeightEnumerator {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t n = 0;
  std::size_t k = 0;
  std::uint64_t field_order = 0;

  std::uint64_t total() const;
  std::vector<std::uint64_t> nonzero_weights() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

WeightEnumerator weight_enumerator_bruteforce(const GeneratorMatrix& g, const Budget& budget = {});

WeightEnumerator weight_enumerator_from_spectrum(const PointMultiset& s);

enum class Variant { bare, multiset_j1, multiset_j2 };

std::string to_string(Variant v);

/// j = q^{r-1} - q^{r-2} or j = q^{2r-3} - q^{r-2}; 0 for the bare set.
std::uint64_t multiplicity_of(Variant v, std::uint64_t q, unsigned r);

struct ExpectedEnumerator {
  WeightEnumerator corrected;
  /// The closed form as printed; empty when no closed form exists.
  std::map<std::uint64_t, std::int64_t> printed;
  std::vector<Erratum> errata;
};

ExpectedEnumerator expected_enumerator(const ParamClass& cls, const Params& params, Variant v);

/// Enumerator of B plus P_inf with multiplicity j, from the class profile.
WeightEnumerator profile_enumerator(const ExpectedProfile& profile, const Params& params,
                                    std::uint64_t j);

PointMultiset extend_multiset(const PointMultiset& b, std::uint64_t j);

std::uint64_t divisibility(const WeightEnumerator& w);

struct EnumeratorIdentities {
  bool a0_ok = false;
  bool sum_ok = false;
  bool mean_ok = false;

  bool ok() const { return a0_ok && sum_ok && mean_ok; }
};

EnumeratorIdentities check_enumerator(const WeightEnumerator& w);

}  // namespace trichar

#endif  // TRICHAR_CODES_HPP_
