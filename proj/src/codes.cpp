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

#include "trichar/codes.hpp"

#include <numeric>
#include <sstream>

#include "trichar/counting.hpp"
#include "trichar/parallel.hpp"

namespace trichar {

GeneratorMatrix::GeneratorMatrix(TowerPtr tower, std::size_t k, std::size_t n)
    : tower_(std::move(tower)), k_(k), n_(n), entries_(k * n, kZero) {
  if (!tower_) throw Error("generator matrix needs a field tower");
  if (k_ == 0 || n_ == 0) throw Error("generator matrix must be nonempty");
}

void GeneratorMatrix::set(std::size_t i, std::size_t j, Elem v) {
  if (!field().contains(v)) throw FieldError("matrix entry outside the field");
  entries_.at(i * n_ + j) = v;
}

std::size_t GeneratorMatrix::rank() const {
  const Field& f = field();
  std::vector<Elem> m = entries_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n_ && rank < k_; ++col) {
    std::size_t piv = rank;
    while (piv < k_ && m[piv * n_ + col] == kZero) ++piv;
    if (piv == k_) continue;
    if (piv != rank) {
      for (std::size_t t = 0; t < n_; ++t) std::swap(m[piv * n_ + t], m[rank * n_ + t]);
    }
    const Elem inv = f.inv(m[rank * n_ + col]);
    for (std::size_t i = rank + 1; i < k_; ++i) {
      const Elem factor = f.mul(m[i * n_ + col], inv);
      if (factor == kZero) continue;
      for (std::size_t t = col; t < n_; ++t) {
        m[i * n_ + t] = f.sub(m[i * n_ + t], f.mul(factor, m[rank * n_ + t]));
      }
    }
    ++rank;
  }
  return rank;
}

bool GeneratorMatrix::has_zero_column() const {
  for (std::size_t j = 0; j < n_; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < k_ && zero; ++i) zero = at(i, j) == kZero;
    if (zero) return true;
  }
  return false;
}

std::string GeneratorMatrix::export_text() const {
  const FieldDescriptor& desc = field().descriptor();
  std::ostringstream out;
  out << "# q2=" << field().order() << " modulus=";
  for (std::size_t i = 0; i < desc.modulus.size(); ++i) {
    out << (i ? "," : "") << desc.modulus[i];
  }
  out << " k=" << k_ << " n=" << n_ << '\n';
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out << (j ? " " : "") << at(i, j).code;
    out << '\n';
  }
  return out.str();
}

GeneratorMatrix generator_matrix(const PointMultiset& s) {
  if (s.empty()) throw Error("generator matrix of an empty multiset");
  const std::size_t k = s.dimension() + 1;
  GeneratorMatrix g(s.tower(), k, s.size());
  std::size_t col = 0;
  for (const auto& [point, mult] : s.support()) {
    for (std::uint64_t rep = 0; rep < mult; ++rep, ++col) {
      for (std::size_t i = 0; i < k; ++i) g.set(i, col, point.coords[i]);
    }
  }
  return g;
}

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t sum = 0;
  for (const auto& [w, c] : counts) sum += c;
  return sum;
}

std::vector<std::uint64_t> WeightEnumerator::nonzero_weights() const {
  std::vector<std::uint64_t> out;
  for (const auto& [w, c] : counts) {
    if (w != 0 && c != 0) out.push_back(w);
  }
  return out;
}

WeightEnumerator weight_enumerator_bruteforce(const GeneratorMatrix& g, const Budget& budget) {
  const Field& f = g.field();
  const std::size_t k = g.rows();
  const std::size_t n = g.cols();
  const std::uint32_t Q = f.order();
  budget.require(ipow(Q, static_cast<unsigned>(k)) * n, "brute-force weight enumerator");

  // scaled[(i * Q + lambda) * n + j] = lambda * G[i][j]
  std::vector<Elem> scaled(k * Q * n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t lambda = 0; lambda < Q; ++lambda) {
      for (std::size_t j = 0; j < n; ++j) {
        scaled[(i * Q + lambda) * n + j] = f.mul(Elem{lambda}, g.at(i, j));
      }
    }
  }

  // The message is (m_0, ..., m_{k-2}, lambda); the prefix fixes a partial
  // codeword and the last coordinate runs over the field.
  const std::uint64_t prefixes = ipow(Q, static_cast<unsigned>(k - 1));
  std::vector<std::vector<std::uint64_t>> hist(worker_count(),
                                               std::vector<std::uint64_t>(n + 1, 0));
  parallel_chunks(prefixes, [&](std::size_t begin, std::size_t end, unsigned worker) {
    std::vector<std::uint64_t>& h = hist[worker];
    std::vector<Elem> partial(n);
    for (std::size_t u = begin; u < end; ++u) {
      std::fill(partial.begin(), partial.end(), kZero);
      std::uint64_t rest = u;
      for (std::size_t i = k - 1; i-- > 0;) {
        const std::uint32_t digit = static_cast<std::uint32_t>(rest % Q);
        rest /= Q;
        if (digit == 0) continue;
        const Elem* row = &scaled[(i * Q + digit) * n];
        for (std::size_t j = 0; j < n; ++j) partial[j] = f.add(partial[j], row[j]);
      }
      for (std::uint32_t lambda = 0; lambda < Q; ++lambda) {
        const Elem* row = &scaled[((k - 1) * Q + lambda) * n];
        std::size_t weight = 0;
        for (std::size_t j = 0; j < n; ++j) weight += f.add(partial[j], row[j]) != kZero;
        ++h[weight];
      }
    }
  });

  WeightEnumerator out;
  out.n = n;
  out.k = k;
  out.field_order = Q;
  for (const auto& h : hist) {
    for (std::size_t w = 0; w <= n; ++w) {
      if (h[w] != 0) out.counts[w] += h[w];
    }
  }
  return out;
}

WeightEnumerator weight_enumerator_from_spectrum(const PointMultiset& s) {
  const GeneratorMatrix g = generator_matrix(s);
  const unsigned r = s.dimension();
  if (g.rank() < r + 1) {
    throw NonSpanningError("multiset does not span PG(" + std::to_string(r) + ",q^2)");
  }
  const Field& f = s.field();
  const std::uint64_t Q = f.order();
  const auto planes = hyperplanes(f, r, Mode::projective);
  const auto sizes = intersection_sizes(s, planes);

  WeightEnumerator out;
  out.n = s.size();
  out.k = r + 1;
  out.field_order = Q;
  out.counts[0] = 1;
  for (std::uint64_t size : sizes) out.counts[out.n - size] += Q - 1;
  if (out.total() != ipow(Q, r + 1)) {
    throw Error("spectrum-derived enumerator does not reach (q^2)^(r+1)");
  }
  return out;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::bare:
      return "bare";
    case Variant::multiset_j1:
      return "multiset-j1";
    default:
      return "multiset-j2";
  }
}

std::uint64_t multiplicity_of(Variant v, std::uint64_t q, unsigned r) {
  switch (v) {
    case Variant::bare:
      return 0;
    case Variant::multiset_j1:
      return ipow(q, r - 1) - ipow(q, r - 2);
    default:
      return ipow(q, 2 * r - 3) - ipow(q, r - 2);
  }
}

WeightEnumerator profile_enumerator(const ExpectedProfile& profile, const Params& params,
                                    std::uint64_t j) {
  const std::uint64_t Q = params.q() * params.q();
  const unsigned r = params.r();
  const std::uint64_t vertical = hyperplanes_through_point(Q, r) - 1;
  const std::uint64_t mid = profile.characters.at(1);

  WeightEnumerator out;
  out.n = profile.set_size + j;
  out.k = r + 1;
  out.field_order = Q;
  auto add = [&](std::uint64_t size, std::uint64_t planes) {
    if (planes != 0) out.counts[out.n - size] += planes * (Q - 1);
  };
  out.counts[0] = 1;
  add(j, 1);  // the hyperplane at infinity
  for (const auto& [c, count] : profile.affine_counts) {
    if (c != mid) {
      add(c, count);
      continue;
    }
    // Every affine hyperplane through P_inf has the middle character.
    if (count < vertical) throw Error("profile has fewer middle planes than vertical planes");
    add(c + j, vertical);
    add(c, count - vertical);
  }
  return out;
}

namespace {

std::map<std::uint64_t, std::int64_t> printed_enumerator(ClassTag tag, Variant v,
                                                         std::int64_t q, unsigned r) {
  const std::int64_t Q = q * q;
  const std::int64_t n0 = spow(q, 2 * r - 1);
  const std::int64_t mid = spow(q, 2 * r - 3);
  std::map<std::uint64_t, std::int64_t> a;
  auto put = [&](std::int64_t w, std::int64_t c) { a[static_cast<std::uint64_t>(w)] += c; };
  put(0, 1);
  if (v == Variant::bare) {
    put(n0, Q - 1);
    const std::int64_t s5 = spow(q, (3 * r - 5) / 2);
    switch (tag) {
      case ClassTag::ThmA:
        put(n0 - mid - spow(q, 3 * (r - 1) / 2) + s5, (spow(q, r + 1) - spow(q, r)) * (Q - 1));
        put(n0 - mid, spow(q, 2 * r) - Q + (spow(q, 2 * r) - spow(q, r + 1)) * (Q - 1));
        put(n0 - mid + s5, spow(q, r + 2) - spow(q, r));
        break;
      case ClassTag::ThmB:
        put(n0 - mid - s5, (spow(q, r + 1) - spow(q, r)) * (Q - 1));
        put(n0 - mid, spow(q, 2 * r) - Q - spow(q, r + 1) * (Q - 1));
        put(n0 - mid + spow(q, 3 * (r - 1) / 2) - s5, spow(q, r + 2) - spow(q, r));
        break;
      case ClassTag::ThmC: {
        const std::int64_t s4 = spow(q, (3 * r - 4) / 2);
        const std::int64_t ext = (spow(q, r + 1) - spow(q, r)) * (Q - 1) / 2;
        put(n0 - mid + s4, ext);
        put(n0 - mid - s4, ext);
        put(n0 - mid, spow(q, 2 * r) + spow(q, r + 2) - spow(q, r) - Q +
                          (spow(q, 2 * r) - spow(q, r + 1)) * (Q - 1));
        break;
      }
      default:
        a.clear();
    }
    return a;
  }
  if (v == Variant::multiset_j1) {
    put(n0, Q - 1);
    put(n0 - mid, spow(q, 2 * r) - 1 + spow(q, 2 * r - 1) * (Q - 1));
    put(n0 - mid + spow(q, r - 1), (spow(q, 2 * r) - spow(q, 2 * r - 1) - 1) * (Q - 1));
  } else {
    put(n0, spow(q, 2 * r) - 1);
    put(n0 - mid, (Q - 1) * spow(q, 2 * r - 1));
    put(n0 - spow(q, r - 1), spow(q, 2 * r - 1) * (q - 1) * (Q - 1));
  }
  return a;
}

}  // namespace

ExpectedEnumerator expected_enumerator(const ParamClass& cls, const Params& params, Variant v) {
  const bool mb1 = cls.tag == ClassTag::Mb1Odd || cls.tag == ClassTag::Mb1Even;
  if (v != Variant::bare && !mb1) {
    throw ParamError("multiset variants apply to classes Mb1Odd and Mb1Even only");
  }
  const ExpectedProfile profile = expected_profile(cls, params);
  const std::uint64_t j = multiplicity_of(v, params.q(), params.r());

  ExpectedEnumerator out;
  out.corrected = profile_enumerator(profile, params, j);
  out.printed = printed_enumerator(cls.tag, v, static_cast<std::int64_t>(params.q()), params.r());
  if (out.printed.empty()) return out;

  std::map<std::uint64_t, std::pair<std::int64_t, std::int64_t>> both;
  for (const auto& [w, c] : out.printed) both[w].first = c;
  for (const auto& [w, c] : out.corrected.counts) both[w].second = static_cast<std::int64_t>(c);
  const std::string label = to_string(cls.tag) + (v == Variant::bare ? "" : " " + to_string(v));
  for (const auto& [w, pc] : both) {
    if (pc.first != pc.second) {
      out.errata.push_back(
          {label + " enumerator coefficient A_" + std::to_string(w), pc.first, pc.second});
    }
  }
  return out;
}

PointMultiset extend_multiset(const PointMultiset& b, std::uint64_t j) {
  if (!b.is_affine()) throw ParamError("multiset completion needs an affine set");
  if (j == 0) throw ParamError("multiset completion needs j >= 1");
  PointMultiset out = b;
  out.add(ProjectivePoint::p_infinity(b.dimension()), j);
  return out;
}

std::uint64_t divisibility(const WeightEnumerator& w) {
  std::uint64_t g = 0;
  for (std::uint64_t weight : w.nonzero_weights()) g = std::gcd(g, weight);
  if (g == 0) throw Error("enumerator has no nonzero weight");
  return g;
}

EnumeratorIdentities check_enumerator(const WeightEnumerator& w) {
  EnumeratorIdentities out;
  const std::uint64_t Q = w.field_order;
  const auto zero = w.counts.find(0);
  out.a0_ok = zero != w.counts.end() && zero->second == 1;
  out.sum_ok = w.total() == ipow(Q, static_cast<unsigned>(w.k));
  std::uint64_t moment = 0;
  for (const auto& [weight, c] : w.counts) moment += weight * c;
  out.mean_ok = moment == w.n * (Q - 1) * ipow(Q, static_cast<unsigned>(w.k - 1));
  return out;
}

}  // namespace trichar
