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

#include "trichar/quadric.hpp"

#include <algorithm>

#include "trichar/counting.hpp"
#include "trichar/parallel.hpp"

namespace trichar {

AffineQuadric::AffineQuadric(TowerPtr tower, std::size_t n)
    : tower_(std::move(tower)), n_(n), quad_(n * n, kZero), lin_(n, kZero) {
  if (!tower_) throw Error("quadric needs a field tower");
  if (n_ == 0) throw Error("quadric needs at least one variable");
}

Elem AffineQuadric::checked(Elem v) const {
  if (!tower_->field().contains(v) || !tower_->in_subfield(v)) {
    throw Error("quadric coefficient outside GF(q)");
  }
  return v;
}

Elem AffineQuadric::quad(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return quad_.at(i * n_ + j);
}

void AffineQuadric::set_quad(std::size_t i, std::size_t j, Elem v) {
  if (i > j) std::swap(i, j);
  quad_.at(i * n_ + j) = checked(v);
}

void AffineQuadric::add_quad(std::size_t i, std::size_t j, Elem v) {
  set_quad(i, j, tower_->field().add(quad(i, j), checked(v)));
}

void AffineQuadric::set_lin(std::size_t i, Elem v) { lin_.at(i) = checked(v); }
void AffineQuadric::set_constant(Elem v) { constant_ = checked(v); }

Elem AffineQuadric::evaluate_form(std::span<const Elem> y) const {
  const Field& f = tower_->field();
  Elem sum = kZero;
  for (std::size_t i = 0; i < n_; ++i) {
    if (y[i] == kZero) continue;
    Elem row = kZero;
    for (std::size_t j = i; j < n_; ++j) row = f.add(row, f.mul(quad_[i * n_ + j], y[j]));
    sum = f.add(sum, f.mul(y[i], row));
  }
  return sum;
}

Elem AffineQuadric::evaluate(std::span<const Elem> y) const {
  const Field& f = tower_->field();
  Elem sum = f.add(evaluate_form(y), constant_);
  for (std::size_t i = 0; i < n_; ++i) sum = f.add(sum, f.mul(lin_[i], y[i]));
  return sum;
}

namespace {

// Runs visit over GF(q)^n, or over normalized nonzero vectors when
// projective is set.
template <typename Fn>
void for_each_vector(const FieldTower& tw, std::size_t n, bool projective, Fn&& visit) {
  const auto sub = tw.subfield();
  const std::size_t q = sub.size();
  std::vector<Elem> y(n, kZero);
  std::vector<std::size_t> digit(n, 0);
  // Steps positions [from, n) through all values, positions below fixed.
  auto odometer = [&](std::size_t from) {
    for (std::size_t i = from; i < n; ++i) {
      digit[i] = 0;
      y[i] = sub[0];
    }
    while (true) {
      visit(std::span<const Elem>(y));
      std::size_t i = n;
      while (true) {
        if (i == from) return;
        --i;
        if (++digit[i] < q) {
          y[i] = sub[digit[i]];
          break;
        }
        digit[i] = 0;
        y[i] = sub[0];
      }
    }
  };
  if (!projective) {
    odometer(0);
    return;
  }
  for (std::size_t lead = n; lead-- > 0;) {
    std::fill(y.begin(), y.begin() + lead, kZero);
    y[lead] = kOne;
    odometer(lead + 1);
  }
}

// Symmetric Gram matrix diagonalization by congruence over GF(q), q odd.
// Returns the nonzero diagonal entries.
std::vector<Elem> diagonalize(const Field& f, std::vector<std::vector<Elem>> m) {
  const std::size_t n = m.size();
  std::vector<Elem> diag;
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][i] != kZero) {
        piv = i;
        break;
      }
    }
    if (piv == n) {
      // No usable diagonal entry: combine two indices with m[i][j] != 0.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (m[i][j] != kZero) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) break;  // remaining block is zero
      // e_i <- e_i + e_j gives diagonal m_ii + 2 m_ij + m_jj = 2 m_ij != 0.
      for (std::size_t t = 0; t < n; ++t) m[pi][t] = f.add(m[pi][t], m[pj][t]);
      for (std::size_t t = 0; t < n; ++t) m[t][pi] = f.add(m[t][pi], m[t][pj]);
      piv = pi;
    }
    std::swap(m[k], m[piv]);
    for (auto& row : m) std::swap(row[k], row[piv]);
    const Elem pivot = m[k][k];
    const Elem inv = f.inv(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == kZero) continue;
      const Elem factor = f.mul(m[i][k], inv);
      for (std::size_t t = 0; t < n; ++t) m[i][t] = f.sub(m[i][t], f.mul(factor, m[k][t]));
      for (std::size_t t = 0; t < n; ++t) m[t][i] = f.sub(m[t][i], f.mul(factor, m[t][k]));
    }
    diag.push_back(pivot);
    ++k;
  }
  return diag;
}

std::uint64_t nondegenerate_count(std::uint64_t q, std::size_t m, QuadricCharacter c) {
  const unsigned k = static_cast<unsigned>(m / 2);
  switch (c) {
    case QuadricCharacter::hyperbolic:
      return (ipow(q, k) - 1) * (ipow(q, k - 1) + 1) / (q - 1);
    case QuadricCharacter::elliptic:
      return (ipow(q, k) + 1) * (ipow(q, k - 1) - 1) / (q - 1);
    case QuadricCharacter::parabolic:
      return (ipow(q, 2 * k) - 1) / (q - 1);
    default:
      return 0;
  }
}

std::string describe(std::size_t n, std::size_t rank, QuadricCharacter c) {
  if (rank == 0) return "form vanishes identically on PG(" + std::to_string(n - 1) + ",q)";
  std::string basis = to_string(c) + " quadric of PG(" + std::to_string(rank - 1) + ",q)";
  if (rank == n) return "nondegenerate " + basis;
  return "cone with vertex PG(" + std::to_string(n - rank - 1) + ",q) over " + basis;
}

}  // namespace

std::string to_string(QuadricCharacter c) {
  switch (c) {
    case QuadricCharacter::hyperbolic:
      return "hyperbolic";
    case QuadricCharacter::elliptic:
      return "elliptic";
    case QuadricCharacter::parabolic:
      return "parabolic";
    default:
      return "degenerate-cone";
  }
}

std::uint64_t count_points(const AffineQuadric& quadric, Where where, const Budget& budget) {
  const FieldTower& tw = quadric.tower();
  const std::size_t n = quadric.variables();
  const std::uint64_t cost = n * ipow(tw.q(), static_cast<unsigned>(n));
  budget.require(cost, "quadric point count");
  std::uint64_t count = 0;
  if (where == Where::affine) {
    for_each_vector(tw, n, false, [&](std::span<const Elem> y) {
      if (quadric.evaluate(y) == kZero) ++count;
    });
  } else {
    for_each_vector(tw, n, true, [&](std::span<const Elem> y) {
      if (quadric.evaluate_form(y) == kZero) ++count;
    });
  }
  return count;
}

QuadricClass classify_quadric(const AffineQuadric& quadric, const Budget& budget) {
  const FieldTower& tw = quadric.tower();
  const Field& f = tw.field();
  const std::size_t n = quadric.variables();
  QuadricClass out;
  out.affine_count = count_points(quadric, Where::affine, budget);
  out.infinity_count = count_points(quadric, Where::at_infinity, budget);

  if (tw.q_odd()) {
    const Elem half = f.inv(f.constant(2));
    std::vector<std::vector<Elem>> gram(n, std::vector<Elem>(n, kZero));
    for (std::size_t i = 0; i < n; ++i) {
      gram[i][i] = quadric.quad(i, i);
      for (std::size_t j = i + 1; j < n; ++j) {
        gram[i][j] = gram[j][i] = f.mul(quadric.quad(i, j), half);
      }
    }
    std::vector<std::vector<Elem>> full(n + 1, std::vector<Elem>(n + 1, kZero));
    full[0][0] = quadric.constant();
    for (std::size_t i = 0; i < n; ++i) {
      full[0][i + 1] = full[i + 1][0] = f.mul(quadric.lin(i), half);
      for (std::size_t j = 0; j < n; ++j) full[i + 1][j + 1] = gram[i][j];
    }
    const auto diag = diagonalize(f, gram);
    out.rank = diag.size();
    out.completion_rank = diagonalize(f, full).size();
    const std::size_t m = diag.size();
    if (m == 0) {
      out.character = QuadricCharacter::degenerate_cone;
    } else if (m % 2 == 1) {
      out.character = QuadricCharacter::parabolic;
    } else {
      Elem disc = (m / 2) % 2 == 0 ? kOne : f.neg(kOne);
      for (Elem d : diag) disc = f.mul(disc, d);
      out.character = tw.is_square_in_subfield(disc) ? QuadricCharacter::hyperbolic
                                                     : QuadricCharacter::elliptic;
    }
    out.description = describe(n, m, out.character);
    return out;
  }

  // Even q: match |Q_inf| against cones over nondegenerate quadrics,
  // largest rank first.
  const std::uint64_t q = tw.q();
  for (std::size_t v = 0; v <= n; ++v) {
    const std::size_t m = n - v;
    const std::uint64_t vertex = (ipow(q, static_cast<unsigned>(v)) - 1) / (q - 1);
    if (m == 0) {
      if (out.infinity_count == vertex) {
        out.character = QuadricCharacter::degenerate_cone;
        out.description = describe(n, 0, out.character);
        return out;
      }
      continue;
    }
    std::vector<QuadricCharacter> options;
    if (m % 2 == 1) {
      options = {QuadricCharacter::parabolic};
    } else {
      options = {QuadricCharacter::hyperbolic, QuadricCharacter::elliptic};
    }
    for (QuadricCharacter c : options) {
      const std::uint64_t total =
          ipow(q, static_cast<unsigned>(v)) * nondegenerate_count(q, m, c) + vertex;
      if (total == out.infinity_count) {
        out.character = c;
        out.description = describe(n, m, c) + " (by point count)";
        return out;
      }
    }
  }
  out.character = QuadricCharacter::degenerate_cone;
  out.description = "no quadric profile matches " + std::to_string(out.infinity_count) +
                    " points at infinity";
  return out;
}

AffineQuadric reduce(const Params& params, std::span<const Elem> m, Elem d) {
  const FieldTower& tw = params.tower();
  const Field& f = tw.field();
  const unsigned r = params.r();
  if (m.size() != r - 1) throw ParamError("slope vector must have r-1 entries");
  if (!tw.has_eps_basis()) {
    throw ParamError("GF(" + std::to_string(tw.q2()) + ") has no epsilon basis; reduction refused");
  }
  const auto [a0, a1] = tw.decompose(params.a());
  const auto [b0, b1] = tw.decompose(params.b());
  (void)b0;
  AffineQuadric out(params.tower_ptr(), 2 * (r - 1));

  // The section is L^1 = b^1 * sum N(x_i) with L = a sum x_i^2 + sum m_i x_i + d
  // and superscripts the eps-coordinates.
  const Elem eps = *tw.eps();
  Elem sq0, sq1, cross;
  if (tw.q_odd()) {
    const Elem eps2 = f.mul(eps, eps);
    sq0 = f.sub(a1, b1);
    sq1 = f.mul(f.add(a1, b1), eps2);
    cross = f.mul(f.constant(2), a0);
  } else {
    const Elem nu = *tw.nu();
    sq0 = f.add(a1, b1);
    sq1 = f.add(f.add(a0, a1), f.mul(nu, f.add(a1, b1)));
    cross = b1;
  }
  for (unsigned i = 0; i + 1 < r; ++i) {
    const auto [m0, m1] = tw.decompose(m[i]);
    out.set_quad(2 * i, 2 * i, sq0);
    out.set_quad(2 * i + 1, 2 * i + 1, sq1);
    out.set_quad(2 * i, 2 * i + 1, cross);
    out.set_lin(2 * i, m1);
    out.set_lin(2 * i + 1, tw.q_odd() ? m0 : f.add(m0, m1));
  }
  out.set_constant(tw.decompose(d).second);
  return out;
}

SigmaCensus sigma_census(const Params& params, const Budget& budget) {
  if (classify(params).tag != ClassTag::ThmC) {
    throw ParamError("sigma census applies to class ThmC only");
  }
  const FieldTower& tw = params.tower();
  const unsigned r = params.r();
  const std::uint64_t q = tw.q();
  const std::size_t n = 2 * (r - 1);
  const std::uint64_t pairs = ipow(tw.q2(), r);
  budget.require(pairs * n * ipow(q, static_cast<unsigned>(n)), "sigma census");

  const std::uint64_t mid = ipow(q, 2 * r - 3);
  const std::uint64_t off = ipow(q, (3 * r - 4) / 2);

  SigmaCensus out;
  {
    const AffineQuadric base = reduce(params, Coords(r - 1, kZero), kZero);
    out.infinity_count = count_points(base, Where::at_infinity, budget);
  }

  struct Tally {
    std::uint64_t zero = 0, plus = 0, minus = 0;
  };
  std::vector<Tally> tallies(worker_count());
  const std::uint32_t Q = tw.q2();
  parallel_chunks(pairs, [&](std::size_t begin, std::size_t end, unsigned w) {
    Tally& t = tallies[w];
    Coords m(r - 1);
    for (std::size_t code = begin; code < end; ++code) {
      std::uint64_t c = code;
      const Elem d{static_cast<std::uint32_t>(c % Q)};
      c /= Q;
      for (std::size_t i = r - 1; i-- > 0;) {
        m[i] = Elem{static_cast<std::uint32_t>(c % Q)};
        c /= Q;
      }
      const AffineQuadric quadric = reduce(params, m, d);
      const std::uint64_t count = count_points(quadric, Where::affine, budget);
      if (count == mid) {
        ++t.zero;
      } else if (count == mid + off) {
        ++t.plus;
      } else if (count + off == mid) {
        ++t.minus;
      } else {
        throw Error("reduced quadric with unexpected point count " + std::to_string(count));
      }
    }
  });
  for (const Tally& t : tallies) {
    out.sigma0 += t.zero;
    out.sigma_plus += t.plus;
    out.sigma_minus += t.minus;
  }
  return out;
}

Elem alpha_invariant(const Params& params) {
  const FieldTower& tw = params.tower();
  if (tw.q_odd()) throw ParamError("alpha invariant is defined for even q only");
  if (!tw.has_eps_basis()) throw ParamError("alpha invariant needs q >= 4");
  if (classify(params).tag != ClassTag::Mb1Even) {
    throw ParamError("alpha invariant applies to class Mb1Even only");
  }
  const Field& f = tw.field();
  const auto [a0, a1] = tw.decompose(params.a());
  const auto [b0, b1] = tw.decompose(params.b());
  (void)b0;
  const Elem s = f.add(a1, b1);
  const Elem num = f.mul(s, f.add(f.add(a0, a1), f.mul(*tw.nu(), s)));
  return f.div(num, f.mul(b1, b1));
}

}  // namespace trichar
