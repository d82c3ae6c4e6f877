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

#include "trichar/verify.hpp"

#include <chrono>
#include <set>

#include "trichar/counting.hpp"

namespace trichar {

namespace {

Json codes_of(const Coords& c) {
  Json out = Json::array();
  for (Elem e : c) out.push_back(e.code);
  return out;
}

template <typename Map>
Json histogram_json(const Map& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

}  // namespace

Json to_json(const Spectrum& s) {
  Json out;
  out["mode"] = s.mode == Mode::affine ? "affine" : "projective";
  out["histogram"] = histogram_json(s.histogram);
  return out;
}

Json to_json(const Hyperplane& h) { return codes_of(h.form); }

Json to_json(const MinimalityReport& m) {
  Json out;
  out["t"] = m.t;
  out["is_intersection_set"] = m.is_intersection_set;
  out["is_minimal"] = m.is_minimal;
  out["inessential_points"] = m.inessential_points;
  Json witnesses = Json::array();
  for (const auto& [point, plane] : m.witnesses) {
    witnesses.push_back(Json{{"point", codes_of(point.coords)}, {"hyperplane", to_json(plane)}});
  }
  out["witnesses"] = std::move(witnesses);
  return out;
}

Json to_json(const WeightEnumerator& w) {
  Json out;
  out["n"] = w.n;
  out["k"] = w.k;
  out["weights"] = histogram_json(w.counts);
  return out;
}

Json to_json(const SigmaCensus& c) {
  Json out;
  out["sigma0"] = c.sigma0;
  out["sigma_plus"] = c.sigma_plus;
  out["sigma_minus"] = c.sigma_minus;
  return out;
}

Json to_json(const Erratum& e) {
  return Json{{"marker", kErratumMarker},
              {"claim", e.claim},
              {"printed", e.printed},
              {"corrected", e.corrected}};
}

Json to_json(const ExpectedProfile& p) {
  Json out;
  out["set_size"] = p.set_size;
  out["characters"] = p.characters;
  out["affine_counts"] = histogram_json(p.affine_counts);
  out["printed_counts"] = histogram_json(p.printed_counts);
  out["minimal_t"] = p.minimal_t;
  out["minimality_asserted"] = p.minimality_asserted;
  return out;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    default:
      return "open";
  }
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::incomplete:
      return "incomplete";
    default:
      return "theorem-applicability-open";
  }
}

int VerificationReport::exit_code() const {
  switch (status) {
    case Status::fail:
      return 1;
    case Status::incomplete:
      return 3;
    default:
      return 0;
  }
}

VerificationReport verify(const Params& params, const VerifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  VerificationReport report;
  const FieldTower& tw = params.tower();
  const Field& f = tw.field();
  const unsigned r = params.r();
  const std::uint64_t q = tw.q();
  const ParamClass cls = classify(params);
  // The even-q proofs need an eps basis, which GF(4) lacks.
  const bool open = q == 2;

  Json params_json;
  params_json["field"] = f.descriptor().to_string();
  params_json["q"] = q;
  params_json["r"] = r;
  params_json["a"] = params.a().code;
  params_json["b"] = params.b().code;
  Json class_json;
  class_json["tag"] = to_string(cls.tag);
  if (cls.discriminant) class_json["discriminant"] = cls.discriminant->code;
  if (cls.trace_bit) class_json["trace_bit"] = cls.trace_bit->code;

  Json notes = Json::array();
  if (open) {
    notes.push_back("q = 2: GF(4) has no eps basis; theorem expectations are reported, not asserted");
  }
  Json measured = Json::object();
  Json expected = Json::object();
  Json errata = Json::array();
  Json timing = Json::object();

  auto verdict = [&](const std::string& claim, bool ok, bool theorem, std::string note = "") {
    Outcome o = ok ? Outcome::pass : Outcome::fail;
    if (theorem && open) {
      note = (ok ? "measured agrees" : "measured disagrees") + (note.empty() ? "" : "; " + note);
      o = Outcome::open;
    }
    report.verdicts.push_back({claim, o, note});
  };
  auto add_errata = [&](const std::vector<Erratum>& list) {
    for (const Erratum& e : list) errata.push_back(to_json(e));
  };

  std::optional<ExpectedProfile> profile;
  try {
    profile = expected_profile(cls, params);
  } catch (const ParamError&) {
    notes.push_back("no closed-form profile for class " + to_string(cls.tag));
  }
  if (profile) {
    expected["profile"] = to_json(*profile);
    add_errata(profile->errata);
  }

  bool incomplete = false;
  std::string incomplete_reason;
  auto stage_start = Clock::now();
  auto stage_end = [&](const char* name) {
    const auto now = Clock::now();
    timing[name] = std::chrono::duration<double>(now - stage_start).count();
    stage_start = now;
  };

  try {
    const PointMultiset b = build_B(params);
    measured["set_size"] = b.size();
    verdict("set size is q^(2r-1)", b.size() == ipow(q, 2 * r - 1), false);
    stage_end("construction");

    std::optional<std::vector<Hyperplane>> planes;
    std::optional<std::vector<std::uint64_t>> sizes;
    auto affine_sizes = [&]() {
      if (!sizes) {
        planes = hyperplanes(f, r, Mode::affine);
        sizes = intersection_sizes(b, *planes);
      }
    };

    if (options.spectrum) {
      affine_sizes();
      const Spectrum spec = histogram_of(*sizes, Mode::affine);
      measured["spectrum"] = to_json(spec);
      const SpectrumIdentities ids = check_spectrum(b, spec);
      verdict("spectrum plane count and double counting", ids.ok(), false);

      std::set<std::uint64_t> vertical;
      for (std::size_t i = 0; i < planes->size(); ++i) {
        if ((*planes)[i].through_p_inf) vertical.insert((*sizes)[i]);
      }
      measured["vertical_characters"] = vertical;
      const std::uint64_t mid = ipow(q, 2 * r - 3);
      verdict("every hyperplane through P_inf meets B in q^(2r-3) points",
              vertical == std::set<std::uint64_t>{mid}, true);
      if (profile) {
        const bool corrected = profile->affine_counts != [&] {
          std::map<std::uint64_t, std::uint64_t> printed;
          for (const auto& [c, n] : profile->printed_counts) {
            printed[c] = static_cast<std::uint64_t>(n);
          }
          return printed;
        }();
        verdict("affine spectrum matches the class profile", spec.histogram == profile->affine_counts,
                true, corrected ? "expectation corrected, see errata" : "");
      }
      stage_end("spectrum");
    }

    if (options.minimality) {
      const MinimalityReport m = minimality_report(b);
      measured["minimality"] = to_json(m);
      if (profile) {
        verdict("minimum intersection t equals the lowest character", m.t == profile->minimal_t,
                true);
        if (profile->minimality_asserted) {
          verdict("minimal t-fold blocking set", m.is_minimal, true);
        }
      } else {
        verdict("intersection set", m.is_intersection_set, false);
      }
      stage_end("minimality");
    }

    if (options.code) {
      const std::uint64_t j = options.multiset.value_or(0);
      std::optional<Variant> variant;
      for (Variant v : {Variant::bare, Variant::multiset_j1, Variant::multiset_j2}) {
        if (multiplicity_of(v, q, r) == j) {
          variant = v;
          break;
        }
      }
      const PointMultiset s = j == 0 ? b : extend_multiset(b, j);
      const GeneratorMatrix g = generator_matrix(s);
      verdict("generator matrix has rank r+1", g.rank() == r + 1, false);
      report.matrix_text = g.export_text();
      const WeightEnumerator brute = weight_enumerator_bruteforce(g, options.budget);
      const WeightEnumerator derived = weight_enumerator_from_spectrum(s);
      measured["code"] = Json{{"multiplicity", j},
                              {"enumerator", to_json(brute)},
                              {"divisibility", divisibility(brute)}};
      report.enumerator = to_json(brute);
      verdict("brute-force enumerator equals spectrum-derived enumerator", brute == derived, false);
      verdict("enumerator identities (A_0, sum, mean weight)",
              check_enumerator(brute).ok() && check_enumerator(derived).ok(), false);
      verdict("every nonzero weight is divisible by q", divisibility(brute) % q == 0, true);

      const bool mb1 = cls.tag == ClassTag::Mb1Odd || cls.tag == ClassTag::Mb1Even;
      const std::size_t weights = brute.nonzero_weights().size();
      if (variant && profile && (*variant == Variant::bare || mb1)) {
        const ExpectedEnumerator ee = expected_enumerator(cls, params, *variant);
        expected["enumerator"] = to_json(ee.corrected);
        if (!ee.printed.empty()) expected["printed_enumerator"] = histogram_json(ee.printed);
        add_errata(ee.errata);
        verdict("enumerator matches the closed form", brute == ee.corrected, true,
                ee.errata.empty() ? "" : "expectation corrected, see errata");
        verdict(std::string("exactly ") + (j == 0 ? "4" : "3") + " nonzero weights",
                weights == (j == 0 ? 4u : 3u), true);
      } else if (profile) {
        const WeightEnumerator derived_profile = profile_enumerator(*profile, params, j);
        expected["enumerator"] = to_json(derived_profile);
        verdict("enumerator matches the profile-derived enumerator", brute == derived_profile, true,
                "no printed closed form for this multiplicity");
      }
      stage_end("code");
    }

    if (options.oracle) {
      bool in_b_ok = true;
      std::uint64_t members = 0;
      for_each_affine_point(f, r, [&](const AffinePoint& p) {
        const bool member = in_B(params, p);
        members += member;
        if (member != b.contains(p)) in_b_ok = false;
      });
      verdict("direct membership test agrees with the construction", in_b_ok && members == b.size(),
              false);

      const PointMultiset h = hermitian_affine(params);
      PointMultiset image(params.tower_ptr(), r);
      for (const auto& [point, mult] : h.support()) {
        image.add(phi(params, point.to_affine(), Direction::forward), mult);
      }
      verdict("phi maps the Hermitian set onto B", image == b, false);

      if (tw.has_eps_basis()) {
        affine_sizes();
        bool contract = true;
        for (std::size_t i = 0; i < planes->size(); ++i) {
          const Hyperplane& pl = (*planes)[i];
          if (pl.through_p_inf) continue;
          const AffineQuadric quad = reduce(params, pl.affine_view->m, pl.affine_view->d);
          if (count_points(quad, Where::affine, options.budget) != (*sizes)[i]) contract = false;
        }
        verdict("reduced quadric counts equal hyperplane sections", contract, false);

        const AffineQuadric base = reduce(params, Coords(r - 1, kZero), kZero);
        const QuadricClass qc = classify_quadric(base, options.budget);
        Json inf;
        inf["points"] = qc.infinity_count;
        inf["character"] = to_string(qc.character);
        if (qc.rank) inf["rank"] = *qc.rank;
        inf["description"] = qc.description;
        measured["quadric_at_infinity"] = std::move(inf);

        if (cls.tag == ClassTag::ThmC) {
          const SigmaCensus census = sigma_census(params, options.budget);
          measured["sigma_census"] = to_json(census);
          const std::uint64_t ext = (ipow(q, r + 1) - ipow(q, r)) / 2;
          verdict("sigma census", census.sigma_plus == ext && census.sigma_minus == ext &&
                                      census.sigma0 == ipow(q, 2 * r) - 2 * ext,
                  true);
        }
        if (cls.tag == ClassTag::Mb1Even) {
          const Elem alpha = alpha_invariant(params);
          const Elem tr = tw.absolute_trace(alpha);
          measured["alpha"] = Json{{"value", alpha.code}, {"trace", tr.code}};
          verdict("alpha invariant has trace 0", tr == kZero, true);
        }
      } else {
        notes.push_back("quadric reduction refused: no eps basis");
      }
      stage_end("oracle");
    }
  } catch (const BudgetExceeded& e) {
    incomplete = true;
    incomplete_reason = e.what();
  }

  bool any_fail = false, any_open = false;
  Json verdicts = Json::array();
  for (const Verdict& v : report.verdicts) {
    any_fail |= v.outcome == Outcome::fail;
    any_open |= v.outcome == Outcome::open;
    Json item{{"claim", v.claim}, {"verdict", to_string(v.outcome)}};
    if (!v.note.empty()) item["note"] = v.note;
    verdicts.push_back(std::move(item));
  }
  if (incomplete) {
    report.status = Status::incomplete;
  } else if (any_fail) {
    report.status = Status::fail;
  } else if (any_open) {
    report.status = Status::applicability_open;
  } else {
    report.status = Status::pass;
  }

  Json& out = report.json;
  out["params"] = std::move(params_json);
  out["class"] = std::move(class_json);
  out["notes"] = std::move(notes);
  out["measured"] = std::move(measured);
  out["expected"] = std::move(expected);
  out["errata"] = std::move(errata);
  out["verdicts"] = std::move(verdicts);
  out["status"] = to_string(report.status);
  if (incomplete) out["incomplete_reason"] = incomplete_reason;
  if (options.timing) out["timing"] = std::move(timing);
  return report;
}

}  // namespace trichar
