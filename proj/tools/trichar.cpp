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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trichar/codes.hpp"
#include "trichar/counting.hpp"
#include "trichar/field.hpp"
#include "trichar/geometry.hpp"
#include "trichar/quadric.hpp"
#include "trichar/varieties.hpp"
#include "trichar/verify.hpp"

namespace {

using namespace trichar;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

struct FieldArgs {
  std::uint64_t q = 0;
  std::string field;

  TowerPtr tower() const {
    if (!field.empty()) return FieldTower::from_descriptor(FieldDescriptor::parse(field));
    if (q == 0) throw ParamError("one of --q or --field is required");
    return FieldTower::for_q(q);
  }
};

struct ParamArgs {
  FieldArgs field;
  unsigned r = 0;
  std::optional<std::uint64_t> a;
  std::optional<std::uint64_t> b;
  std::string search_class;

  Params params() const {
    const TowerPtr tw = field.tower();
    if (!search_class.empty()) {
      const auto tag = parse_class_tag(search_class);
      if (!tag) throw ParamError("unknown class tag " + search_class);
      auto found = trichar::search_class(tw, r, *tag);
      if (!found) throw ParamError("no (a, b) of class " + search_class);
      return *found;
    }
    if (!a || !b) throw ParamError("--a and --b are required unless --search-class is given");
    return Params(tw, r, tw->field().element(*a), tw->field().element(*b));
  }
};

void add_field_options(CLI::App* cmd, FieldArgs& args) {
  cmd->add_option("--q", args.q, "Order of the subfield GF(q)");
  cmd->add_option("--field", args.field, "GF(q^2) as p^k/c0,c1,...,ck");
}

void add_param_options(CLI::App* cmd, ParamArgs& args, bool search = true) {
  add_field_options(cmd, args.field);
  cmd->add_option("--r", args.r, "Dimension r")->required();
  cmd->add_option("--a", args.a, "Encoding of a");
  cmd->add_option("--b", args.b, "Encoding of b");
  if (search) {
    cmd->add_option("--search-class", args.search_class,
                    "Use the first (a, b) of this class instead of --a/--b");
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void write_outputs(const std::filesystem::path& dir, const VerificationReport& rep) {
  std::filesystem::create_directories(dir);
  write_file(dir / "report.json", rep.json.dump(2) + "\n");
  if (rep.matrix_text) write_file(dir / "matrix.txt", *rep.matrix_text);
  if (rep.enumerator) write_file(dir / "enumerator.json", rep.enumerator->dump(2) + "\n");
}

std::string invariant_of(const ParamClass& cls) {
  if (cls.discriminant) return std::to_string(cls.discriminant->code);
  if (cls.trace_bit) return std::to_string(cls.trace_bit->code);
  return "";
}

int cmd_classify(const ParamArgs& args) {
  const Params p = args.params();
  const ParamClass cls = classify(p);
  std::cout << to_string(cls.tag) << '\n';
  if (cls.discriminant) std::cout << "discriminant " << cls.discriminant->code << '\n';
  if (cls.trace_bit) std::cout << "trace " << cls.trace_bit->code << '\n';
  return kExitPass;
}

int cmd_search(const ParamArgs& args, const std::string& tag_name) {
  const auto tag = parse_class_tag(tag_name);
  if (!tag) throw ParamError("unknown class tag " + tag_name);
  const TowerPtr tw = args.field.tower();
  const auto found = search_class(tw, args.r, *tag);
  if (!found) {
    std::cerr << "no (a, b) of class " << tag_name << '\n';
    return kExitFail;
  }
  std::cout << "a,b\n" << found->a().code << ',' << found->b().code << '\n';
  return kExitPass;
}

int cmd_sweep(const ParamArgs& args, const std::string& filter) {
  std::optional<ClassTag> only;
  if (!filter.empty()) {
    only = parse_class_tag(filter);
    if (!only) throw ParamError("unknown class tag " + filter);
  }
  const TowerPtr tw = args.field.tower();
  const std::uint32_t Q = tw->q2();
  std::map<std::string, std::uint64_t> totals;
  std::cout << "a,b,class,invariant\n";
  for (std::uint32_t a = 1; a < Q; ++a) {
    for (std::uint32_t b = 0; b < Q; ++b) {
      if (tw->in_subfield(Elem{b})) continue;
      const Params p(tw, args.r, Elem{a}, Elem{b});
      const ParamClass cls = classify(p);
      if (only && cls.tag != *only) continue;
      ++totals[to_string(cls.tag)];
      std::cout << a << ',' << b << ',' << to_string(cls.tag) << ',' << invariant_of(cls) << '\n';
    }
  }
  std::cout << "\nclass,count\n";
  for (const auto& [name, count] : totals) std::cout << name << ',' << count << '\n';
  return kExitPass;
}

int cmd_field_dump(const FieldArgs& args) {
  const TowerPtr tw = args.tower();
  const Field& f = tw->field();
  std::cout << "# field=" << f.descriptor().to_string() << '\n';
  std::cout << "op,x,y,result\n";
  for (const char* op : {"add", "mul"}) {
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      for (std::uint32_t y = 0; y < f.order(); ++y) {
        const Elem z = op[0] == 'a' ? f.add(Elem{x}, Elem{y}) : f.mul(Elem{x}, Elem{y});
        std::cout << op << ',' << x << ',' << y << ',' << z.code << '\n';
      }
    }
  }
  return kExitPass;
}

std::vector<std::uint64_t> parse_list(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(std::stoull(item));
  }
  return out;
}

int cmd_oracle_reduce(const ParamArgs& args, const std::string& m_text, std::uint64_t d_code) {
  const Params p = args.params();
  const Field& f = p.field();
  Coords m;
  for (std::uint64_t code : parse_list(m_text)) m.push_back(f.element(code));
  if (m.empty()) m.assign(p.r() - 1, kZero);
  const AffineQuadric quad = reduce(p, m, f.element(d_code));
  std::cout << "term,i,j,value\n";
  for (std::size_t i = 0; i < quad.variables(); ++i) {
    for (std::size_t j = i; j < quad.variables(); ++j) {
      std::cout << "quad," << i << ',' << j << ',' << quad.quad(i, j).code << '\n';
    }
  }
  for (std::size_t i = 0; i < quad.variables(); ++i) {
    std::cout << "lin," << i << ",," << quad.lin(i).code << '\n';
  }
  std::cout << "const,,," << quad.constant().code << '\n';
  return kExitPass;
}

int cmd_oracle_census(const ParamArgs& args, const Budget& budget) {
  print_json(to_json(sigma_census(args.params(), budget)));
  return kExitPass;
}

int cmd_spectrum(const ParamArgs& args, bool projective) {
  const Params p = args.params();
  const PointMultiset b = build_B(p);
  print_json(to_json(spectrum(b, projective ? Mode::projective : Mode::affine)));
  return kExitPass;
}

int cmd_minimality(const ParamArgs& args) {
  const Params p = args.params();
  print_json(to_json(minimality_report(build_B(p))));
  return kExitPass;
}

VerifyOptions all_checks(const Budget& budget, bool timing) {
  VerifyOptions o;
  o.spectrum = o.minimality = o.code = o.oracle = true;
  o.budget = budget;
  o.timing = timing;
  return o;
}

int cmd_verify(const ParamArgs& args, VerifyOptions options, const std::string& out_dir) {
  if (!options.spectrum && !options.minimality && !options.code && !options.oracle) {
    const auto j = options.multiset;
    options = all_checks(options.budget, options.timing);
    options.multiset = j;
  }
  if (options.multiset) options.code = true;
  const Params p = args.params();
  const VerificationReport rep = verify(p, options);
  print_json(rep.json);
  if (!out_dir.empty()) write_outputs(out_dir, rep);
  return rep.exit_code();
}

struct Instance {
  std::string name;
  std::uint64_t q;
  unsigned r;
  std::uint32_t a;
  std::uint32_t b;
  std::optional<std::uint64_t> multiset;
};

std::uint32_t first_norm_two(const TowerPtr& tw) {
  const Field& f = tw->field();
  for (std::uint32_t a = 1; a < f.order(); ++a) {
    if (tw->norm(Elem{a}) == f.constant(2)) return a;
  }
  throw Error("no element of norm 2");
}

int cmd_verify_all(const Budget& budget, bool timing, const std::string& out_dir) {
  const std::vector<Instance> instances{
      {"thmb-q3-r3", 3, 3, 1, 3, std::nullopt},
      {"thmc-q3-r4", 3, 4, 1, 3, std::nullopt},
      {"thma-q5-r3", 5, 3, first_norm_two(FieldTower::for_q(5)), 5, std::nullopt},
      {"mb1odd-q3-r4", 3, 4, 4, 3, std::nullopt},
      {"multiset-q2-r4-j4", 2, 4, 1, 2, 4},
      {"multiset-q2-r4-j28", 2, 4, 1, 2, 28},
  };
  int worst = kExitPass;
  for (const Instance& inst : instances) {
    const TowerPtr tw = FieldTower::for_q(inst.q);
    const Params p(tw, inst.r, Elem{inst.a}, Elem{inst.b});
    VerifyOptions options = all_checks(budget, timing);
    if (inst.multiset) {
      options = VerifyOptions{};
      options.spectrum = options.code = true;
      options.budget = budget;
      options.timing = timing;
      options.multiset = inst.multiset;
    }
    const VerificationReport rep = verify(p, options);
    std::cout << inst.name << ' ' << to_string(rep.status) << '\n';
    for (const Verdict& v : rep.verdicts) {
      if (v.outcome != Outcome::pass) {
        std::cout << "  " << to_string(v.outcome) << ": " << v.claim
                  << (v.note.empty() ? "" : " (" + v.note + ")") << '\n';
      }
    }
    if (!out_dir.empty()) write_outputs(std::filesystem::path(out_dir) / inst.name, rep);
    worst = std::max(worst, rep.exit_code());
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-character sets B(a,b) over GF(q^2): construction, verification, codes"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t budget_limit = Budget::kDefault;
  app.add_option("--budget", budget_limit, "Operation budget for exhaustive stages");

  ParamArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Class tag of (a, b)");
  add_param_options(classify_cmd, classify_args);

  ParamArgs search_args;
  std::string search_tag;
  auto* search_cmd = app.add_subcommand("search", "First (a, b) of a class, lexicographically");
  add_field_options(search_cmd, search_args.field);
  search_cmd->add_option("--r", search_args.r, "Dimension r")->required();
  search_cmd->add_option("--class", search_tag, "Class tag")->required();

  ParamArgs sweep_args;
  std::string sweep_filter;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every (a, b) as CSV");
  add_field_options(sweep_cmd, sweep_args.field);
  sweep_cmd->add_option("--r", sweep_args.r, "Dimension r")->required();
  sweep_cmd->add_option("--class", sweep_filter, "Only rows of this class");

  FieldArgs field_args;
  auto* field_cmd = app.add_subcommand("field", "Field tables");
  field_cmd->require_subcommand(1);
  auto* dump_cmd = field_cmd->add_subcommand("dump", "Addition and multiplication tables as CSV");
  add_field_options(dump_cmd, field_args);

  auto* oracle_cmd = app.add_subcommand("oracle", "Quadric oracle");
  oracle_cmd->require_subcommand(1);
  ParamArgs reduce_args;
  std::string reduce_m;
  std::uint64_t reduce_d = 0;
  auto* reduce_cmd = oracle_cmd->add_subcommand("reduce", "Quadric of the section x_r = m.x + d");
  add_param_options(reduce_cmd, reduce_args);
  reduce_cmd->add_option("--m", reduce_m, "Comma-separated encodings m_1,...,m_{r-1}");
  reduce_cmd->add_option("--d", reduce_d, "Encoding of d");
  ParamArgs census_args;
  auto* census_cmd = oracle_cmd->add_subcommand("census", "Sigma census (class ThmC)");
  add_param_options(census_cmd, census_args);

  ParamArgs spectrum_args;
  bool projective = false;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Hyperplane intersection spectrum of B");
  add_param_options(spectrum_cmd, spectrum_args);
  spectrum_cmd->add_flag("--projective", projective, "All hyperplanes of PG(r, q^2)");

  ParamArgs minimality_args;
  auto* minimality_cmd = app.add_subcommand("minimality", "Minimal blocking set check of B");
  add_param_options(minimality_cmd, minimality_args);

  ParamArgs verify_args;
  VerifyOptions verify_options;
  std::string verify_out;
  std::uint64_t multiset_j = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Verification report as JSON");
  add_param_options(verify_cmd, verify_args);
  verify_cmd->add_flag("--spectrum", verify_options.spectrum, "Affine spectrum checks");
  verify_cmd->add_flag("--minimality", verify_options.minimality, "Minimality checks");
  verify_cmd->add_flag("--code", verify_options.code, "Code and enumerator checks");
  verify_cmd->add_flag("--oracle", verify_options.oracle, "Membership and quadric oracles");
  auto* multiset_opt =
      verify_cmd->add_option("--multiset", multiset_j, "Give P_inf multiplicity j");
  verify_cmd->add_flag("--timing", verify_options.timing, "Include stage timings");
  verify_cmd->add_option("--out", verify_out, "Write report.json, matrix.txt, enumerator.json");

  bool all_timing = false;
  std::string all_out;
  std::uint64_t all_budget = 4'000'000'000ULL;
  auto* all_cmd = app.add_subcommand("verify-all", "Run the full acceptance matrix");
  all_cmd->add_flag("--timing", all_timing, "Include stage timings");
  all_cmd->add_option("--out", all_out, "Write one report directory per instance");
  all_cmd->add_option("--budget", all_budget, "Operation budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }

  const Budget budget{budget_limit};
  try {
    if (*classify_cmd) return cmd_classify(classify_args);
    if (*search_cmd) return cmd_search(search_args, search_tag);
    if (*sweep_cmd) return cmd_sweep(sweep_args, sweep_filter);
    if (*dump_cmd) return cmd_field_dump(field_args);
    if (*reduce_cmd) return cmd_oracle_reduce(reduce_args, reduce_m, reduce_d);
    if (*census_cmd) return cmd_oracle_census(census_args, budget);
    if (*spectrum_cmd) return cmd_spectrum(spectrum_args, projective);
    if (*minimality_cmd) return cmd_minimality(minimality_args);
    if (*verify_cmd) {
      if (multiset_opt->count() > 0) verify_options.multiset = multiset_j;
      verify_options.budget = budget;
      return cmd_verify(verify_args, verify_options, verify_out);
    }
    if (*all_cmd) return cmd_verify_all(Budget{all_budget}, all_timing, all_out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParamError& e) {
    std::cerr << "invalid parameters: " << e.what() << '\n';
    return kExitInput;
  } catch (const FieldError& e) {
    std::cerr << "invalid field: " << e.what() << '\n';
    return kExitInput;
  } catch (const NonSpanningError& e) {
    std::cerr << "non-spanning: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitPass;
}
