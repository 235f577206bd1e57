// Copyright 2026 The ipbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ipb/bounds.hpp"
#include "ipb/exponent_opt.hpp"
#include "ipb/instance_io.hpp"
#include "ipb/verify.hpp"

namespace ipb::cli {
namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

IntRange parse_range(const std::string& text, const char* flag) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size()) {
      throw InputError(std::string(flag) + " expects <min..max> or <n>, got '" + text + "'");
    }
    return v;
  };
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const int v = parse_int(text);
    return IntRange{v, v};
  }
  return IntRange{parse_int(std::string_view(text).substr(0, pos)),
                  parse_int(std::string_view(text).substr(pos + 2))};
}

FieldChoice parse_field(const std::string& text) {
  if (text == "real") return FieldChoice::kReal;
  if (text == "complex") return FieldChoice::kComplex;
  if (text == "both") return FieldChoice::kBoth;
  throw InputError("--field must be real, complex or both");
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << content;
}

// Flags shared by the generating subcommands.
struct GenFlags {
  std::uint64_t seed = 0;
  std::size_t count = 1000;
  std::string n = "1..8";
  std::string dim = "1..8";
  std::string field = "both";
  bool structured = false;

  void attach(CLI::App* app) {
    app->add_option("--seed", seed, "Master seed (u64)");
    app->add_option("--count", count, "Number of instances");
    app->add_option("--n", n, "Family size range <min..max>");
    app->add_option("--dim", dim, "Dimension range <min..max>");
    app->add_option("--field", field, "real|complex|both");
    app->add_flag("--structured", structured, "Mix in positive scalar triples in R^1");
  }

  GenConfig config() const {
    GenConfig c;
    c.master_seed = seed;
    c.count = count;
    c.n_range = parse_range(n, "--n");
    c.d_range = parse_range(dim, "--dim");
    c.field = parse_field(field);
    c.structured_families = structured;
    try {
      c.validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return c;
  }
};

struct TolFlags {
  double rel = 1e-9;
  double abs = 1e-12;

  void attach(CLI::App* app) {
    app->add_option("--tol-rel", rel, "Relative slack tolerance");
    app->add_option("--tol-abs", abs, "Absolute slack tolerance");
  }
  TolerancePolicy policy() const {
    if (!(rel >= 0.0) || !(abs >= 0.0)) throw InputError("tolerances must be nonnegative");
    return TolerancePolicy{abs, rel};
  }
};

struct LoadedInstance {
  ProblemInstance instance;
  std::optional<Vector> coeffs;

  std::optional<std::span<const Scalar>> coeff_span() const {
    if (!coeffs) return std::nullopt;
    return std::span<const Scalar>(*coeffs);
  }
};

LoadedInstance load(const std::string& path) {
  InstanceFile file = read_instance_file(path);
  ProblemInstance inst = validate_instance(file.candidate);
  if (file.coeffs && file.coeffs->size() != inst.size()) {
    throw InputError("coeffs has length " + std::to_string(file.coeffs->size()) +
                     ", family has " + std::to_string(inst.size()) + " members");
  }
  if (file.coeffs && inst.field() == FieldMode::kReal) {
    for (const auto& c : *file.coeffs) {
      if (c.imag() != 0.0) throw InputError("complex coefficient in a real-field instance");
    }
  }
  return LoadedInstance{std::move(inst), std::move(file.coeffs)};
}

std::string fixed15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15f", v);
  return buf;
}

int cmd_gen(const GenFlags& g, const std::string& out_dir, bool as_gram, std::ostream& out) {
  const GenConfig config = g.config();
  std::filesystem::create_directories(out_dir);
  for (std::size_t i = 0; i < config.count; ++i) {
    const GeneratedInstance inst = generate_instance(config, i);
    const auto path = std::filesystem::path(out_dir) / ("instance_" + std::to_string(i) + ".json");
    write_file(path.string(), as_gram ? instance_to_gram_json(inst.instance, inst.coeffs)
                                      : instance_to_json(inst.instance, inst.coeffs));
  }
  out << "wrote " << config.count << " instances to " << out_dir << "\n";
  return kExitOk;
}

int cmd_verify(const GenFlags& g, const TolFlags& t, const std::string& variants,
               const std::string& json_path, const std::string& csv_path, unsigned threads,
               std::ostream& out) {
  const GenConfig config = g.config();
  const auto catalog = parse_variant_list(variants);
  const SuiteReport report = run_suite(config, catalog, t.policy(), threads);
  const std::string csv = report_csv(report);
  if (csv_path.empty()) {
    out << csv;
  } else {
    write_file(csv_path, csv);
  }
  if (!json_path.empty()) write_file(json_path, report_json(report));
  return report.total_violated() == 0 ? kExitOk : kExitViolation;
}

int cmd_check_file(const std::string& path, const TolFlags& t, const std::string& variants,
                   std::ostream& out) {
  const LoadedInstance li = load(path);
  const TolerancePolicy policy = t.policy();
  bool violated = false;
  out << "variant,status,lhs,rhs,slack\n";
  for (const auto& v : parse_variant_list(variants)) {
    const std::string name = variant_name(v);
    if (auto reason = incompatibility(v, li.instance, li.coeffs.has_value())) {
      out << name << ",skipped (" << *reason << "),,,\n";
      continue;
    }
    const BoundEvaluation e = evaluate(v, li.instance, li.coeff_span(), policy);
    violated = violated || !e.holds;
    out << name << ',' << (e.holds ? "held" : "violated") << ',' << format_double(e.lhs) << ','
        << format_double(e.rhs) << ',' << format_double(e.slack) << '\n';
  }
  return violated ? kExitViolation : kExitOk;
}

int cmd_rank(const std::string& path, const std::string& variants, const std::string& csv_path,
             std::ostream& out, std::ostream& err) {
  const LoadedInstance li = load(path);
  std::vector<BoundVariant> usable;
  for (const auto& v : parse_variant_list(variants)) {
    if (auto reason = incompatibility(v, li.instance, li.coeffs.has_value())) {
      err << "skipping " << variant_name(v) << ": " << *reason << "\n";
      continue;
    }
    usable.push_back(v);
  }
  if (usable.empty()) throw InputError("no variant in the list applies to this instance");
  const TightnessRanking ranking = rank_variants(li.instance, li.coeff_span(), usable);
  const std::string csv = ranking_csv(ranking);
  if (csv_path.empty()) {
    out << csv;
  } else {
    write_file(csv_path, csv);
  }
  for (const auto& e : ranking.entries) {
    if (e.rhs < ranking.lhs) return kExitViolation;
  }
  return kExitOk;
}

int cmd_optimize(const std::string& path, const std::string& family_id, const std::string& grid,
                 const std::string& csv_path, std::ostream& out) {
  const LoadedInstance li = load(path);
  const ExponentFamily family(family_id);
  if (auto reason =
          incompatibility(family.at(HoelderExponent(2.0)), li.instance, li.coeffs.has_value())) {
    throw InputError(family_id + " does not apply to this instance: " + *reason);
  }
  std::vector<double> points;
  if (grid.empty()) {
    points = log_grid(1.001, kMaxHoelderExponent, 16);
  } else {
    std::stringstream ss(grid);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      double v = 0.0;
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
        throw InputError("--grid expects a comma-separated list of exponents");
      }
      points.push_back(v);
    }
  }
  const ExponentProfile profile = profile_exponent(family, li.instance, li.coeff_span(), points);
  const OptimizedExponent best = optimize_exponent(family, li.instance, li.coeff_span());
  if (!csv_path.empty()) write_file(csv_path, profile_csv(profile));

  out << "family,exponent,value,at_boundary\n";
  out << family.id() << ',' << format_double(best.exponent) << ',' << format_double(best.value)
      << ',' << (best.at_boundary ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_demo_remark(std::ostream& out) {
  out << "Boas-Bellman correction A = (sum_{i!=j} |(y_i,y_j)|^2)^(1/2)\n"
      << "(n-1)-max correction      B = (n-1) max_{i!=j} |(y_i,y_j)|\n"
      << "family y = (a, b, c) in R^1, x = 1\n\n";
  for (const auto& w : canonical_triples()) {
    const auto& q = w.quantities;
    const char* order = q.a > q.b ? "A > B" : (q.b > q.a ? "B > A" : "A = B");
    const double bb = fourier_bound(BoasBellmanBound{}, w.instance).rhs;
    const double sum = fourier_bound(FourierSumBound{}, w.instance).rhs;
    out << w.label.substr(w.label.find(':') + 1) << ": A=" << fixed15(q.a)
        << " B=" << fixed15(q.b) << "  " << order << "  (bb:1.2 rhs=" << format_double(bb)
        << ", bb:4.5 rhs=" << format_double(sum) << ")\n";
  }
  out << "\nneither bound dominates the other\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate, verify and rank Bessel / Boas-Bellman type bounds", "ipbounds"};
  app.require_subcommand(1, 1);

  GenFlags gen_flags;
  std::string gen_out = "instances";
  bool gen_as_gram = false;
  auto* gen = app.add_subcommand("gen", "Write seeded random instance files");
  gen_flags.attach(gen);
  gen->add_option("--out", gen_out, "Output directory");
  gen->add_flag("--as-gram", gen_as_gram, "Write bordered Gram matrices instead of vectors");

  GenFlags verify_flags;
  TolFlags verify_tol;
  std::string verify_variants = "all";
  std::string verify_json;
  std::string verify_csv;
  unsigned verify_threads = 1;
  auto* verify = app.add_subcommand("verify", "Check the variant catalog on random instances");
  verify_flags.attach(verify);
  verify_tol.attach(verify);
  verify->add_option("--variants", verify_variants, "Comma list of variant names, or all");
  verify->add_option("--json", verify_json, "Write the full JSON report here");
  verify->add_option("--csv", verify_csv, "Write the CSV summary here instead of stdout");
  verify->add_option("--threads", verify_threads, "Worker threads (0 = all cores)");

  std::string check_path;
  TolFlags check_tol;
  std::string check_variants = "all";
  auto* check = app.add_subcommand("check-file", "Validate one instance file and check variants");
  check->add_option("file", check_path, "Instance JSON")->required();
  check_tol.attach(check);
  check->add_option("--variants", check_variants, "Comma list of variant names, or all");

  std::string rank_path;
  std::string rank_variants_spec = "all";
  std::string rank_csv;
  auto* rank = app.add_subcommand("rank", "Rank variants by right-hand side on one instance");
  rank->add_option("file", rank_path, "Instance JSON")->required();
  rank->add_option("--variants", rank_variants_spec, "Comma list of variant names, or all");
  rank->add_option("--csv", rank_csv, "Write the ranking here instead of stdout");

  std::string opt_path;
  std::string opt_family = "lemma21:holder:*:sum";
  std::string opt_grid;
  std::string opt_csv;
  auto* optimize = app.add_subcommand("optimize", "Profile and minimize a Hoelder family");
  optimize->add_option("file", opt_path, "Instance JSON")->required();
  optimize->add_option("--family", opt_family, "Variant name with '*' for the free exponent");
  optimize->add_option("--grid", opt_grid, "Comma-separated profile exponents");
  optimize->add_option("--csv", opt_csv, "Write the exponent,value profile here");

  auto* demo = app.add_subcommand("demo-remark", "Show that A and B admit both orderings");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ipbounds");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInvalidInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_flags, gen_out, gen_as_gram, out);
    if (verify->parsed()) {
      return cmd_verify(verify_flags, verify_tol, verify_variants, verify_json, verify_csv,
                        verify_threads, out);
    }
    if (check->parsed()) return cmd_check_file(check_path, check_tol, check_variants, out);
    if (rank->parsed()) return cmd_rank(rank_path, rank_variants_spec, rank_csv, out, err);
    if (optimize->parsed()) return cmd_optimize(opt_path, opt_family, opt_grid, opt_csv, out);
    if (demo->parsed()) return cmd_demo_remark(out);
  } catch (const std::invalid_argument& e) {
    // Space, exponent, variant and format errors all derive from this.
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace ipb::cli
