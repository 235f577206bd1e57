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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "ipb/bounds.hpp"
#include "ipb/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace ipb;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

GenConfig random_config(std::uint64_t seed, std::size_t count) {
  GenConfig c;
  c.master_seed = seed;
  c.count = count;
  c.n_range = {1, 8};
  c.d_range = {1, 8};
  c.field = FieldChoice::kBoth;
  return c;
}

// 1. A and B for the two canonical triples, read back from demo-remark output.
Outcome remark_reproduction() {
  const auto t0 = Clock::now();
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run({"ipbounds", "demo-remark"}, out, err);
  const double elapsed = seconds_since(t0);

  const std::regex line(R"(([0-9.,]+): A=([0-9.]+) B=([0-9.]+)  (A > B|B > A))");
  struct Expect {
    std::string label;
    double a, b;
    std::string order;
  };
  const std::vector<Expect> expected = {{"1,1,1", std::sqrt(6.0), 2.0, "A > B"},
                                        {"1,0.5,1", std::sqrt(3.0), 2.0, "B > A"}};
  const std::string text = out.str();
  std::vector<std::smatch> found;
  for (std::sregex_iterator it(text.begin(), text.end(), line), end; it != end; ++it) {
    found.push_back(*it);
  }
  Outcome o;
  o.pass = code == 0 && found.size() == expected.size() && elapsed < 1.0;
  double worst = 0.0;
  for (std::size_t k = 0; o.pass && k < expected.size(); ++k) {
    const double a = std::stod(found[k][2]);
    const double b = std::stod(found[k][3]);
    worst = std::max({worst, std::abs(a - expected[k].a), std::abs(b - expected[k].b)});
    o.pass = found[k][1] == expected[k].label && found[k][4] == expected[k].order;
  }
  o.pass = o.pass && worst <= 1e-12;
  o.detail = "max |error| " + fmt("%.2e", worst) + ", " + fmt("%.3f", elapsed) + " s";
  return o;
}

// 2. The full catalog on 10,000 random instances.
Outcome zero_violation_suite() {
  const auto t0 = Clock::now();
  const auto catalog = full_catalog();
  const auto report = run_suite(random_config(20260101, 10000), catalog, TolerancePolicy{}, 1);
  const double elapsed = seconds_since(t0);
  Outcome o;
  o.pass = report.total_violated() == 0 && elapsed < 60.0;
  o.detail = std::to_string(report.total_checked()) + " checks over " +
             std::to_string(catalog.size()) + " variants, " +
             std::to_string(report.total_violated()) + " violations, " + fmt("%.1f", elapsed) +
             " s";
  return o;
}

// 3. Direct norm (recomputed here) against the library's Gram expansion.
Outcome oracle_equivalence() {
  const GenConfig c = random_config(3, 1000);
  double worst = 0.0;
  for (std::size_t i = 0; i < c.count; ++i) {
    const auto g = generate_instance(c, i);
    const auto& v = *g.instance.vectors();
    const double direct =
        testing::naive_combination_norm_sq(g.coeffs, v.family.vectors(), v.family.dim());
    const double gram = combination_norm_sq(g.coeffs, g.instance.family_gram());
    const double scale = std::max(direct, gram);
    if (scale > 0.0) worst = std::max(worst, std::abs(direct - gram) / scale);
  }
  return {worst <= 1e-10, "worst relative gap " + fmt("%.2e", worst) + " over 1000 instances"};
}

Vector conjugate_fourier(const ProblemInstance& inst) {
  Vector c = inst.fourier_coefficients();
  for (auto& s : c) s = std::conj(s);
  return c;
}

// 4. Weighted pair-norm bound with c = conj(Fourier) against Boas-Bellman,
// and the square-root step back to the Fourier bounds.
Outcome mpf_reduction() {
  const GenConfig c = random_config(4, 1000);
  double worst = 0.0;
  auto gap = [&](double u, double v) {
    const double s = std::max(std::abs(u), std::abs(v));
    if (s > 0.0) worst = std::max(worst, std::abs(u - v) / s);
  };
  for (std::size_t i = 0; i < c.count; ++i) {
    const auto inst = generate_instance(c, i).instance;
    const Vector w = conjugate_fourier(inst);
    double sum_c2 = 0.0;
    for (const auto& s : w) sum_c2 += std::norm(s);
    const auto mpf = weighted_sum_bound(WeightedCoarseBound{1, std::nullopt}, w, inst);
    gap(mpf.rhs, sum_c2 * fourier_bound(BoasBellmanBound{}, inst).rhs);
    gap(std::sqrt(weighted_sum_bound(WeightedCoarseBound{2, std::nullopt}, w, inst).rhs),
        fourier_bound(FourierMaxBound{}, inst).rhs);
    gap(std::sqrt(weighted_sum_bound(WeightedCoarseBound{3, HoelderExponent(2)}, w, inst).rhs),
        fourier_bound(FourierHoelderBound{HoelderExponent(2)}, inst).rhs);
    gap(weighted_sum_bound(WeightedCoarseBound{4, std::nullopt}, w, inst).rhs,
        sum_c2 * fourier_bound(FourierSumBound{}, inst).rhs);
  }
  return {worst <= 1e-10, "worst relative gap " + fmt("%.2e", worst) + " over 1000 instances"};
}

// 5. Orthonormal families: the sum-form Fourier bound collapses to ||x||^2
// and Bessel is an equality for x in the span.
Outcome bessel_recovery() {
  testing::CaseSource src(5);
  double worst_rhs = 0.0;
  double worst_eq = 0.0;
  bool all_hold = true;
  for (int t = 0; t < 1000; ++t) {
    auto c = src.next(1, 8, 1, 8);
    if (c.y.size() > c.dim) c.y.resize(c.dim);
    const VectorFamily e = orthonormalize(VectorFamily(c.dim, c.y));
    const auto inst = ProblemInstance::from_vectors(c.field, c.x, e);
    const double xx = inst.x_norm_sq();
    worst_rhs = std::max(worst_rhs, std::abs(fourier_bound(FourierSumBound{}, inst).rhs - xx));
    all_hold = all_hold && fourier_bound(BesselBound{}, inst).holds;

    Vector inside(c.dim, Scalar(0.0));
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (std::size_t k = 0; k < c.dim; ++k) inside[k] += c.coeffs[i] * e[i][k];
    }
    const auto b = fourier_bound(BesselBound{}, ProblemInstance::from_vectors(c.field, inside, e));
    worst_eq = std::max(worst_eq, std::abs(b.lhs - b.rhs));
  }
  return {all_hold && worst_rhs <= 1e-10 && worst_eq <= 1e-10,
          "max |rhs - ||x||^2| " + fmt("%.2e", worst_rhs) + ", max in-span gap " +
              fmt("%.2e", worst_eq)};
}

// 6. Coarse >= fine for all nine selector pairs; sharp <= weak.
Outcome dominance_and_chain() {
  const GenConfig c = random_config(6, 1000);
  const std::vector<double> exps = {1.25, 1.5, 2.0, 3.0, 4.0};
  double worst = INFINITY;
  for (std::size_t i = 0; i < c.count; ++i) {
    const auto g = generate_instance(c, i);
    const GramMatrix& gram = g.instance.family_gram();
    const double p = exps[i % exps.size()];
    const double r = exps[(i / exps.size()) % exps.size()];
    const std::vector<DiagSelector> ds = {DiagSelector::max(),
                                          DiagSelector::hoelder(HoelderExponent(p)),
                                          DiagSelector::sum()};
    const std::vector<OffDiagSelector> os = {OffDiagSelector::max(),
                                             OffDiagSelector::hoelder(HoelderExponent(r)),
                                             OffDiagSelector::sum()};
    for (const auto& d : ds) {
      for (const auto& o : os) {
        worst = std::min(worst, coarse_bound(d, o, g.coeffs, gram).rhs -
                                    selector_bound(d, o, g.coeffs, gram).rhs);
      }
    }
    const auto pn = pair_norm_bounds(g.coeffs, gram);
    worst = std::min(worst, pn.weak.rhs - pn.sharp.rhs);
  }
  return {worst >= -1e-12, "min slack " + fmt("%.2e", worst)};
}

// 7. Closed-form pair power sum against the ordered double sum, and the
// p = 64 diagonal term against the max branch.
Outcome hoelder_identity_and_limits() {
  const GenConfig c = random_config(7, 1000);
  double worst_identity = 0.0;
  for (std::size_t i = 0; i < c.count; ++i) {
    const auto g = generate_instance(c, i);
    std::vector<double> a;
    for (const auto& s : g.coeffs) a.push_back(std::abs(s));
    for (double gamma : {1.0, 1.5, 2.0, 3.0}) {
      const double closed = std::pow(pair_power_sum(a, gamma), gamma);
      const double brute = testing::ordered_pair_sum(a, gamma);
      const double scale = std::max(closed, brute);
      if (scale > 0.0) worst_identity = std::max(worst_identity, std::abs(closed - brute) / scale);
    }
  }

  // Coefficient moduli drawn from [0.1, 1]: max/min ratio at most 10.
  testing::CaseSource src(77);
  double worst_limit = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const auto rc = src.next(1, 8);
    Vector a(rc.coeffs.size());
    for (auto& s : a) s = std::polar(src.uniform_real(0.1, 1.0), src.uniform_real(0.0, 6.283));
    const GramMatrix gram = gram_of_family(VectorFamily(rc.dim, rc.y));
    const double at64 = diag_term(DiagSelector::hoelder(HoelderExponent(64)), a, gram);
    const double max_branch = diag_term(DiagSelector::max(), a, gram);
    worst_limit = std::max(worst_limit, std::abs(at64 - max_branch) / max_branch);
  }
  return {worst_identity <= 1e-12 && worst_limit <= 0.05,
          "identity worst " + fmt("%.2e", worst_identity) + ", p=64 worst " +
              fmt("%.4f", worst_limit)};
}

// 8. Two CLI runs at different thread counts give identical CSV.
Outcome determinism() {
  auto run = [](const std::string& threads) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"ipbounds", "verify", "--seed", "42", "--count", "1000",
                               "--variants", "all", "--threads", threads},
                              out, err);
    return std::make_pair(code, out.str());
  };
  const auto first = run("1");
  const auto second = run("4");
  const bool same = first.second == second.second;
  return {first.first == 0 && second.first == 0 && same && !first.second.empty(),
          std::string(same ? "identical" : "different") + " CSV (" +
              std::to_string(first.second.size()) + " bytes), exit codes " +
              std::to_string(first.first) + "/" + std::to_string(second.first)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 remark reproduction", remark_reproduction},
      {"2 zero-violation suite", zero_violation_suite},
      {"3 oracle equivalence", oracle_equivalence},
      {"4 weighted reduction to Boas-Bellman", mpf_reduction},
      {"5 Bessel recovery", bessel_recovery},
      {"6 dominance and chain", dominance_and_chain},
      {"7 Hoelder identity and limits", hoelder_identity_and_limits},
      {"8 determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
