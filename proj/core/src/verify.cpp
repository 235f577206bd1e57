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

#include "ipb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <thread>

namespace ipb {
namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

int draw_int(std::mt19937_64& rng, IntRange r) {
  return std::uniform_int_distribution<int>(r.min, r.max)(rng);
}

Scalar draw_scalar(std::mt19937_64& rng, FieldMode field, double scale) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  const double im = field == FieldMode::kComplex ? normal(rng) : 0.0;
  return Scalar(scale * re, scale * im);
}

Vector draw_vector(std::mt19937_64& rng, std::size_t dim, FieldMode field, double scale) {
  Vector v(dim);
  for (auto& s : v) s = draw_scalar(rng, field, scale);
  return v;
}

GeneratedInstance structured_instance(std::mt19937_64& rng, const GenConfig& config,
                                      std::size_t index) {
  std::normal_distribution<double> normal;
  std::vector<Vector> y;
  for (int k = 0; k < 3; ++k) y.push_back({Scalar(config.scale * std::exp(0.75 * normal(rng)))});
  Vector x = draw_vector(rng, 1, FieldMode::kReal, config.scale);
  Vector coeffs = draw_vector(rng, 3, FieldMode::kReal, config.scale);
  return GeneratedInstance{
      index, ProblemInstance::from_vectors(FieldMode::kReal, std::move(x), VectorFamily(1, y)),
      std::move(coeffs)};
}

// Margin below which A and B count as tied.
bool strictly_greater(double u, double v) { return u - v > 1e-12 * std::max(1.0, u + v); }

}  // namespace

void GenConfig::validate() const {
  if (n_range.min < 0 || n_range.min > n_range.max) {
    throw std::invalid_argument("n range must satisfy 0 <= min <= max");
  }
  if (d_range.min < 1 || d_range.min > d_range.max) {
    throw std::invalid_argument("dimension range must satisfy 1 <= min <= max");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("scale must be positive and finite");
  }
  if (count == 0) throw std::invalid_argument("count must be at least 1");
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t index) {
  return splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(index)));
}

GeneratedInstance generate_instance(const GenConfig& config, std::size_t index) {
  config.validate();
  if (index >= config.count) {
    throw std::out_of_range("instance index " + std::to_string(index) + " >= count " +
                            std::to_string(config.count));
  }
  std::mt19937_64 rng(derive_seed(config.master_seed, index));

  if (config.structured_families && index % 2 == 1) {
    return structured_instance(rng, config, index);
  }

  FieldMode field = FieldMode::kReal;
  switch (config.field) {
    case FieldChoice::kReal:
      field = FieldMode::kReal;
      break;
    case FieldChoice::kComplex:
      field = FieldMode::kComplex;
      break;
    case FieldChoice::kBoth:
      field = std::bernoulli_distribution(0.5)(rng) ? FieldMode::kComplex : FieldMode::kReal;
      break;
  }
  const auto n = static_cast<std::size_t>(draw_int(rng, config.n_range));
  const auto d = static_cast<std::size_t>(draw_int(rng, config.d_range));

  Vector x = draw_vector(rng, d, field, config.scale);
  std::vector<Vector> ys;
  ys.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ys.push_back(draw_vector(rng, d, field, config.scale));
  Vector coeffs = draw_vector(rng, n, field, config.scale);

  VectorFamily family(d, std::move(ys));
  const std::size_t k = config.orthonormal_every;
  if (k > 0 && index % k == k - 1 && n >= 1 && n <= d) {
    try {
      family = orthonormalize(family);
    } catch (const RankDeficient&) {
      // keep the raw draw; probability zero for continuous samples
    }
  }
  return GeneratedInstance{index,
                           ProblemInstance::from_vectors(field, std::move(x), std::move(family)),
                           std::move(coeffs)};
}

VerificationResult check_variant(const BoundVariant& variant, const GeneratedInstance& inst,
                                 const TolerancePolicy& policy) {
  const auto start = std::chrono::steady_clock::now();
  VerificationResult r;
  r.instance_id = inst.id;
  r.variant = variant_name(variant);
  if (auto reason = incompatibility(variant, inst.instance, true)) {
    r.skip_reason = std::move(*reason);
  } else {
    try {
      r.evaluation = evaluate(variant, inst.instance, std::span<const Scalar>(inst.coeffs), policy);
    } catch (const std::exception& e) {
      r.error = e.what();
    }
  }
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

std::size_t SuiteReport::total_checked() const {
  std::size_t s = 0;
  for (const auto& t : totals) s += t.checked;
  return s;
}

std::size_t SuiteReport::total_violated() const {
  std::size_t s = 0;
  for (const auto& t : totals) s += t.violated;
  return s;
}

SuiteReport run_suite(const GenConfig& config, std::span<const BoundVariant> variants,
                      const TolerancePolicy& policy, unsigned threads) {
  config.validate();

  // Deduplicate and order by name; totals are reported in this order.
  std::map<std::string, BoundVariant> by_name;
  for (const auto& v : variants) by_name.emplace(variant_name(v), v);
  std::vector<std::string> names;
  std::vector<BoundVariant> ordered;
  for (const auto& [name, v] : by_name) {
    names.push_back(name);
    ordered.push_back(v);
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  auto fresh_totals = [&] {
    std::vector<VariantTotals> t(names.size());
    for (std::size_t k = 0; k < names.size(); ++k) {
      t[k].variant = names[k];
      t[k].min_slack = kInf;
      t[k].min_rel_slack = kInf;
    }
    return t;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.count));

  // Counts add and minima commute, so per-worker accumulation merged in any
  // order gives the same totals; violations are sorted afterwards.
  std::vector<std::vector<VariantTotals>> partial(threads, fresh_totals());
  std::vector<std::vector<Violation>> partial_violations(threads);
  std::atomic<std::size_t> next{0};

  auto worker = [&](unsigned w) {
    auto& totals = partial[w];
    auto& violations = partial_violations[w];
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= config.count) return;
      const GeneratedInstance inst = generate_instance(config, index);
      for (std::size_t k = 0; k < ordered.size(); ++k) {
        VerificationResult r = check_variant(ordered[k], inst, policy);
        VariantTotals& t = totals[k];
        if (r.skipped()) {
          ++t.skipped;
          continue;
        }
        ++t.checked;
        if (r.evaluation) {
          t.min_slack = std::min(t.min_slack, r.evaluation->slack);
          t.min_rel_slack = std::min(t.min_rel_slack, r.evaluation->relative_slack());
        }
        if (r.violated()) {
          ++t.violated;
          violations.push_back(Violation{index, names[k], std::move(r.evaluation),
                                         std::move(r.error), inst.instance, inst.coeffs});
        } else {
          ++t.held;
        }
      }
    }
  };

  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  SuiteReport report{config, policy, fresh_totals(), {}};
  for (unsigned w = 0; w < threads; ++w) {
    for (std::size_t k = 0; k < names.size(); ++k) {
      VariantTotals& dst = report.totals[k];
      const VariantTotals& src = partial[w][k];
      dst.checked += src.checked;
      dst.held += src.held;
      dst.violated += src.violated;
      dst.skipped += src.skipped;
      dst.min_slack = std::min(dst.min_slack, src.min_slack);
      dst.min_rel_slack = std::min(dst.min_rel_slack, src.min_rel_slack);
    }
    for (auto& v : partial_violations[w]) report.violations.push_back(std::move(v));
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.instance_id, a.variant) < std::tie(b.instance_id, b.variant);
            });
  return report;
}

std::vector<IncomparabilityWitness> canonical_triples() {
  std::vector<IncomparabilityWitness> out;
  const std::vector<std::pair<std::string, std::vector<double>>> triples = {
      {"canonical:1,1,1", {1.0, 1.0, 1.0}},
      {"canonical:1,0.5,1", {1.0, 0.5, 1.0}},
  };
  for (const auto& [label, values] : triples) {
    std::vector<Vector> y;
    for (double v : values) y.push_back({Scalar(v)});
    auto inst = ProblemInstance::from_vectors(FieldMode::kReal, {Scalar(1.0)},
                                              VectorFamily(1, std::move(y)));
    const auto q = incomparability_quantities(inst.family_gram());
    out.push_back(IncomparabilityWitness{label, std::move(inst), q});
  }
  return out;
}

IncomparabilitySearch search_incomparability(const GenConfig& config) {
  config.validate();
  IncomparabilitySearch result;

  auto consider = [&](IncomparabilityWitness w) {
    ++result.examined;
    if (!result.a_greater && strictly_greater(w.quantities.a, w.quantities.b)) {
      result.a_greater = std::move(w);
    } else if (!result.b_greater && strictly_greater(w.quantities.b, w.quantities.a)) {
      result.b_greater = std::move(w);
    }
  };

  if (config.structured_families) {
    for (auto& w : canonical_triples()) {
      consider(std::move(w));
      if (result.complete()) return result;
    }
  }
  for (std::size_t i = 0; i < config.count && !result.complete(); ++i) {
    GeneratedInstance g = generate_instance(config, i);
    if (g.instance.size() < 2) continue;
    const auto q = incomparability_quantities(g.instance.family_gram());
    consider(IncomparabilityWitness{"instance:" + std::to_string(i), std::move(g.instance), q});
  }
  if (!result.complete()) {
    throw SearchExhausted("incomparability search examined " + std::to_string(result.examined) +
                              " families without finding both orderings of A and B",
                          std::move(result));
  }
  return result;
}

}  // namespace ipb
