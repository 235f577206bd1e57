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

#ifndef IPB_VERIFY_HPP_
#define IPB_VERIFY_HPP_

// Seeded instance generation and bulk inequality checking.
//
// Every instance is a pure function of (master_seed, index): the per-index
// engine seed is a counter-mode hash of the pair, so the suite can fan out
// over threads without changing a single reported byte.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ipb/bounds.hpp"
#include "ipb/space.hpp"
#include "ipb/variant.hpp"

namespace ipb {

struct IntRange {
  int min = 1;
  int max = 1;
};

enum class FieldChoice { kReal, kComplex, kBoth };

struct GenConfig {
  IntRange n_range{1, 8};
  IntRange d_range{1, 8};
  FieldChoice field = FieldChoice::kBoth;
  double scale = 1.0;
  // Odd indices become positive scalar triples y = (a, b, c) in R^1.
  bool structured_families = false;
  std::uint64_t master_seed = 0;
  std::size_t count = 1;
  // Every k-th instance (index % k == k - 1) has its family orthonormalized
  // when n <= d, so orthonormal-only variants get exercised. 0 disables.
  std::size_t orthonormal_every = 5;

  /// Throws std::invalid_argument on empty ranges, n < 0, d < 1,
  /// non-positive scale or count == 0.
  void validate() const;
};

struct GeneratedInstance {
  std::size_t id = 0;
  ProblemInstance instance;
  Vector coeffs;
};

/// 64-bit engine seed for instance `index`.
std::uint64_t derive_seed(std::uint64_t master_seed, std::size_t index);

/// Throws std::out_of_range when index >= config.count.
GeneratedInstance generate_instance(const GenConfig& config, std::size_t index);

struct VerificationResult {
  std::size_t instance_id = 0;
  std::string variant;
  std::optional<BoundEvaluation> evaluation;  // empty when skipped or failed
  std::string skip_reason;                    // set when skipped
  std::string error;                          // set when evaluation threw
  std::chrono::nanoseconds elapsed{0};

  bool skipped() const { return !skip_reason.empty(); }
  bool violated() const { return !error.empty() || (evaluation && !evaluation->holds); }
};

/// Evaluates one variant on one instance. Incompatible pairs come back as
/// skips; exceptions from the engine come back in `error` and count as
/// violations.
VerificationResult check_variant(const BoundVariant& variant, const GeneratedInstance& inst,
                                 const TolerancePolicy& policy = {});

struct VariantTotals {
  std::string variant;
  std::size_t checked = 0;
  std::size_t held = 0;
  std::size_t violated = 0;
  std::size_t skipped = 0;
  // +inf until something is checked.
  double min_slack = 0.0;
  double min_rel_slack = 0.0;
};

struct Violation {
  std::size_t instance_id = 0;
  std::string variant;
  std::optional<BoundEvaluation> evaluation;
  std::string error;
  ProblemInstance instance;
  Vector coeffs;
};

struct SuiteReport {
  GenConfig config;
  TolerancePolicy policy;
  std::vector<VariantTotals> totals;  // sorted by variant name
  std::vector<Violation> violations;  // sorted by (instance_id, variant)

  std::size_t total_checked() const;
  std::size_t total_violated() const;
};

/// Checks every compatible (instance, variant) pair. The report does not
/// depend on `threads`; 0 means hardware concurrency.
SuiteReport run_suite(const GenConfig& config, std::span<const BoundVariant> variants,
                      const TolerancePolicy& policy = {}, unsigned threads = 1);

/// Per-variant CSV: variant,checked,held,violated,min_slack,min_rel_slack
std::string report_csv(const SuiteReport& report);

/// Full JSON payload with totals and every violating instance.
std::string report_json(const SuiteReport& report);

// --- incomparability search ------------------------------------------------

struct IncomparabilityWitness {
  std::string label;  // "canonical:1,1,1" or "instance:<id>"
  ProblemInstance instance;
  IncomparabilityQuantities quantities;
};

struct IncomparabilitySearch {
  std::optional<IncomparabilityWitness> a_greater;  // A > B
  std::optional<IncomparabilityWitness> b_greater;  // B > A
  std::size_t examined = 0;

  bool complete() const { return a_greater.has_value() && b_greater.has_value(); }
};

class SearchExhausted : public std::runtime_error {
 public:
  SearchExhausted(const std::string& what, IncomparabilitySearch partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const IncomparabilitySearch& partial() const { return partial_; }

 private:
  IncomparabilitySearch partial_;
};

/// The two canonical scalar families (1, 1, 1) and (1, 1/2, 1) in R^1 with
/// x = 1.
std::vector<IncomparabilityWitness> canonical_triples();

/// Looks for one family with A > B and one with B > A. With structured
/// families enabled the canonical triples are examined first; then
/// instances 0..count-1 of `config`. Throws SearchExhausted (carrying the
/// partial result) if either witness is missing.
IncomparabilitySearch search_incomparability(const GenConfig& config);

}  // namespace ipb

#endif  // IPB_VERIFY_HPP_
