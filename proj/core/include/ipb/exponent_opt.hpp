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

#ifndef IPB_EXPONENT_OPT_HPP_
#define IPB_EXPONENT_OPT_HPP_

// One-parameter Hoelder bound families: grid profiles, golden-section
// minimization over ln(p), and tightness ranking of a variant set.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipb/bounds.hpp"
#include "ipb/space.hpp"
#include "ipb/variant.hpp"

namespace ipb {

/// A variant name with a single '*' in an exponent position, e.g.
/// "lemma21:holder:*:sum", "coarse:max:holder:*", "special:2.12:p=*",
/// "cor32:3:p=*" or "bb:4.3:p=*".
class ExponentFamily {
 public:
  /// Throws VariantParseError if the pattern is not a one-exponent family.
  explicit ExponentFamily(std::string_view pattern);
  /// Frees exponent slot `slot` of `base`. Throws std::out_of_range.
  ExponentFamily(BoundVariant base, std::size_t slot);

  const std::string& id() const { return id_; }
  BoundVariant at(HoelderExponent p) const;

 private:
  std::string id_;
  BoundVariant base_;
  std::size_t slot_ = 0;
};

ExponentFamily selector_diag_family(OffDiagSelector fixed = OffDiagSelector::sum());
ExponentFamily selector_offdiag_family(DiagSelector fixed = DiagSelector::sum());
ExponentFamily coarse_hoelder_family();
ExponentFamily weighted_coarse_hoelder_family();
ExponentFamily fourier_hoelder_family();

struct ExponentPoint {
  double exponent = 0.0;
  double value = 0.0;
};

struct ExponentProfile {
  std::string family;
  std::vector<ExponentPoint> grid;
  ExponentPoint minimizer;
  bool at_boundary = false;
};

struct SearchSpec {
  double lo = 1.001;
  double hi = kMaxHoelderExponent;
  int coarse_points = 8;
  double rel_tol = 1e-6;
  int max_steps = 64;
};

struct OptimizedExponent {
  double exponent = 0.0;
  double value = 0.0;
  bool at_boundary = false;
};

/// `count` points log-spaced over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int count);

/// Evaluates the family at every grid point (strictly increasing, inside
/// (1, 64]) and refines the best point by golden-section search between
/// its grid neighbours. Throws ExponentError for a bad grid.
ExponentProfile profile_exponent(const ExponentFamily& family, const ProblemInstance& inst,
                                 std::optional<std::span<const Scalar>> coeffs,
                                 std::span<const double> grid);

/// Coarse log grid then golden-section refinement; never worse than any
/// coarse grid value. Throws ExponentError unless 1 < lo < hi <= 64.
OptimizedExponent optimize_exponent(const ExponentFamily& family, const ProblemInstance& inst,
                                    std::optional<std::span<const Scalar>> coeffs,
                                    const SearchSpec& spec = {});

struct RankEntry {
  std::string variant;
  double rhs = 0.0;
  double rel_slack = 0.0;           // (rhs - lhs) / lhs; 0 when both vanish
  std::vector<double> exponents;    // optimized exponents, in slot order
};

struct TightnessRanking {
  double lhs = 0.0;
  std::vector<RankEntry> entries;  // ascending rhs, ties by name
};

/// Evaluates each variant once, Hoelder slots at their optimized exponents
/// (slot by slot). Throws BoundError if a variant is incompatible with the
/// instance.
TightnessRanking rank_variants(const ProblemInstance& inst,
                               std::optional<std::span<const Scalar>> coeffs,
                               std::span<const BoundVariant> variants,
                               const SearchSpec& spec = {});

/// exponent,value
std::string profile_csv(const ExponentProfile& profile);
/// rank,variant,rhs,rel_slack
std::string ranking_csv(const TightnessRanking& ranking);

}  // namespace ipb

#endif  // IPB_EXPONENT_OPT_HPP_
