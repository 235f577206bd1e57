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

#ifndef IPB_VARIANT_HPP_
#define IPB_VARIANT_HPP_

// Selector types naming every concrete inequality in the catalog, and the
// textual variant names used by the CLI and reports.
//
// Name grammar:
//   lemma21:<d>:<o>   coarse:<d>:<o>   thm31:<d>:<o>
//       with <d>, <o> in {max, holder:<float>, sum}
//   cor23:sharp  cor23:weak
//   special:2.11  special:2.12:p=<float>  special:2.13
//   cor32:<1|2|3|4>[:p=<float>]          (the exponent only on branch 3)
//   bb:1.2  bb:4.1  bb:4.3:p=<float>  bb:4.5
//   ortho:4.2  ortho:4.4:p=<float>  bessel:1.1
// <float> is the shortest round-trip decimal of the exponent.

#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ipb/exponent.hpp"

namespace ipb {

enum class Branch { kMax, kHoelder, kSum };

struct DiagTag {};
struct OffDiagTag {};

/// One of the three branches bounding a diagonal (DiagTag) or off-diagonal
/// (OffDiagTag) sum. Carries an exponent exactly when the branch is Hoelder.
template <class Tag>
class Selector {
 public:
  static Selector max() { return Selector(Branch::kMax, std::nullopt); }
  static Selector hoelder(HoelderExponent p) { return Selector(Branch::kHoelder, p); }
  static Selector sum() { return Selector(Branch::kSum, std::nullopt); }

  Branch branch() const { return branch_; }
  const std::optional<HoelderExponent>& exponent() const { return exponent_; }

  friend bool operator==(const Selector&, const Selector&) = default;

 private:
  Selector(Branch b, std::optional<HoelderExponent> p) : branch_(b), exponent_(p) {}
  Branch branch_;
  std::optional<HoelderExponent> exponent_;
};

using DiagSelector = Selector<DiagTag>;
using OffDiagSelector = Selector<OffDiagTag>;

// ||sum a_i z_i||^2 <= diag(d) + offdiag(o); nine combinations.
struct SelectorBound {
  DiagSelector diag;
  OffDiagSelector offdiag;
  friend bool operator==(const SelectorBound&, const SelectorBound&) = default;
};
// Sum-diagonal with the normalized quadratic off-diagonal term.
struct SharpPairNormBound {
  friend bool operator==(const SharpPairNormBound&, const SharpPairNormBound&) = default;
};
// The sharp form with its normalized ratio replaced by 1.
struct WeakPairNormBound {
  friend bool operator==(const WeakPairNormBound&, const WeakPairNormBound&) = default;
};
// Coefficient factors of the off-diagonal term coarsened to power sums.
struct CoarseSelectorBound {
  DiagSelector diag;
  OffDiagSelector offdiag;
  friend bool operator==(const CoarseSelectorBound&, const CoarseSelectorBound&) = default;
};
struct CoarseMaxBound {
  friend bool operator==(const CoarseMaxBound&, const CoarseMaxBound&) = default;
};
struct CoarseHoelderBound {
  HoelderExponent p;
  friend bool operator==(const CoarseHoelderBound&, const CoarseHoelderBound&) = default;
};
struct CoarseSumBound {
  friend bool operator==(const CoarseSumBound&, const CoarseSumBound&) = default;
};
// |sum c_i (x, y_i)|^2 <= ||x||^2 (diag(d) + offdiag(o)) with a_i = conj(c_i).
struct WeightedSelectorBound {
  DiagSelector diag;
  OffDiagSelector offdiag;
  friend bool operator==(const WeightedSelectorBound&, const WeightedSelectorBound&) = default;
};
// Branch 1 is the Mitrinovic-Pecaric-Fink inequality; branches 2..4 are the
// weighted forms of the three aligned coarse bounds. p only on branch 3.
struct WeightedCoarseBound {
  int branch = 1;
  std::optional<HoelderExponent> p;
  friend bool operator==(const WeightedCoarseBound&, const WeightedCoarseBound&) = default;
};
struct BoasBellmanBound {
  friend bool operator==(const BoasBellmanBound&, const BoasBellmanBound&) = default;
};
struct FourierMaxBound {
  friend bool operator==(const FourierMaxBound&, const FourierMaxBound&) = default;
};
struct FourierHoelderBound {
  HoelderExponent p;
  friend bool operator==(const FourierHoelderBound&, const FourierHoelderBound&) = default;
};
struct FourierSumBound {
  friend bool operator==(const FourierSumBound&, const FourierSumBound&) = default;
};
struct OrthoMaxBound {
  friend bool operator==(const OrthoMaxBound&, const OrthoMaxBound&) = default;
};
struct OrthoHoelderBound {
  HoelderExponent p;
  friend bool operator==(const OrthoHoelderBound&, const OrthoHoelderBound&) = default;
};
struct BesselBound {
  friend bool operator==(const BesselBound&, const BesselBound&) = default;
};

using BoundVariant =
    std::variant<SelectorBound, SharpPairNormBound, WeakPairNormBound, CoarseSelectorBound,
                 CoarseMaxBound, CoarseHoelderBound, CoarseSumBound, WeightedSelectorBound,
                 WeightedCoarseBound, BoasBellmanBound, FourierMaxBound, FourierHoelderBound,
                 FourierSumBound, OrthoMaxBound, OrthoHoelderBound, BesselBound>;

class VariantParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string variant_name(const BoundVariant& variant);

/// Inverse of variant_name. Throws VariantParseError for unknown names and
/// ExponentError for exponents outside (1, 64].
BoundVariant parse_variant(std::string_view name);

/// True for variants bounding ||sum a_i z_i||^2 or |sum c_i (x, y_i)|^2,
/// which need a caller-supplied coefficient vector.
bool requires_coefficients(const BoundVariant& variant);

/// True for variants stated only for orthonormal families.
bool requires_orthonormal(const BoundVariant& variant);

inline constexpr std::array<double, 5> kDefaultCatalogExponents = {1.25, 1.5, 2.0, 3.0, 4.0};

/// Every variant, with each Hoelder slot instantiated at each exponent.
std::vector<BoundVariant> full_catalog(
    std::span<const double> exponents = kDefaultCatalogExponents);

/// "all" or a comma-separated list of names.
std::vector<BoundVariant> parse_variant_list(std::string_view spec);

/// Hoelder exponents held by the variant, in name order.
std::vector<HoelderExponent> exponent_slots(const BoundVariant& variant);

/// Copy of `variant` with exponent slot `slot` replaced by `p`. Throws
/// std::out_of_range if the slot does not exist.
BoundVariant with_exponent(const BoundVariant& variant, std::size_t slot, HoelderExponent p);

}  // namespace ipb

#endif  // IPB_VARIANT_HPP_
