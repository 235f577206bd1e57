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

#ifndef IPB_BOUNDS_HPP_
#define IPB_BOUNDS_HPP_

// Closed-form upper bounds for ||sum a_i z_i||^2, |sum c_i (x, y_i)|^2 and
// sum |(x, y_i)|^2, evaluated from coefficients and Gram entries only.
//
// Conventions shared by every formula below:
//   * sums over "i != j" range over ordered pairs, so each off-diagonal
//     Gram entry is counted twice;
//   * empty sums and maxima over empty index sets are 0;
//   * power sums are evaluated with the largest term factored out, so
//     exponents up to 64 neither overflow nor underflow.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ipb/space.hpp"
#include "ipb/variant.hpp"

namespace ipb {

// Entrywise distance to the identity accepted by orthonormal-only bounds.
inline constexpr double kOrthonormalGateTol = 1e-9;

class BoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MissingCoefficients : public BoundError {
 public:
  using BoundError::BoundError;
};

class NotOrthonormal : public BoundError {
 public:
  using BoundError::BoundError;
};

/// holds iff rhs - lhs >= -(abs_tol + rel_tol * max(lhs, rhs)).
struct TolerancePolicy {
  double abs_tol = 1e-12;
  double rel_tol = 1e-9;

  bool holds(double lhs, double rhs) const;
};

struct BoundEvaluation {
  BoundVariant variant;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = true;

  /// slack / max(lhs, rhs), or 0 when both sides vanish.
  double relative_slack() const;
};

BoundEvaluation make_evaluation(BoundVariant variant, double lhs, double rhs,
                                const TolerancePolicy& policy = {});

// --- power-sum primitives --------------------------------------------------

/// (sum_i a_i^p)^(1/p) for a_i >= 0, p > 0.
double power_norm(std::span<const double> a, double p);

/// [(sum_i a_i^g)^2 - sum_i a_i^(2g)]^(1/g), i.e. the ordered-pair sum
/// (sum_{i != j} a_i^g a_j^g)^(1/g), evaluated without the subtraction.
double pair_power_sum(std::span<const double> a, double g);

/// max over i != j of a_i * a_j (the product of the two largest entries).
double max_pair_product(std::span<const double> a);

// --- Gram-level quantities -------------------------------------------------

/// Moduli read from a Gram matrix: norms squared and ordered off-diagonal
/// |(z_i, z_j)|, i != j.
struct GramModuli {
  std::vector<double> norm_sq;
  std::vector<double> offdiag;

  explicit GramModuli(const GramMatrix& gram);

  std::size_t size() const { return norm_sq.size(); }
  double max_norm_sq() const;
  double sum_norm_sq() const;
  double max_offdiag() const;
  double sum_offdiag() const;
  /// (sum_{i != j} |(z_i, z_j)|^2)^(1/2)
  double offdiag_l2() const;
};

// --- the selector family ---------------------------------------------------

/// Upper bound for sum_i |a_i|^2 ||z_i||^2 chosen by `sel`.
double diag_term(const DiagSelector& sel, std::span<const Scalar> coeffs, const GramMatrix& gram);

/// Upper bound for sum_{i != j} |a_i| |a_j| |(z_i, z_j)| chosen by `sel`.
double offdiag_term(const OffDiagSelector& sel, std::span<const Scalar> coeffs,
                    const GramMatrix& gram);

/// offdiag_term with the coefficient factor replaced by the coarser power
/// sum: max|a|^2, (n-1)^(1/g) (sum |a|^(2g))^(1/g), or (n-1) sum |a|^2.
double coarse_offdiag_term(const OffDiagSelector& sel, std::span<const Scalar> coeffs,
                           const GramMatrix& gram);

/// lhs = ||sum a_i z_i||^2, rhs = diag_term + offdiag_term.
BoundEvaluation selector_bound(const DiagSelector& diag, const OffDiagSelector& offdiag,
                               std::span<const Scalar> coeffs, const GramMatrix& gram,
                               const TolerancePolicy& policy = {});

struct PairNormBounds {
  BoundEvaluation sharp;
  BoundEvaluation weak;
};

/// sharp: sum|a|^2 max||z||^2 + [(sum|a|^2)^2 - sum|a|^4]^(1/2) (sum_{i!=j}|(z_i,z_j)|^2)^(1/2)
/// weak:  sum|a|^2 [max||z||^2 + (sum_{i!=j}|(z_i,z_j)|^2)^(1/2)]
PairNormBounds pair_norm_bounds(std::span<const Scalar> coeffs, const GramMatrix& gram,
                                const TolerancePolicy& policy = {});

BoundEvaluation coarse_bound(const DiagSelector& diag, const OffDiagSelector& offdiag,
                             std::span<const Scalar> coeffs, const GramMatrix& gram,
                             const TolerancePolicy& policy = {});

/// max|a|^2 [sum||z||^2 + sum_{i!=j}|(z_i,z_j)|]
BoundEvaluation coarse_max_bound(std::span<const Scalar> coeffs, const GramMatrix& gram,
                                 const TolerancePolicy& policy = {});
/// (sum|a|^(2p))^(1/p) [(sum||z||^(2q))^(1/q) + (n-1)^(1/p) (sum_{i!=j}|(z_i,z_j)|^q)^(1/q)]
BoundEvaluation coarse_hoelder_bound(HoelderExponent p, std::span<const Scalar> coeffs,
                                     const GramMatrix& gram, const TolerancePolicy& policy = {});
/// sum|a|^2 [max||z||^2 + (n-1) max_{i!=j}|(z_i,z_j)|]
BoundEvaluation coarse_sum_bound(std::span<const Scalar> coeffs, const GramMatrix& gram,
                                 const TolerancePolicy& policy = {});

// --- instance-level bounds -------------------------------------------------

/// Bounds on |sum c_i (x, y_i)|^2; `variant` must hold WeightedSelectorBound
/// or WeightedCoarseBound. Throws BoundError otherwise, DimensionMismatch on
/// a length mismatch.
BoundEvaluation weighted_sum_bound(const BoundVariant& variant, std::span<const Scalar> c,
                                   const ProblemInstance& inst,
                                   const TolerancePolicy& policy = {});

/// Bounds on sum |(x, y_i)|^2; `variant` must be one of the Boas-Bellman,
/// Fourier, orthonormal or Bessel variants. Orthonormal-only variants throw
/// NotOrthonormal when the family Gram is farther than 1e-9 from identity.
BoundEvaluation fourier_bound(const BoundVariant& variant, const ProblemInstance& inst,
                              const TolerancePolicy& policy = {});

/// A = (sum_{i!=j} |(y_i,y_j)|^2)^(1/2) and B = (n-1) max_{i!=j} |(y_i,y_j)|,
/// the off-diagonal corrections of the Boas-Bellman bound and of its
/// (n-1)-max counterpart. Throws BoundError for n < 2.
struct IncomparabilityQuantities {
  double a = 0.0;
  double b = 0.0;
};
IncomparabilityQuantities incomparability_quantities(const GramMatrix& gram);

/// Reason the variant cannot be evaluated on this instance, or nullopt.
std::optional<std::string> incompatibility(const BoundVariant& variant,
                                           const ProblemInstance& inst, bool has_coeffs);

/// Evaluates any variant. Coefficient-driven variants use `coeffs` as a_i
/// (on the family y_i) or as c_i; with explicit vectors the lhs norm is
/// cross-checked against the direct route. Throws MissingCoefficients,
/// NotOrthonormal, or DimensionMismatch.
BoundEvaluation evaluate(const BoundVariant& variant, const ProblemInstance& inst,
                         std::optional<std::span<const Scalar>> coeffs,
                         const TolerancePolicy& policy = {});

}  // namespace ipb

#endif  // IPB_BOUNDS_HPP_
