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

#include "ipb/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ipb {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<double> moduli(std::span<const Scalar> coeffs) {
  std::vector<double> out(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), out.begin(),
                 [](const Scalar& s) { return std::abs(s); });
  return out;
}

std::vector<double> moduli_sq(std::span<const Scalar> coeffs) {
  std::vector<double> out(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), out.begin(),
                 [](const Scalar& s) { return std::norm(s); });
  return out;
}

double max_of(std::span<const double> a) {
  return a.empty() ? 0.0 : *std::max_element(a.begin(), a.end());
}

double sum_of(std::span<const double> a) { return std::accumulate(a.begin(), a.end(), 0.0); }

// (n-1) with the empty-family convention.
double n_minus_one(std::size_t n) { return n <= 1 ? 0.0 : static_cast<double>(n - 1); }

void require_length(std::span<const Scalar> coeffs, const GramMatrix& gram) {
  if (coeffs.size() != gram.size()) {
    throw DimensionMismatch("coefficient vector has length " + std::to_string(coeffs.size()) +
                            ", family has " + std::to_string(gram.size()) + " members");
  }
}

double selector_rhs(const DiagSelector& d, const OffDiagSelector& o,
                    std::span<const Scalar> coeffs, const GramMatrix& gram) {
  return diag_term(d, coeffs, gram) + offdiag_term(o, coeffs, gram);
}

double coarse_rhs(const DiagSelector& d, const OffDiagSelector& o,
                  std::span<const Scalar> coeffs, const GramMatrix& gram) {
  return diag_term(d, coeffs, gram) + coarse_offdiag_term(o, coeffs, gram);
}

double pair_norm_rhs(bool sharp, std::span<const Scalar> coeffs, const GramMatrix& gram) {
  require_length(coeffs, gram);
  const GramModuli g(gram);
  const auto a2 = moduli_sq(coeffs);
  const double s2 = sum_of(a2);
  if (!sharp) return s2 * (g.max_norm_sq() + g.offdiag_l2());
  const double ratio = s2 > 0.0 ? pair_power_sum(moduli(coeffs), 2.0) / s2 : 0.0;
  return s2 * (g.max_norm_sq() + ratio * g.offdiag_l2());
}

double coarse_max_rhs(std::span<const Scalar> coeffs, const GramMatrix& gram) {
  require_length(coeffs, gram);
  const GramModuli g(gram);
  return max_of(moduli_sq(coeffs)) * (g.sum_norm_sq() + g.sum_offdiag());
}

double coarse_hoelder_rhs(HoelderExponent p, std::span<const Scalar> coeffs,
                          const GramMatrix& gram) {
  require_length(coeffs, gram);
  const GramModuli g(gram);
  const double q = p.conjugate();
  const double inner = power_norm(g.norm_sq, q) +
                       std::pow(n_minus_one(g.size()), 1.0 / p.value()) * power_norm(g.offdiag, q);
  return power_norm(moduli_sq(coeffs), p.value()) * inner;
}

double coarse_sum_rhs(std::span<const Scalar> coeffs, const GramMatrix& gram) {
  require_length(coeffs, gram);
  const GramModuli g(gram);
  return sum_of(moduli_sq(coeffs)) *
         (g.max_norm_sq() + n_minus_one(g.size()) * g.max_offdiag());
}

void require_orthonormal(const ProblemInstance& inst, const BoundVariant& v) {
  const double dist = inst.family_gram().distance_to_identity();
  if (!(dist <= kOrthonormalGateTol)) {
    throw NotOrthonormal(variant_name(v) + " needs an orthonormal family (Gram distance " +
                         format_double(dist) + " from identity)");
  }
}

Vector conjugated(std::span<const Scalar> c) {
  Vector out(c.begin(), c.end());
  for (auto& s : out) s = std::conj(s);
  return out;
}

}  // namespace

bool TolerancePolicy::holds(double lhs, double rhs) const {
  return rhs - lhs >= -(abs_tol + rel_tol * std::max(lhs, rhs));
}

double BoundEvaluation::relative_slack() const {
  const double scale = std::max(lhs, rhs);
  return scale > 0.0 ? slack / scale : 0.0;
}

BoundEvaluation make_evaluation(BoundVariant variant, double lhs, double rhs,
                                const TolerancePolicy& policy) {
  return BoundEvaluation{std::move(variant), lhs, rhs, rhs - lhs, policy.holds(lhs, rhs)};
}

double power_norm(std::span<const double> a, double p) {
  const double m = max_of(a);
  if (!(m > 0.0)) return 0.0;
  double s = 0.0;
  for (double v : a) s += std::pow(v / m, p);
  return m * std::pow(s, 1.0 / p);
}

double pair_power_sum(std::span<const double> a, double g) {
  const double m = max_of(a);
  if (!(m > 0.0)) return 0.0;
  // (sum r)^2 - sum r^2 evaluated as sum_i r_i * (sum of the others), with
  // the others summed from prefix and suffix sums; the subtraction form
  // cancels to zero when one entry dominates at large g.
  const std::size_t n = a.size();
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = std::pow(a[i] / m, g);
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + r[i];
  double prefix = 0.0;
  double pairs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    pairs += r[i] * (prefix + suffix[i + 1]);
    prefix += r[i];
  }
  if (!(pairs > 0.0)) return 0.0;
  return m * m * std::pow(pairs, 1.0 / g);
}

double max_pair_product(std::span<const double> a) {
  if (a.size() < 2) return 0.0;
  double first = 0.0;
  double second = 0.0;
  for (double v : a) {
    if (v > first) {
      second = first;
      first = v;
    } else if (v > second) {
      second = v;
    }
  }
  return first * second;
}

GramModuli::GramModuli(const GramMatrix& gram) {
  const std::size_t n = gram.size();
  norm_sq.resize(n);
  offdiag.reserve(n * (n > 0 ? n - 1 : 0));
  for (std::size_t i = 0; i < n; ++i) {
    norm_sq[i] = gram.norm_sq(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) offdiag.push_back(std::abs(gram(i, j)));
    }
  }
}

double GramModuli::max_norm_sq() const { return max_of(norm_sq); }
double GramModuli::sum_norm_sq() const { return sum_of(norm_sq); }
double GramModuli::max_offdiag() const { return max_of(offdiag); }
double GramModuli::sum_offdiag() const { return sum_of(offdiag); }
double GramModuli::offdiag_l2() const { return power_norm(offdiag, 2.0); }

double diag_term(const DiagSelector& sel, std::span<const Scalar> coeffs, const GramMatrix& gram) {
  require_length(coeffs, gram);
  const GramModuli g(gram);
  const auto a2 = moduli_sq(coeffs);
  switch (sel.branch()) {
    case Branch::kMax:
      return max_of(a2) * g.sum_norm_sq();
    case Branch::kHoelder: {
      const HoelderExponent& p = *sel.exponent();
      return power_norm(a2, p.value()) * power_norm(g.norm_sq, p.conjugate());
    }
    case Branch::kSum:
      return sum_of(a2) * g.max_norm_sq();
  }
  return 0.0;
}

double offdiag_term(const OffDiagSelector& sel, std::span<const Scalar> coeffs,
                    const GramMatrix& gram) {
  require_length(coeffs, gram);
  const GramModuli g(gram);
  const auto a = moduli(coeffs);
  switch (sel.branch()) {
    case Branch::kMax:
      return max_pair_product(a) * g.sum_offdiag();
    case Branch::kHoelder: {
      const HoelderExponent& p = *sel.exponent();
      return pair_power_sum(a, p.value()) * power_norm(g.offdiag, p.conjugate());
    }
    case Branch::kSum:
      return pair_power_sum(a, 1.0) * g.max_offdiag();
  }
  return 0.0;
}

double coarse_offdiag_term(const OffDiagSelector& sel, std::span<const Scalar> coeffs,
                           const GramMatrix& gram) {
  require_length(coeffs, gram);
  const GramModuli g(gram);
  const auto a2 = moduli_sq(coeffs);
  const double nm1 = n_minus_one(g.size());
  switch (sel.branch()) {
    case Branch::kMax:
      return max_of(a2) * g.sum_offdiag();
    case Branch::kHoelder: {
      const HoelderExponent& p = *sel.exponent();
      return std::pow(nm1, 1.0 / p.value()) * power_norm(a2, p.value()) *
             power_norm(g.offdiag, p.conjugate());
    }
    case Branch::kSum:
      return nm1 * sum_of(a2) * g.max_offdiag();
  }
  return 0.0;
}

BoundEvaluation selector_bound(const DiagSelector& diag, const OffDiagSelector& offdiag,
                               std::span<const Scalar> coeffs, const GramMatrix& gram,
                               const TolerancePolicy& policy) {
  const double rhs = selector_rhs(diag, offdiag, coeffs, gram);
  return make_evaluation(SelectorBound{diag, offdiag}, combination_norm_sq(coeffs, gram), rhs,
                         policy);
}

PairNormBounds pair_norm_bounds(std::span<const Scalar> coeffs, const GramMatrix& gram,
                                const TolerancePolicy& policy) {
  const double lhs = combination_norm_sq(coeffs, gram);
  return PairNormBounds{
      make_evaluation(SharpPairNormBound{}, lhs, pair_norm_rhs(true, coeffs, gram), policy),
      make_evaluation(WeakPairNormBound{}, lhs, pair_norm_rhs(false, coeffs, gram), policy)};
}

BoundEvaluation coarse_bound(const DiagSelector& diag, const OffDiagSelector& offdiag,
                             std::span<const Scalar> coeffs, const GramMatrix& gram,
                             const TolerancePolicy& policy) {
  const double rhs = coarse_rhs(diag, offdiag, coeffs, gram);
  return make_evaluation(CoarseSelectorBound{diag, offdiag}, combination_norm_sq(coeffs, gram),
                         rhs, policy);
}

BoundEvaluation coarse_max_bound(std::span<const Scalar> coeffs, const GramMatrix& gram,
                                 const TolerancePolicy& policy) {
  const double rhs = coarse_max_rhs(coeffs, gram);
  return make_evaluation(CoarseMaxBound{}, combination_norm_sq(coeffs, gram), rhs, policy);
}

BoundEvaluation coarse_hoelder_bound(HoelderExponent p, std::span<const Scalar> coeffs,
                                     const GramMatrix& gram, const TolerancePolicy& policy) {
  const double rhs = coarse_hoelder_rhs(p, coeffs, gram);
  return make_evaluation(CoarseHoelderBound{p}, combination_norm_sq(coeffs, gram), rhs, policy);
}

BoundEvaluation coarse_sum_bound(std::span<const Scalar> coeffs, const GramMatrix& gram,
                                 const TolerancePolicy& policy) {
  const double rhs = coarse_sum_rhs(coeffs, gram);
  return make_evaluation(CoarseSumBound{}, combination_norm_sq(coeffs, gram), rhs, policy);
}

BoundEvaluation weighted_sum_bound(const BoundVariant& variant, std::span<const Scalar> c,
                                   const ProblemInstance& inst, const TolerancePolicy& policy) {
  const GramMatrix& gram = inst.family_gram();
  require_length(c, gram);
  // sum c_i (x, y_i) = (x, sum conj(c_i) y_i)
  const Vector alpha = conjugated(c);

  Scalar weighted(0.0);
  for (std::size_t i = 0; i < c.size(); ++i) weighted += c[i] * inst.fourier(i);
  const double lhs = std::norm(weighted);
  const double xx = inst.x_norm_sq();

  double combo = 0.0;
  if (const auto* v = std::get_if<WeightedSelectorBound>(&variant)) {
    combo = selector_rhs(v->diag, v->offdiag, alpha, gram);
  } else if (const auto* v = std::get_if<WeightedCoarseBound>(&variant)) {
    switch (v->branch) {
      case 1:
        combo = pair_norm_rhs(false, alpha, gram);
        break;
      case 2:
        combo = coarse_max_rhs(alpha, gram);
        break;
      case 3:
        if (!v->p) throw BoundError("cor32 branch 3 needs an exponent");
        combo = coarse_hoelder_rhs(*v->p, alpha, gram);
        break;
      case 4:
        combo = coarse_sum_rhs(alpha, gram);
        break;
      default:
        throw BoundError("cor32 branch must be 1..4");
    }
  } else {
    throw BoundError(variant_name(variant) + " is not a weighted-sum bound");
  }
  return make_evaluation(variant, lhs, xx * combo, policy);
}

BoundEvaluation fourier_bound(const BoundVariant& variant, const ProblemInstance& inst,
                              const TolerancePolicy& policy) {
  const GramModuli g(inst.family_gram());
  const std::size_t n = g.size();
  std::vector<double> f2(n);
  for (std::size_t i = 0; i < n; ++i) f2[i] = std::norm(inst.fourier(i));
  const double lhs = sum_of(f2);
  const double xx = inst.x_norm_sq();
  const double x_norm = std::sqrt(xx);
  const double max_f = std::sqrt(max_of(f2));

  if (requires_orthonormal(variant)) require_orthonormal(inst, variant);

  const double rhs = std::visit(
      Overloaded{
          [&](const BoasBellmanBound&) { return xx * (g.max_norm_sq() + g.offdiag_l2()); },
          [&](const FourierMaxBound&) {
            return x_norm * max_f * std::sqrt(g.sum_norm_sq() + g.sum_offdiag());
          },
          [&](const FourierHoelderBound& v) {
            const double p = v.p.value();
            const double q = v.p.conjugate();
            const double inner = power_norm(g.norm_sq, q) +
                                 std::pow(n_minus_one(n), 1.0 / p) * power_norm(g.offdiag, q);
            return x_norm * std::sqrt(power_norm(f2, p)) * std::sqrt(inner);
          },
          [&](const FourierSumBound&) {
            return xx * (g.max_norm_sq() + n_minus_one(n) * g.max_offdiag());
          },
          [&](const OrthoMaxBound&) {
            return std::sqrt(static_cast<double>(n)) * x_norm * max_f;
          },
          [&](const OrthoHoelderBound& v) {
            return std::pow(static_cast<double>(n), 1.0 / v.p.conjugate()) * x_norm *
                   std::sqrt(power_norm(f2, v.p.value()));
          },
          [&](const BesselBound&) { return xx; },
          [&](const auto&) -> double {
            throw BoundError(variant_name(variant) + " is not a Fourier-coefficient bound");
          },
      },
      variant);
  return make_evaluation(variant, lhs, rhs, policy);
}

IncomparabilityQuantities incomparability_quantities(const GramMatrix& gram) {
  if (gram.size() < 2) throw BoundError("comparing A and B needs at least two vectors");
  const GramModuli g(gram);
  return IncomparabilityQuantities{g.offdiag_l2(), n_minus_one(g.size()) * g.max_offdiag()};
}

std::optional<std::string> incompatibility(const BoundVariant& variant,
                                           const ProblemInstance& inst, bool has_coeffs) {
  if (requires_coefficients(variant) && !has_coeffs) return std::string("no coefficient vector");
  if (requires_orthonormal(variant) &&
      !(inst.family_gram().distance_to_identity() <= kOrthonormalGateTol)) {
    return std::string("orthonormality gate");
  }
  return std::nullopt;
}

BoundEvaluation evaluate(const BoundVariant& variant, const ProblemInstance& inst,
                         std::optional<std::span<const Scalar>> coeffs,
                         const TolerancePolicy& policy) {
  if (requires_coefficients(variant) && !coeffs) {
    throw MissingCoefficients(variant_name(variant) + " needs a coefficient vector");
  }
  const GramMatrix& gram = inst.family_gram();
  auto family_lhs = [&] { return inst.combination_norm_sq(*coeffs); };

  return std::visit(
      Overloaded{
          [&](const SelectorBound& v) {
            const double rhs = selector_rhs(v.diag, v.offdiag, *coeffs, gram);
            return make_evaluation(v, family_lhs(), rhs, policy);
          },
          [&](const SharpPairNormBound& v) {
            const double rhs = pair_norm_rhs(true, *coeffs, gram);
            return make_evaluation(v, family_lhs(), rhs, policy);
          },
          [&](const WeakPairNormBound& v) {
            const double rhs = pair_norm_rhs(false, *coeffs, gram);
            return make_evaluation(v, family_lhs(), rhs, policy);
          },
          [&](const CoarseSelectorBound& v) {
            const double rhs = coarse_rhs(v.diag, v.offdiag, *coeffs, gram);
            return make_evaluation(v, family_lhs(), rhs, policy);
          },
          [&](const CoarseMaxBound& v) {
            const double rhs = coarse_max_rhs(*coeffs, gram);
            return make_evaluation(v, family_lhs(), rhs, policy);
          },
          [&](const CoarseHoelderBound& v) {
            const double rhs = coarse_hoelder_rhs(v.p, *coeffs, gram);
            return make_evaluation(v, family_lhs(), rhs, policy);
          },
          [&](const CoarseSumBound& v) {
            const double rhs = coarse_sum_rhs(*coeffs, gram);
            return make_evaluation(v, family_lhs(), rhs, policy);
          },
          [&](const WeightedSelectorBound&) {
            return weighted_sum_bound(variant, *coeffs, inst, policy);
          },
          [&](const WeightedCoarseBound&) {
            return weighted_sum_bound(variant, *coeffs, inst, policy);
          },
          [&](const auto&) { return fourier_bound(variant, inst, policy); },
      },
      variant);
}

}  // namespace ipb
