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

#include "ipb/exponent_opt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

namespace ipb {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2

double family_value(const ExponentFamily& family, const ProblemInstance& inst,
                    std::optional<std::span<const Scalar>> coeffs, double p) {
  return evaluate(family.at(HoelderExponent(p)), inst, coeffs).rhs;
}

// Golden-section search for min f(exp(t)) over t in [a, b]; returns the best
// point evaluated, seeded with `best`. Stops once the four bracket values
// agree to rel_tol, so a symmetric pair of probes cannot end it early.
ExponentPoint golden_refine(const std::function<double(double)>& f, double a, double b,
                            ExponentPoint best, double rel_tol, int max_steps) {
  auto consider = [&](double t, double v) {
    if (v < best.value) best = ExponentPoint{std::exp(t), v};
  };
  double fa = f(std::exp(a));
  double fb = f(std::exp(b));
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(std::exp(c));
  double fd = f(std::exp(d));
  consider(c, fc);
  consider(d, fd);
  for (int step = 0; step < max_steps; ++step) {
    const double lo = std::min({fa, fb, fc, fd});
    const double hi = std::max({fa, fb, fc, fd});
    if (hi - lo <= rel_tol * std::abs(lo) || b - a <= 1e-12 * std::max(1.0, std::abs(b))) {
      break;
    }
    if (fc < fd) {
      b = d;
      fb = fd;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(std::exp(c));
      consider(c, fc);
    } else {
      a = c;
      fa = fc;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(std::exp(d));
      consider(d, fd);
    }
  }
  return best;
}

void check_grid(std::span<const double> grid) {
  if (grid.empty()) throw ExponentError("exponent grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    HoelderExponent{grid[i]};  // domain check
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ExponentError("exponent grid must be strictly increasing");
    }
  }
}

// Evaluates the grid, then refines between the neighbours of the best point.
std::pair<std::vector<ExponentPoint>, ExponentPoint> scan_and_refine(
    const std::function<double(double)>& f, std::span<const double> grid, double rel_tol,
    int max_steps) {
  std::vector<ExponentPoint> points;
  points.reserve(grid.size());
  std::size_t arg = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    points.push_back(ExponentPoint{grid[i], f(grid[i])});
    if (points[i].value < points[arg].value) arg = i;
  }
  ExponentPoint best = points[arg];
  if (grid.size() >= 2) {
    const double a = std::log(grid[arg == 0 ? 0 : arg - 1]);
    const double b = std::log(grid[std::min(arg + 1, grid.size() - 1)]);
    best = golden_refine(f, a, b, best, rel_tol, max_steps);
  }
  return {std::move(points), best};
}

}  // namespace

ExponentFamily::ExponentFamily(std::string_view pattern) : id_(pattern), base_(BesselBound{}) {
  if (std::count(id_.begin(), id_.end(), '*') != 1) {
    throw VariantParseError("exponent family '" + id_ + "' needs exactly one '*'");
  }
  auto render = [&](const char* p) {
    std::string name = id_;
    return parse_variant(name.replace(name.find('*'), 1, p));
  };
  const BoundVariant two = render("2");
  const BoundVariant three = render("3");
  const auto a = exponent_slots(two);
  const auto b = exponent_slots(three);
  std::size_t free = 0;
  std::size_t differing = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a[k] == b[k])) {
      free = k;
      ++differing;
    }
  }
  if (differing != 1) {
    throw VariantParseError("'*' in exponent family '" + id_ + "' must mark an exponent");
  }
  base_ = two;
  slot_ = free;
}

ExponentFamily::ExponentFamily(BoundVariant base, std::size_t slot)
    : base_(std::move(base)), slot_(slot) {
  // The renderings at p = 2 and p = 3 differ in exactly one character.
  const std::string two = variant_name(with_exponent(base_, slot_, HoelderExponent(2.0)));
  const std::string three = variant_name(with_exponent(base_, slot_, HoelderExponent(3.0)));
  std::size_t pos = 0;
  while (two[pos] == three[pos]) ++pos;
  id_ = two;
  id_[pos] = '*';
}

BoundVariant ExponentFamily::at(HoelderExponent p) const {
  return with_exponent(base_, slot_, p);
}

ExponentFamily selector_diag_family(OffDiagSelector fixed) {
  return ExponentFamily(SelectorBound{DiagSelector::hoelder(HoelderExponent(2.0)), fixed}, 0);
}

ExponentFamily selector_offdiag_family(DiagSelector fixed) {
  const std::size_t slot = fixed.exponent() ? 1 : 0;
  return ExponentFamily(SelectorBound{fixed, OffDiagSelector::hoelder(HoelderExponent(2.0))},
                        slot);
}

ExponentFamily coarse_hoelder_family() { return ExponentFamily("special:2.12:p=*"); }
ExponentFamily weighted_coarse_hoelder_family() { return ExponentFamily("cor32:3:p=*"); }
ExponentFamily fourier_hoelder_family() { return ExponentFamily("bb:4.3:p=*"); }

std::vector<double> log_grid(double lo, double hi, int count) {
  if (count < 1) throw ExponentError("grid needs at least one point");
  if (count == 1) return {lo};
  std::vector<double> out(static_cast<std::size_t>(count));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < count; ++i) out[i] = std::exp(a + (b - a) * i / (count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

ExponentProfile profile_exponent(const ExponentFamily& family, const ProblemInstance& inst,
                                 std::optional<std::span<const Scalar>> coeffs,
                                 std::span<const double> grid) {
  check_grid(grid);
  const SearchSpec defaults;
  auto f = [&](double p) { return family_value(family, inst, coeffs, p); };
  auto [points, best] = scan_and_refine(f, grid, defaults.rel_tol, defaults.max_steps);
  const bool at_boundary = best.exponent == grid.front() || best.exponent == grid.back();
  return ExponentProfile{family.id(), std::move(points), best, at_boundary};
}

OptimizedExponent optimize_exponent(const ExponentFamily& family, const ProblemInstance& inst,
                                    std::optional<std::span<const Scalar>> coeffs,
                                    const SearchSpec& spec) {
  if (!(spec.lo > 1.0) || !(spec.lo < spec.hi) || !(spec.hi <= kMaxHoelderExponent)) {
    throw ExponentError("search interval [" + format_double(spec.lo) + ", " +
                        format_double(spec.hi) + "] must satisfy 1 < lo < hi <= 64");
  }
  if (spec.coarse_points < 2) throw ExponentError("coarse grid needs at least two points");
  const auto grid = log_grid(spec.lo, spec.hi, spec.coarse_points);
  auto f = [&](double p) { return family_value(family, inst, coeffs, p); };
  const auto [points, best] = scan_and_refine(f, grid, spec.rel_tol, spec.max_steps);
  const bool at_boundary = best.exponent == spec.lo || best.exponent == spec.hi;
  return OptimizedExponent{best.exponent, best.value, at_boundary};
}

TightnessRanking rank_variants(const ProblemInstance& inst,
                               std::optional<std::span<const Scalar>> coeffs,
                               std::span<const BoundVariant> variants, const SearchSpec& spec) {
  TightnessRanking ranking;
  bool have_lhs = false;
  for (const auto& original : variants) {
    if (auto reason = incompatibility(original, inst, coeffs.has_value())) {
      throw BoundError(variant_name(original) + " cannot be ranked: " + *reason);
    }
    BoundVariant v = original;
    const std::size_t slots = exponent_slots(v).size();
    for (std::size_t s = 0; s < slots; ++s) {
      const auto opt = optimize_exponent(ExponentFamily(v, s), inst, coeffs, spec);
      v = with_exponent(v, s, HoelderExponent(opt.exponent));
    }
    const BoundEvaluation e = evaluate(v, inst, coeffs);
    if (!have_lhs) {
      ranking.lhs = e.lhs;
      have_lhs = true;
    }
    RankEntry entry;
    entry.variant = variant_name(original);
    entry.rhs = e.rhs;
    if (e.lhs > 0.0) {
      entry.rel_slack = e.slack / e.lhs;
    } else {
      entry.rel_slack = e.rhs > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
    }
    for (const auto& p : exponent_slots(v)) entry.exponents.push_back(p.value());
    ranking.entries.push_back(std::move(entry));
  }
  std::stable_sort(ranking.entries.begin(), ranking.entries.end(),
                   [](const RankEntry& a, const RankEntry& b) {
                     if (a.rhs != b.rhs) return a.rhs < b.rhs;
                     return a.variant < b.variant;
                   });
  return ranking;
}

std::string profile_csv(const ExponentProfile& profile) {
  std::ostringstream out;
  out << "exponent,value\n";
  for (const auto& p : profile.grid) {
    out << format_double(p.exponent) << ',' << format_double(p.value) << '\n';
  }
  return out.str();
}

std::string ranking_csv(const TightnessRanking& ranking) {
  std::ostringstream out;
  out << "rank,variant,rhs,rel_slack\n";
  for (std::size_t i = 0; i < ranking.entries.size(); ++i) {
    const auto& e = ranking.entries[i];
    out << (i + 1) << ',' << e.variant << ',' << format_double(e.rhs) << ','
        << format_double(e.rel_slack) << '\n';
  }
  return out.str();
}

}  // namespace ipb
