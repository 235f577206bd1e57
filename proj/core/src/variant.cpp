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

#include "ipb/variant.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ipb {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class Tag>
std::string selector_name(const Selector<Tag>& s) {
  switch (s.branch()) {
    case Branch::kMax:
      return "max";
    case Branch::kSum:
      return "sum";
    case Branch::kHoelder:
      return "holder:" + format_double(s.exponent()->value());
  }
  return "?";
}

std::string p_suffix(const HoelderExponent& p) { return ":p=" + format_double(p.value()); }

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void unknown(std::string_view name) {
  throw VariantParseError("unknown variant name '" + std::string(name) + "'");
}

double parse_number(std::string_view text, std::string_view name) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size()) unknown(name);
  return value;
}

HoelderExponent parse_p(std::string_view token, std::string_view name) {
  if (!token.starts_with("p=")) unknown(name);
  return HoelderExponent(parse_number(token.substr(2), name));
}

// Parses a selector starting at parts[pos]; advances pos past it.
template <class Tag>
Selector<Tag> parse_selector(const std::vector<std::string_view>& parts, std::size_t& pos,
                             std::string_view name) {
  if (pos >= parts.size()) unknown(name);
  const std::string_view head = parts[pos++];
  if (head == "max") return Selector<Tag>::max();
  if (head == "sum") return Selector<Tag>::sum();
  if (head == "holder") {
    if (pos >= parts.size()) unknown(name);
    return Selector<Tag>::hoelder(HoelderExponent(parse_number(parts[pos++], name)));
  }
  unknown(name);
}

template <class V>
V parse_selector_pair(const std::vector<std::string_view>& parts, std::string_view name) {
  std::size_t pos = 1;
  const auto d = parse_selector<DiagTag>(parts, pos, name);
  const auto o = parse_selector<OffDiagTag>(parts, pos, name);
  if (pos != parts.size()) unknown(name);
  return V{d, o};
}

}  // namespace

std::string variant_name(const BoundVariant& variant) {
  return std::visit(
      Overloaded{
          [](const SelectorBound& v) {
            return "lemma21:" + selector_name(v.diag) + ":" + selector_name(v.offdiag);
          },
          [](const SharpPairNormBound&) { return std::string("cor23:sharp"); },
          [](const WeakPairNormBound&) { return std::string("cor23:weak"); },
          [](const CoarseSelectorBound& v) {
            return "coarse:" + selector_name(v.diag) + ":" + selector_name(v.offdiag);
          },
          [](const CoarseMaxBound&) { return std::string("special:2.11"); },
          [](const CoarseHoelderBound& v) { return "special:2.12" + p_suffix(v.p); },
          [](const CoarseSumBound&) { return std::string("special:2.13"); },
          [](const WeightedSelectorBound& v) {
            return "thm31:" + selector_name(v.diag) + ":" + selector_name(v.offdiag);
          },
          [](const WeightedCoarseBound& v) {
            std::string s = "cor32:" + std::to_string(v.branch);
            if (v.p) s += p_suffix(*v.p);
            return s;
          },
          [](const BoasBellmanBound&) { return std::string("bb:1.2"); },
          [](const FourierMaxBound&) { return std::string("bb:4.1"); },
          [](const FourierHoelderBound& v) { return "bb:4.3" + p_suffix(v.p); },
          [](const FourierSumBound&) { return std::string("bb:4.5"); },
          [](const OrthoMaxBound&) { return std::string("ortho:4.2"); },
          [](const OrthoHoelderBound& v) { return "ortho:4.4" + p_suffix(v.p); },
          [](const BesselBound&) { return std::string("bessel:1.1"); },
      },
      variant);
}

BoundVariant parse_variant(std::string_view name) {
  const auto parts = split(name, ':');
  const std::string_view head = parts[0];
  const std::size_t n = parts.size();

  if (head == "lemma21") return parse_selector_pair<SelectorBound>(parts, name);
  if (head == "coarse") return parse_selector_pair<CoarseSelectorBound>(parts, name);
  if (head == "thm31") return parse_selector_pair<WeightedSelectorBound>(parts, name);
  if (head == "cor23" && n == 2) {
    if (parts[1] == "sharp") return SharpPairNormBound{};
    if (parts[1] == "weak") return WeakPairNormBound{};
  }
  if (head == "special") {
    if (n == 2 && parts[1] == "2.11") return CoarseMaxBound{};
    if (n == 2 && parts[1] == "2.13") return CoarseSumBound{};
    if (n == 3 && parts[1] == "2.12") return CoarseHoelderBound{parse_p(parts[2], name)};
  }
  if (head == "cor32" && (n == 2 || n == 3)) {
    const std::string_view b = parts[1];
    if (b.size() == 1 && b[0] >= '1' && b[0] <= '4') {
      const int branch = b[0] - '0';
      if (branch == 3 && n == 3) return WeightedCoarseBound{3, parse_p(parts[2], name)};
      if (branch != 3 && n == 2) return WeightedCoarseBound{branch, std::nullopt};
    }
  }
  if (head == "bb") {
    if (n == 2 && parts[1] == "1.2") return BoasBellmanBound{};
    if (n == 2 && parts[1] == "4.1") return FourierMaxBound{};
    if (n == 2 && parts[1] == "4.5") return FourierSumBound{};
    if (n == 3 && parts[1] == "4.3") return FourierHoelderBound{parse_p(parts[2], name)};
  }
  if (head == "ortho") {
    if (n == 2 && parts[1] == "4.2") return OrthoMaxBound{};
    if (n == 3 && parts[1] == "4.4") return OrthoHoelderBound{parse_p(parts[2], name)};
  }
  if (head == "bessel" && n == 2 && parts[1] == "1.1") return BesselBound{};
  unknown(name);
}

bool requires_coefficients(const BoundVariant& variant) {
  return std::holds_alternative<SelectorBound>(variant) ||
         std::holds_alternative<SharpPairNormBound>(variant) ||
         std::holds_alternative<WeakPairNormBound>(variant) ||
         std::holds_alternative<CoarseSelectorBound>(variant) ||
         std::holds_alternative<CoarseMaxBound>(variant) ||
         std::holds_alternative<CoarseHoelderBound>(variant) ||
         std::holds_alternative<CoarseSumBound>(variant) ||
         std::holds_alternative<WeightedSelectorBound>(variant) ||
         std::holds_alternative<WeightedCoarseBound>(variant);
}

bool requires_orthonormal(const BoundVariant& variant) {
  return std::holds_alternative<OrthoMaxBound>(variant) ||
         std::holds_alternative<OrthoHoelderBound>(variant) ||
         std::holds_alternative<BesselBound>(variant);
}

std::vector<BoundVariant> full_catalog(std::span<const double> exponents) {
  std::vector<HoelderExponent> ps;
  for (double e : exponents) ps.emplace_back(e);

  std::vector<DiagSelector> diags{DiagSelector::max()};
  std::vector<OffDiagSelector> offdiags{OffDiagSelector::max()};
  for (const auto& p : ps) {
    diags.push_back(DiagSelector::hoelder(p));
    offdiags.push_back(OffDiagSelector::hoelder(p));
  }
  diags.push_back(DiagSelector::sum());
  offdiags.push_back(OffDiagSelector::sum());

  std::vector<BoundVariant> out;
  for (const auto& d : diags)
    for (const auto& o : offdiags) out.emplace_back(SelectorBound{d, o});
  out.emplace_back(SharpPairNormBound{});
  out.emplace_back(WeakPairNormBound{});
  for (const auto& d : diags)
    for (const auto& o : offdiags) out.emplace_back(CoarseSelectorBound{d, o});
  out.emplace_back(CoarseMaxBound{});
  for (const auto& p : ps) out.emplace_back(CoarseHoelderBound{p});
  out.emplace_back(CoarseSumBound{});
  for (const auto& d : diags)
    for (const auto& o : offdiags) out.emplace_back(WeightedSelectorBound{d, o});
  out.emplace_back(WeightedCoarseBound{1, std::nullopt});
  out.emplace_back(WeightedCoarseBound{2, std::nullopt});
  for (const auto& p : ps) out.emplace_back(WeightedCoarseBound{3, p});
  out.emplace_back(WeightedCoarseBound{4, std::nullopt});
  out.emplace_back(BoasBellmanBound{});
  out.emplace_back(FourierMaxBound{});
  for (const auto& p : ps) out.emplace_back(FourierHoelderBound{p});
  out.emplace_back(FourierSumBound{});
  out.emplace_back(OrthoMaxBound{});
  for (const auto& p : ps) out.emplace_back(OrthoHoelderBound{p});
  out.emplace_back(BesselBound{});
  return out;
}

std::vector<BoundVariant> parse_variant_list(std::string_view spec) {
  if (spec == "all") return full_catalog();
  std::vector<BoundVariant> out;
  for (const auto token : split(spec, ',')) {
    if (token.empty()) throw VariantParseError("empty variant name in list");
    out.push_back(parse_variant(token));
  }
  return out;
}

std::vector<HoelderExponent> exponent_slots(const BoundVariant& variant) {
  std::vector<HoelderExponent> out;
  auto add_pair = [&](const auto& v) {
    if (v.diag.exponent()) out.push_back(*v.diag.exponent());
    if (v.offdiag.exponent()) out.push_back(*v.offdiag.exponent());
  };
  std::visit(Overloaded{
                 [&](const SelectorBound& v) { add_pair(v); },
                 [&](const CoarseSelectorBound& v) { add_pair(v); },
                 [&](const WeightedSelectorBound& v) { add_pair(v); },
                 [&](const CoarseHoelderBound& v) { out.push_back(v.p); },
                 [&](const WeightedCoarseBound& v) {
                   if (v.p) out.push_back(*v.p);
                 },
                 [&](const FourierHoelderBound& v) { out.push_back(v.p); },
                 [&](const OrthoHoelderBound& v) { out.push_back(v.p); },
                 [](const auto&) {},
             },
             variant);
  return out;
}

BoundVariant with_exponent(const BoundVariant& variant, std::size_t slot, HoelderExponent p) {
  if (slot >= exponent_slots(variant).size()) {
    throw std::out_of_range("variant " + variant_name(variant) + " has no exponent slot " +
                            std::to_string(slot));
  }
  auto replace_pair = [&](auto v) {
    std::size_t k = 0;
    if (v.diag.exponent() && k++ == slot) {
      v.diag = DiagSelector::hoelder(p);
      return v;
    }
    v.offdiag = OffDiagSelector::hoelder(p);
    return v;
  };
  return std::visit(Overloaded{
                        [&](const SelectorBound& v) -> BoundVariant { return replace_pair(v); },
                        [&](const CoarseSelectorBound& v) -> BoundVariant {
                          return replace_pair(v);
                        },
                        [&](const WeightedSelectorBound& v) -> BoundVariant {
                          return replace_pair(v);
                        },
                        [&](CoarseHoelderBound v) -> BoundVariant {
                          v.p = p;
                          return v;
                        },
                        [&](WeightedCoarseBound v) -> BoundVariant {
                          v.p = p;
                          return v;
                        },
                        [&](FourierHoelderBound v) -> BoundVariant {
                          v.p = p;
                          return v;
                        },
                        [&](OrthoHoelderBound v) -> BoundVariant {
                          v.p = p;
                          return v;
                        },
                        [&](const auto& v) -> BoundVariant { return v; },
                    },
                    variant);
}

}  // namespace ipb
