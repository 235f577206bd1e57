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

#include "ipb/exponent.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace ipb {

HoelderExponent::HoelderExponent(double value) : value_(value), conjugate_(0.0) {
  if (!std::isfinite(value) || !(value > 1.0) || value > kMaxHoelderExponent) {
    throw ExponentError("Hoelder exponent " + format_double(value) +
                        " outside the domain (1, 64]");
  }
  conjugate_ = value / (value - 1.0);
}

std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace ipb
