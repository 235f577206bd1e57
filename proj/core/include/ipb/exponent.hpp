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

#ifndef IPB_EXPONENT_HPP_
#define IPB_EXPONENT_HPP_

#include <stdexcept>
#include <string>

namespace ipb {

// Above this the Hoelder branches overflow for moderate data and are
// numerically indistinguishable from their max-selector limit.
inline constexpr double kMaxHoelderExponent = 64.0;

class ExponentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Hoelder exponent p in (1, 64] together with its conjugate q = p/(p-1).
class HoelderExponent {
 public:
  /// Throws ExponentError outside (1, 64] or for non-finite input.
  explicit HoelderExponent(double value);

  double value() const { return value_; }
  double conjugate() const { return conjugate_; }

  friend bool operator==(const HoelderExponent& a, const HoelderExponent& b) {
    return a.value_ == b.value_;
  }

 private:
  double value_;
  double conjugate_;
};

/// Shortest decimal string that round-trips to `value` ("2", "1.25", ...).
std::string format_double(double value);

}  // namespace ipb

#endif  // IPB_EXPONENT_HPP_
