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

#ifndef IPB_INSTANCE_IO_HPP_
#define IPB_INSTANCE_IO_HPP_

// Instance files: JSON with
//   "field": "real" | "complex"
//   "mode":  "vectors" | "gram"
//   vectors: "x": [[re, im], ...], "y": [[[re, im], ...], ...]
//   gram:    "bordered_gram": (n+1) x (n+1) array of [re, im], index 0 = x
//   "coeffs": [[re, im], ...]   optional, length n
// Numbers are written with shortest round-trip precision.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ipb/space.hpp"

namespace ipb {

class InstanceFormatError : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

struct InstanceFile {
  InstanceCandidate candidate;
  std::optional<Vector> coeffs;
};

/// Throws InstanceFormatError on malformed JSON or missing/ill-typed fields.
InstanceFile parse_instance_json(std::string_view text);
InstanceFile read_instance_file(const std::filesystem::path& path);

/// Vectors mode when the instance carries coordinates, gram mode otherwise.
std::string instance_to_json(const ProblemInstance& inst, const std::optional<Vector>& coeffs);

/// Bordered-Gram rendering of any instance.
std::string instance_to_gram_json(const ProblemInstance& inst,
                                  const std::optional<Vector>& coeffs);

}  // namespace ipb

#endif  // IPB_INSTANCE_IO_HPP_
