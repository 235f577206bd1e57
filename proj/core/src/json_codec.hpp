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

#ifndef IPB_SRC_JSON_CODEC_HPP_
#define IPB_SRC_JSON_CODEC_HPP_

// nlohmann/json encoders shared by instance files and suite reports.

#include <optional>

#include "ipb/space.hpp"
#include "json.hpp"

namespace ipb::detail {

nlohmann::json scalar_json(const Scalar& s);
nlohmann::json vector_json(std::span<const Scalar> v);
nlohmann::json instance_json(const ProblemInstance& inst, const std::optional<Vector>& coeffs,
                             bool force_gram);

}  // namespace ipb::detail

#endif  // IPB_SRC_JSON_CODEC_HPP_
