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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "ipb/instance_io.hpp"
#include "test_support.hpp"

namespace ipb {
namespace {

TEST(ParseInstance, VectorsMode) {
  const auto file = parse_instance_json(R"({
    "field": "complex", "mode": "vectors",
    "x": [[1, 0], [0, 1]],
    "y": [[[1, 0], [0, 0]], [[0, 0], [0, -1]]],
    "coeffs": [[2, 0], [0, 3]]
  })");
  EXPECT_EQ(file.candidate.field, FieldMode::kComplex);
  const auto* v = std::get_if<InstanceCandidate::Vectors>(&file.candidate.data);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->x[1], Scalar(0, 1));
  ASSERT_EQ(v->y.size(), 2u);
  EXPECT_EQ(v->y[1][1], Scalar(0, -1));
  ASSERT_TRUE(file.coeffs.has_value());
  EXPECT_EQ((*file.coeffs)[1], Scalar(0, 3));

  const auto inst = validate_instance(file.candidate);
  // (x, y_2) = i * conj(-i) = -1
  EXPECT_EQ(inst.fourier(1), Scalar(-1, 0));
}

TEST(ParseInstance, GramMode) {
  const auto file = parse_instance_json(R"({
    "field": "real", "mode": "gram",
    "bordered_gram": [[[1,0],[1,0]], [[1,0],[2,0]]]
  })");
  const auto* g = std::get_if<InstanceCandidate::Gram>(&file.candidate.data);
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(g->n, 2u);
  EXPECT_FALSE(file.coeffs.has_value());
  const auto inst = validate_instance(file.candidate);
  EXPECT_EQ(inst.size(), 1u);
  EXPECT_EQ(inst.family_gram()(0, 0), Scalar(2.0));
}

TEST(ParseInstance, MalformedInputs) {
  const char* bad[] = {
      "{",
      "[]",
      R"({"mode": "vectors", "x": [], "y": []})",
      R"({"field": "quaternion", "mode": "vectors", "x": [[1,0]], "y": []})",
      R"({"field": "real", "mode": "matrix"})",
      R"({"field": "real", "mode": "vectors", "x": [[1]], "y": []})",
      R"({"field": "real", "mode": "vectors", "x": [[1, "a"]], "y": []})",
      R"({"field": "real", "mode": "vectors", "x": [[1, 0]], "y": 3})",
      R"({"field": "real", "mode": "gram", "bordered_gram": []})",
      R"({"field": "real", "mode": "gram", "bordered_gram": [[[1,0],[0,0]], [[0,0]]]})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_instance_json(text), InstanceFormatError) << text;
  }
}

TEST(ParseInstance, WellFormedButInvalidGram) {
  const auto file = parse_instance_json(R"({
    "field": "real", "mode": "gram",
    "bordered_gram": [[[1,0],[2,0]], [[2,0],[1,0]]]
  })");
  EXPECT_THROW(validate_instance(file.candidate), InvalidGram);
}

TEST(ReadInstanceFile, MissingFile) {
  EXPECT_THROW(read_instance_file("/nonexistent/instance.json"), InstanceFormatError);
}

// Shortest round-trip printing keeps every double bit-exact.
TEST(InstanceJson, RoundTripIsExact) {
  testing::CaseSource src(6);
  for (int t = 0; t < 200; ++t) {
    const auto c = src.next(0, 8);
    const auto inst = src.instance(c);

    const auto back = parse_instance_json(instance_to_json(inst, c.coeffs));
    const auto* v = std::get_if<InstanceCandidate::Vectors>(&back.candidate.data);
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(back.candidate.field, c.field);
    EXPECT_EQ(v->x, c.x);
    EXPECT_EQ(v->y, c.y);
    EXPECT_EQ(*back.coeffs, c.coeffs);

    const auto gram_back = parse_instance_json(instance_to_gram_json(inst, std::nullopt));
    const auto* g = std::get_if<InstanceCandidate::Gram>(&gram_back.candidate.data);
    ASSERT_NE(g, nullptr);
    const auto entries = inst.bordered_gram().entries();
    EXPECT_TRUE(std::equal(entries.begin(), entries.end(), g->row_major.begin(),
                           g->row_major.end()));
    EXPECT_FALSE(gram_back.coeffs.has_value());
    EXPECT_NO_THROW(validate_instance(gram_back.candidate));
  }
}

TEST(InstanceJson, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "ipb_instance_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "one.json";
  const auto inst = ProblemInstance::from_vectors(
      FieldMode::kReal, testing::reals({1, 2}),
      VectorFamily(2, {testing::reals({0.1, 0.2}), testing::reals({3, -4})}));
  {
    std::ofstream out(path);
    out << instance_to_json(inst, std::nullopt);
  }
  const auto file = read_instance_file(path);
  const auto again = validate_instance(file.candidate);
  EXPECT_EQ(again.fourier(0), inst.fourier(0));
  EXPECT_EQ(again.fourier(1), inst.fourier(1));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace ipb
