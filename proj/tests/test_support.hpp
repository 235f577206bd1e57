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

#ifndef IPB_TESTS_TEST_SUPPORT_HPP_
#define IPB_TESTS_TEST_SUPPORT_HPP_

// Shared fixtures for the unit and acceptance tests. Random draws here use
// their own engine so test data never depends on the library generator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ipb/space.hpp"

namespace ipb::testing {

inline Vector basis(std::size_t dim, std::size_t k) {
  Vector v(dim, Scalar(0.0));
  v[k] = Scalar(1.0);
  return v;
}

inline Vector reals(std::initializer_list<double> xs) {
  Vector v;
  for (double x : xs) v.emplace_back(x);
  return v;
}

inline bool close_rel(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b)) + abs_floor;
}

struct RandomCase {
  FieldMode field;
  Vector x;
  std::vector<Vector> y;
  Vector coeffs;
  std::size_t dim;
};

class CaseSource {
 public:
  explicit CaseSource(std::uint64_t seed) : rng_(seed) {}

  Scalar scalar(FieldMode field) {
    const double re = normal_(rng_);
    const double im = field == FieldMode::kComplex ? normal_(rng_) : 0.0;
    return {re, im};
  }

  Vector vec(std::size_t dim, FieldMode field) {
    Vector v(dim);
    for (auto& s : v) s = scalar(field);
    return v;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double uniform_real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  RandomCase next(int n_min = 1, int n_max = 8, int d_min = 1, int d_max = 8) {
    RandomCase c;
    c.field = uniform(0, 1) ? FieldMode::kComplex : FieldMode::kReal;
    const auto n = static_cast<std::size_t>(uniform(n_min, n_max));
    c.dim = static_cast<std::size_t>(uniform(d_min, d_max));
    c.x = vec(c.dim, c.field);
    for (std::size_t i = 0; i < n; ++i) c.y.push_back(vec(c.dim, c.field));
    c.coeffs = vec(n, c.field);
    return c;
  }

  ProblemInstance instance(const RandomCase& c) const {
    return ProblemInstance::from_vectors(c.field, c.x, VectorFamily(c.dim, c.y));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_;
};

// Brute-force reference values straight from the definitions.
inline Scalar naive_inner(const Vector& u, const Vector& v) {
  Scalar s(0.0);
  for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * std::conj(v[k]);
  return s;
}

inline double naive_combination_norm_sq(const Vector& a, const std::vector<Vector>& z,
                                        std::size_t dim) {
  Vector sum(dim, Scalar(0.0));
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t k = 0; k < dim; ++k) sum[k] += a[i] * z[i][k];
  }
  return naive_inner(sum, sum).real();
}

inline double ordered_pair_sum(const std::vector<double>& a, double g) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) s += std::pow(a[i], g) * std::pow(a[j], g);
    }
  }
  return s;
}

}  // namespace ipb::testing

#endif  // IPB_TESTS_TEST_SUPPORT_HPP_
