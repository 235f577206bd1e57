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

#include "ipb/space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace ipb {
namespace {

bool is_finite(const Scalar& s) { return std::isfinite(s.real()) && std::isfinite(s.imag()); }

void require_finite(std::span<const Scalar> values, const char* what) {
  for (const auto& v : values) {
    if (!is_finite(v)) throw SpaceError(std::string("non-finite value in ") + what);
  }
}

void require_real(std::span<const Scalar> values, const char* what) {
  for (const auto& v : values) {
    if (v.imag() != 0.0) {
      throw SpaceError(std::string("nonzero imaginary part in real-field ") + what);
    }
  }
}

constexpr double kRouteRelTol = 1e-10;
constexpr double kRouteScaleTol = 1e-14;

}  // namespace

std::string_view to_string(FieldMode mode) {
  return mode == FieldMode::kReal ? "real" : "complex";
}

VectorFamily::VectorFamily(std::size_t dim, std::vector<Vector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ == 0) throw SpaceError("vector family dimension must be positive");
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (vectors_[i].size() != dim_) {
      throw DimensionMismatch("vector " + std::to_string(i) + " has dimension " +
                              std::to_string(vectors_[i].size()) + ", expected " +
                              std::to_string(dim_));
    }
  }
}

double min_hermitian_eigenvalue(std::size_t n, std::span<const Scalar> row_major) {
  if (n == 0) return 0.0;
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * n + j];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvalidGram("eigenvalue solver did not converge");
  return solver.eigenvalues().minCoeff();
}

GramMatrix GramMatrix::validated(std::size_t n, std::vector<Scalar> row_major, double psd_tol) {
  if (row_major.size() != n * n) {
    throw DimensionMismatch("Gram matrix needs " + std::to_string(n * n) + " entries, got " +
                            std::to_string(row_major.size()));
  }
  if (!(psd_tol >= 0.0)) throw SpaceError("psd tolerance must be nonnegative");
  require_finite(row_major, "Gram matrix");

  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = row_major[i * n + i];
    if (d.imag() != 0.0) {
      throw InvalidGram("diagonal entry " + std::to_string(i) + " is not real");
    }
    if (d.real() < 0.0) {
      throw InvalidGram("negative diagonal entry at " + std::to_string(i));
    }
    max_diag = std::max(max_diag, d.real());
    for (std::size_t j = i + 1; j < n; ++j) {
      if (row_major[j * n + i] != std::conj(row_major[i * n + j])) {
        throw InvalidGram("non-Hermitian entry at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
      }
    }
  }

  const double lambda_min = min_hermitian_eigenvalue(n, row_major);
  if (lambda_min < -psd_tol * max_diag) {
    throw InvalidGram("Gram matrix is not positive semidefinite (smallest eigenvalue " +
                      std::to_string(lambda_min) + ")");
  }
  return GramMatrix(n, std::move(row_major));
}

GramMatrix GramMatrix::without_first() const {
  if (n_ == 0) throw SpaceError("cannot drop a row from an empty Gram matrix");
  const std::size_t m = n_ - 1;
  std::vector<Scalar> out(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out[i * m + j] = (*this)(i + 1, j + 1);
  }
  return GramMatrix(m, std::move(out));
}

double GramMatrix::distance_to_identity() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const Scalar target = i == j ? Scalar(1.0) : Scalar(0.0);
      worst = std::max(worst, std::abs((*this)(i, j) - target));
    }
  }
  return worst;
}

Scalar inner_product(std::span<const Scalar> u, std::span<const Scalar> v) {
  if (u.size() != v.size()) {
    throw DimensionMismatch("inner product of vectors with dimensions " +
                            std::to_string(u.size()) + " and " + std::to_string(v.size()));
  }
  Scalar acc(0.0);
  for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * std::conj(v[k]);
  return acc;
}

GramMatrix gram_of_family(const VectorFamily& family) {
  const std::size_t n = family.size();
  std::vector<Scalar> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = inner_product(family[i], family[i]);
    g[i * n + i] = Scalar(d.real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar s = inner_product(family[i], family[j]);
      g[i * n + j] = s;
      g[j * n + i] = std::conj(s);
    }
  }
  return GramMatrix(n, std::move(g));
}

namespace {

struct Expansion {
  Scalar value;
  double scale = 0.0;
};

Expansion gram_expansion(std::span<const Scalar> coeffs, const GramMatrix& gram) {
  if (coeffs.size() != gram.size()) {
    throw DimensionMismatch("coefficient vector has length " + std::to_string(coeffs.size()) +
                            ", family has " + std::to_string(gram.size()) + " members");
  }
  Expansion e{Scalar(0.0), 0.0};
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      const Scalar term = coeffs[i] * std::conj(coeffs[j]) * gram(i, j);
      e.value += term;
      e.scale += std::abs(term);
    }
  }
  return e;
}

void check_imaginary(const Expansion& e) {
  const double tol = kRouteRelTol * std::abs(e.value.real()) + kRouteScaleTol * e.scale;
  if (std::abs(e.value.imag()) > tol) {
    throw InvalidGram("Gram expansion has imaginary part " + std::to_string(e.value.imag()) +
                      "; the Gram matrix is corrupted");
  }
}

}  // namespace

NormSqRoutes combination_norm_sq_routes(std::span<const Scalar> coeffs,
                                        const VectorFamily& family) {
  const GramMatrix gram = gram_of_family(family);
  const Expansion e = gram_expansion(coeffs, gram);

  Vector sum(family.dim(), Scalar(0.0));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t k = 0; k < family.dim(); ++k) sum[k] += coeffs[i] * family[i][k];
  }
  double direct = 0.0;
  for (const auto& s : sum) direct += std::norm(s);

  return NormSqRoutes{direct, e.value.real(), e.value.imag(), e.scale};
}

double combination_norm_sq(std::span<const Scalar> coeffs, const VectorFamily& family) {
  const NormSqRoutes r = combination_norm_sq_routes(coeffs, family);
  check_imaginary(Expansion{Scalar(r.gram, r.gram_imag), r.scale});
  const double tol =
      kRouteRelTol * std::max(std::abs(r.direct), std::abs(r.gram)) + kRouteScaleTol * r.scale;
  if (std::abs(r.direct - r.gram) > tol) {
    throw InvalidGram("direct norm " + std::to_string(r.direct) +
                      " disagrees with Gram expansion " + std::to_string(r.gram));
  }
  return std::max(r.gram, 0.0);
}

double combination_norm_sq(std::span<const Scalar> coeffs, const GramMatrix& gram) {
  const Expansion e = gram_expansion(coeffs, gram);
  check_imaginary(e);
  return std::max(e.value.real(), 0.0);
}

VectorFamily orthonormalize(const VectorFamily& family, double tol) {
  std::vector<Vector> basis;
  basis.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    Vector v = family[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) {
        const Scalar proj = inner_product(v, e);
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= proj * e[k];
      }
    }
    const double norm = std::sqrt(std::real(inner_product(v, v)));
    if (!(norm >= tol)) {
      throw RankDeficient("vector " + std::to_string(i) + " is linearly dependent on its " +
                          "predecessors (residual norm " + std::to_string(norm) + ")");
    }
    for (auto& c : v) c /= norm;
    basis.push_back(std::move(v));
  }
  return VectorFamily(family.dim(), std::move(basis));
}

ProblemInstance::ProblemInstance(FieldMode field, std::variant<ExplicitVectors, GramMatrix> data,
                                 GramMatrix bordered)
    : field_(field),
      data_(std::move(data)),
      bordered_(std::move(bordered)),
      family_gram_(bordered_.without_first()) {}

ProblemInstance ProblemInstance::from_vectors(FieldMode field, Vector x, VectorFamily family) {
  if (x.size() != family.dim()) {
    throw DimensionMismatch("x has dimension " + std::to_string(x.size()) +
                            ", family has dimension " + std::to_string(family.dim()));
  }
  require_finite(x, "x");
  for (const auto& y : family.vectors()) require_finite(y, "family");
  if (field == FieldMode::kReal) {
    require_real(x, "x");
    for (const auto& y : family.vectors()) require_real(y, "family");
  }
  std::vector<Vector> all;
  all.reserve(family.size() + 1);
  all.push_back(x);
  for (const auto& y : family.vectors()) all.push_back(y);
  GramMatrix bordered = gram_of_family(VectorFamily(family.dim(), std::move(all)));
  return ProblemInstance(field, ExplicitVectors{std::move(x), std::move(family)},
                         std::move(bordered));
}

ProblemInstance ProblemInstance::from_bordered_gram(FieldMode field, GramMatrix bordered) {
  if (bordered.size() == 0) throw SpaceError("bordered Gram matrix must include x");
  if (field == FieldMode::kReal) require_real(bordered.entries(), "Gram matrix");
  GramMatrix copy = bordered;
  return ProblemInstance(field, std::move(copy), std::move(bordered));
}

Vector ProblemInstance::fourier_coefficients() const {
  Vector out(size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = fourier(i);
  return out;
}

double ProblemInstance::combination_norm_sq(std::span<const Scalar> coeffs) const {
  if (const auto* v = vectors()) return ipb::combination_norm_sq(coeffs, v->family);
  return ipb::combination_norm_sq(coeffs, family_gram_);
}

ProblemInstance validate_instance(const InstanceCandidate& candidate, double psd_tol) {
  if (const auto* v = std::get_if<InstanceCandidate::Vectors>(&candidate.data)) {
    if (v->x.empty()) throw SpaceError("x must have positive dimension");
    return ProblemInstance::from_vectors(candidate.field, v->x, VectorFamily(v->x.size(), v->y));
  }
  const auto& g = std::get<InstanceCandidate::Gram>(candidate.data);
  if (candidate.field == FieldMode::kReal) require_real(g.row_major, "Gram matrix");
  return ProblemInstance::from_bordered_gram(candidate.field,
                                             GramMatrix::validated(g.n, g.row_major, psd_tol));
}

}  // namespace ipb
