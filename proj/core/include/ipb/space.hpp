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

#ifndef IPB_SPACE_HPP_
#define IPB_SPACE_HPP_

// Finite-dimensional inner-product-space primitives: coordinate vectors,
// Gram matrices and the problem instances every bound is evaluated on.
//
// Inner products are linear in the first slot and conjugate-linear in the
// second: (u, v) = sum_k u_k * conj(v_k).

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ipb {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

enum class FieldMode { kReal, kComplex };

std::string_view to_string(FieldMode mode);

// Default PSD tolerance, relative to the largest Gram diagonal entry.
inline constexpr double kDefaultPsdTol = 1e-9;

class SpaceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionMismatch : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

class RankDeficient : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

class InvalidGram : public SpaceError {
 public:
  using SpaceError::SpaceError;
};

/// A family z_1..z_n of coordinate vectors sharing one dimension. n may be 0.
class VectorFamily {
 public:
  /// Throws DimensionMismatch if any vector's length differs from `dim`, or
  /// SpaceError if `dim` is zero.
  VectorFamily(std::size_t dim, std::vector<Vector> vectors);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }
  const std::vector<Vector>& vectors() const { return vectors_; }

 private:
  std::size_t dim_;
  std::vector<Vector> vectors_;
};

/// Hermitian positive-semidefinite matrix of pairwise inner products.
///
/// Instances are valid by construction: either tabulated from actual vectors
/// (gram_of_family) or admitted through GramMatrix::validated.
class GramMatrix {
 public:
  GramMatrix() = default;

  /// Checks finiteness, exact Hermitian symmetry, a real nonnegative
  /// diagonal, and smallest eigenvalue >= -psd_tol * max diagonal entry.
  /// Throws InvalidGram with the failing condition.
  static GramMatrix validated(std::size_t n, std::vector<Scalar> row_major,
                              double psd_tol = kDefaultPsdTol);

  std::size_t size() const { return n_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  double norm_sq(std::size_t i) const { return (*this)(i, i).real(); }

  /// Drops row and column 0; turns the bordered Gram of (x, y_1..y_n) into
  /// the Gram of y_1..y_n.
  GramMatrix without_first() const;

  /// Entrywise distance to the identity (max-abs).
  double distance_to_identity() const;

  std::span<const Scalar> entries() const { return entries_; }

 private:
  friend GramMatrix gram_of_family(const VectorFamily& family);
  GramMatrix(std::size_t n, std::vector<Scalar> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t n_ = 0;
  std::vector<Scalar> entries_;
};

/// Smallest eigenvalue of a Hermitian matrix given row-major; used by PSD
/// validation and exposed for diagnostics.
double min_hermitian_eigenvalue(std::size_t n, std::span<const Scalar> row_major);

/// (u, v) = sum_k u_k conj(v_k). Throws DimensionMismatch.
Scalar inner_product(std::span<const Scalar> u, std::span<const Scalar> v);

GramMatrix gram_of_family(const VectorFamily& family);

/// Both evaluations of ||sum_i a_i z_i||^2 for explicit vectors.
struct NormSqRoutes {
  double direct = 0.0;  // norm of the summed vector
  double gram = 0.0;    // sum_ij a_i conj(a_j) (z_i, z_j)
  double gram_imag = 0.0;
  double scale = 0.0;   // sum_ij |a_i| |a_j| |(z_i, z_j)|, the rounding scale
};

NormSqRoutes combination_norm_sq_routes(std::span<const Scalar> coeffs,
                                        const VectorFamily& family);

/// ||sum_i a_i z_i||^2 via the Gram expansion. With explicit vectors the
/// direct norm is computed as well and both must agree to 1e-10 relative.
/// Throws DimensionMismatch on length mismatch and InvalidGram when the
/// routes disagree or the double sum carries a non-negligible imaginary part.
double combination_norm_sq(std::span<const Scalar> coeffs, const VectorFamily& family);
double combination_norm_sq(std::span<const Scalar> coeffs, const GramMatrix& gram);

/// Modified Gram-Schmidt with one reorthogonalization pass. Throws
/// RankDeficient when a residual norm falls below `tol`.
VectorFamily orthonormalize(const VectorFamily& family, double tol = 1e-10);

struct ExplicitVectors {
  Vector x;
  VectorFamily family;
};

/// x, y_1..y_n; either as coordinates or as the bordered Gram matrix of
/// (x, y_1, ..., y_n) with index 0 = x. Immutable once built.
class ProblemInstance {
 public:
  /// Vectors must be finite and share a dimension; in real mode every
  /// imaginary part must be exactly zero.
  static ProblemInstance from_vectors(FieldMode field, Vector x, VectorFamily family);
  static ProblemInstance from_bordered_gram(FieldMode field, GramMatrix bordered);

  FieldMode field() const { return field_; }
  std::size_t size() const { return family_gram_.size(); }

  const ExplicitVectors* vectors() const { return std::get_if<ExplicitVectors>(&data_); }
  bool has_vectors() const { return vectors() != nullptr; }

  const GramMatrix& bordered_gram() const { return bordered_; }
  const GramMatrix& family_gram() const { return family_gram_; }

  double x_norm_sq() const { return bordered_.norm_sq(0); }
  /// (x, y_i)
  Scalar fourier(std::size_t i) const { return bordered_(0, i + 1); }
  Vector fourier_coefficients() const;

  /// ||sum a_i y_i||^2, using both routes when vectors are present.
  double combination_norm_sq(std::span<const Scalar> coeffs) const;

 private:
  ProblemInstance(FieldMode field, std::variant<ExplicitVectors, GramMatrix> data,
                  GramMatrix bordered);

  FieldMode field_;
  std::variant<ExplicitVectors, GramMatrix> data_;
  GramMatrix bordered_;
  GramMatrix family_gram_;
};

/// Raw, unvalidated instance as read from a file or assembled by hand.
struct InstanceCandidate {
  FieldMode field = FieldMode::kReal;
  struct Vectors {
    Vector x;
    std::vector<Vector> y;
  };
  struct Gram {
    std::size_t n = 0;  // bordered size, n_family + 1
    std::vector<Scalar> row_major;
  };
  std::variant<Vectors, Gram> data;
};

/// Admits a candidate as a ProblemInstance. Throws SpaceError subclasses
/// (non-finite values, imaginary parts in real mode, dimension mismatch,
/// non-Hermitian entry, negative diagonal, eigenvalue below tolerance).
ProblemInstance validate_instance(const InstanceCandidate& candidate,
                                  double psd_tol = kDefaultPsdTol);

}  // namespace ipb

#endif  // IPB_SPACE_HPP_
