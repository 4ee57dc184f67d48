// Copyright 2026 The uqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace uq {

/// Global tolerance for Hermiticity, trace and positivity checks.
inline constexpr double kNumTol = 1e-9;

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Product of cyclic groups Z_{m1} x ... x Z_{mr}. Elements are mixed-radix
/// integers in [0, order) with the first factor most significant.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> factors);
  static FiniteAbelianGroup cyclic(int m) { return FiniteAbelianGroup({m}); }

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }
  bool contains(int a) const { return a >= 0 && a < order_; }

  int add(int a, int b) const;
  int negate(int a) const;
  std::vector<int> decode(int a) const;
  int encode(std::span<const int> components) const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  void require(int a) const;

  std::vector<int> factors_;
  int order_ = 1;
};

/// Componentwise sum modulo each factor.
inline int group_add(const FiniteAbelianGroup& g, int a, int b) { return g.add(a, b); }

double max_abs_entry(const ComplexMatrix& m);
double hermiticity_error(const ComplexMatrix& m);
double unitarity_error(const ComplexMatrix& u);
/// Smallest eigenvalue of the Hermitian part (A + A^dagger) / 2.
double min_eigenvalue(const ComplexMatrix& m);

/// Hermitian, unit-trace, positive semidefinite operator.
class DensityMatrix {
 public:
  /// Validates against kNumTol; throws std::domain_error.
  explicit DensityMatrix(ComplexMatrix rho);
  static DensityMatrix pure(const ComplexVector& psi);

  int dim() const { return static_cast<int>(rho_.rows()); }
  const ComplexMatrix& matrix() const { return rho_; }

 private:
  ComplexMatrix rho_;
};

/// Positive operators summing to the identity. Outcome s is the index of
/// its element.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> elements);

  int dim() const { return static_cast<int>(elements_.front().rows()); }
  int size() const { return static_cast<int>(elements_.size()); }
  const ComplexMatrix& operator[](int s) const { return elements_[s]; }
  const std::vector<ComplexMatrix>& elements() const { return elements_; }

 private:
  std::vector<ComplexMatrix> elements_;
};

/// splitmix64 finalizer; derives independent stream seeds from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Haar-approximate unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases divided out. Deterministic for a given seed.
ComplexMatrix random_unitary(int dim, std::uint64_t seed);

/// Haar-random unit vector.
ComplexVector random_state_vector(int dim, std::uint64_t seed);

/// Projective measurement from a random basis, columns grouped into
/// n_outcomes blocks whose sizes differ by at most one.
Povm random_povm(int dim, int n_outcomes, std::uint64_t seed);

}  // namespace uq
