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

#include "uqlab/algebra.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

#include "uqlab/capacity.hpp"

namespace uq {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::domain_error("group needs at least one cyclic factor");
  std::int64_t order = 1;
  for (int m : factors_) {
    if (m < 2) throw std::domain_error("cyclic factor order must be >= 2, got " + std::to_string(m));
    order *= m;
    if (order > std::numeric_limits<int>::max()) throw std::domain_error("group order overflows");
  }
  order_ = static_cast<int>(order);
}

void FiniteAbelianGroup::require(int a) const {
  if (!contains(a)) {
    throw std::domain_error("element " + std::to_string(a) + " outside [0, " + std::to_string(order_) + ")");
  }
}

std::vector<int> FiniteAbelianGroup::decode(int a) const {
  require(a);
  std::vector<int> c(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    c[i] = a % factors_[i];
    a /= factors_[i];
  }
  return c;
}

int FiniteAbelianGroup::encode(std::span<const int> components) const {
  if (components.size() != factors_.size()) throw std::domain_error("component count mismatch");
  int a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (components[i] < 0 || components[i] >= factors_[i]) throw std::domain_error("component out of range");
    a = a * factors_[i] + components[i];
  }
  return a;
}

int FiniteAbelianGroup::add(int a, int b) const {
  require(a);
  require(b);
  if (factors_.size() == 1) return (a + b) % order_;
  int result = 0;
  int stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const int m = factors_[i];
    const int ca = a % m, cb = b % m;
    result += ((ca + cb) % m) * stride;
    stride *= m;
    a /= m;
    b /= m;
  }
  return result;
}

int FiniteAbelianGroup::negate(int a) const {
  require(a);
  auto c = decode(a);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = (factors_[i] - c[i]) % factors_[i];
  return encode(c);
}

double max_abs_entry(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_error(const ComplexMatrix& m) { return max_abs_entry(m - m.adjoint()); }

double unitarity_error(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return max_abs_entry(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

double min_eigenvalue(const ComplexMatrix& m) {
  const ComplexMatrix h = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() == 0 || rho_.rows() != rho_.cols()) throw std::domain_error("density matrix must be square and non-empty");
  if (hermiticity_error(rho_) > kNumTol) throw std::domain_error("density matrix is not Hermitian");
  if (std::abs(rho_.trace() - Complex(1.0)) > kNumTol) throw std::domain_error("density matrix trace is not 1");
  if (min_eigenvalue(rho_) < -kNumTol) throw std::domain_error("density matrix is not positive semidefinite");
}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::domain_error("zero state vector");
  const ComplexVector v = psi / norm;
  return DensityMatrix(v * v.adjoint());
}

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::domain_error("POVM needs at least one element");
  const auto d = elements_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& e : elements_) {
    if (e.rows() != d || e.cols() != d) throw std::domain_error("POVM elements differ in dimension");
    if (hermiticity_error(e) > kNumTol) throw std::domain_error("POVM element is not Hermitian");
    if (min_eigenvalue(e) < -kNumTol) throw std::domain_error("POVM element is not positive semidefinite");
    sum += e;
  }
  if (max_abs_entry(sum - ComplexMatrix::Identity(d, d)) > kNumTol) {
    throw std::domain_error("POVM elements do not sum to the identity");
  }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) / std::sqrt(2.0);
    }
  }
  return g;
}

}  // namespace

ComplexMatrix random_unitary(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::domain_error("unitary dimension must be >= 1");
  std::mt19937_64 rng(seed);
  const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

ComplexVector random_state_vector(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::domain_error("state dimension must be >= 1");
  std::mt19937_64 rng(seed);
  ComplexVector v = gaussian_matrix(dim, 1, rng).col(0);
  return v / v.norm();
}

Povm random_povm(int dim, int n_outcomes, std::uint64_t seed) {
  if (dim < 1) throw std::domain_error("POVM dimension must be >= 1");
  if (n_outcomes < 1 || n_outcomes > dim) {
    throw std::domain_error("projective POVM needs 1 <= n_outcomes <= dim");
  }
  const ComplexMatrix u = random_unitary(dim, seed);
  const int base = dim / n_outcomes;
  const int extra = dim % n_outcomes;
  std::vector<ComplexMatrix> elements;
  elements.reserve(n_outcomes);
  int col = 0;
  for (int s = 0; s < n_outcomes; ++s) {
    const int width = base + (s < extra ? 1 : 0);
    const auto block = u.middleCols(col, width);
    elements.emplace_back(block * block.adjoint());
    col += width;
  }
  return Povm(std::move(elements));
}

}  // namespace uq
