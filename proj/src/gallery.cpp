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

#include "uqlab/gallery.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace uq {

namespace {

// Operators on the query register only, lifted by (x) I_Y.
ComplexMatrix lift(const ComplexMatrix& on_query) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  return Eigen::kroneckerProduct(on_query, id).eval();
}

ComplexMatrix pair_hadamard(int n, int pair) {
  ComplexMatrix h = ComplexMatrix::Identity(n, n);
  const double r = 1.0 / std::sqrt(2.0);
  const int a = 2 * pair, b = 2 * pair + 1;
  h(a, a) = r;
  h(a, b) = r;
  h(b, a) = r;
  h(b, b) = -r;
  return h;
}

ComplexMatrix shift_by_two(int n) {
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (int x = 0; x < n; ++x) s((x + 2) % n, x) = 1.0;
  return s;
}

}  // namespace

QuantumAlgorithm pairwise_parity(int n) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("pairwise parity needs even N >= 2; pad odd N");
  if (n > 8) throw CapacityError("pairwise parity supports N <= 8");
  const int pairs = n / 2;
  const int d = 2 * n;

  // (|0> + |1>)/sqrt2 on the query register, (|0> - |1>)/sqrt2 on the response.
  ComplexVector psi = ComplexVector::Zero(d);
  psi(0) = 0.5;
  psi(1) = -0.5;
  psi(2) = 0.5;
  psi(3) = -0.5;

  std::vector<ComplexMatrix> unitaries;
  for (int q = 0; q < pairs; ++q) {
    ComplexMatrix u = pair_hadamard(n, q);
    if (q + 1 < pairs) u = pair_hadamard(n, q + 1) * shift_by_two(n) * u;
    unitaries.push_back(lift(u));
  }

  ComplexMatrix even = ComplexMatrix::Zero(n, n);
  for (int x = 0; x < n; x += 2) even(x, x) = 1.0;
  const ComplexMatrix odd = ComplexMatrix::Identity(n, n) - even;
  Povm povm({lift(even), lift(odd)});

  return QuantumAlgorithm(n, FiniteAbelianGroup::cyclic(2), 1, DensityMatrix::pure(psi), std::move(unitaries),
                          std::move(povm), std::map<int, int>{{kOutcomeEven, 0}, {kOutcomeOdd, 1}});
}

QuantumAlgorithm deutsch() { return pairwise_parity(2); }

QuantumAlgorithm pairwise_parity_padded(int n) { return pairwise_parity(n % 2 == 0 ? n : n + 1); }

QuantumAlgorithm constant_guess(int x_dim, const FiniteAbelianGroup& group, int label) {
  const int d = x_dim * group.order();
  ComplexVector psi = ComplexVector::Zero(d);
  psi(0) = 1.0;
  return QuantumAlgorithm(x_dim, group, 1, DensityMatrix::pure(psi), {}, Povm({ComplexMatrix::Identity(d, d)}),
                          std::map<int, int>{{0, label}});
}

std::vector<std::string> gallery_names() { return {"deutsch", "pairwise-parity"}; }

GalleryEntry gallery_entry(const std::string& name, int parameter) {
  if (name == "deutsch") return {name, 2, deutsch(), 1.0};
  if (name == "pairwise-parity") {
    if (parameter < 1) throw std::invalid_argument("pairwise-parity needs --n");
    return {name, parameter, pairwise_parity_padded(parameter), 1.0};
  }
  throw std::invalid_argument("unknown gallery algorithm '" + name + "'");
}

}  // namespace uq
