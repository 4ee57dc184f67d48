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

#include "uqlab/problems.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "uqlab/capacity.hpp"

namespace uq {

namespace {

json integer_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("prior entries must be integers");
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

LearningProblem::LearningProblem(std::string name, int domain_size, FiniteAbelianGroup group,
                                 std::vector<OracleFunction> functions, std::vector<int> labels,
                                 std::vector<Rational> prior)
    : name_(std::move(name)),
      domain_size_(domain_size),
      group_(std::move(group)),
      functions_(std::move(functions)),
      labels_(std::move(labels)),
      prior_(std::move(prior)) {
  if (domain_size_ < 1) throw std::invalid_argument("domain size must be positive");
  if (functions_.empty()) throw std::invalid_argument("function class is empty");
  if (labels_.size() != functions_.size() || prior_.size() != functions_.size()) {
    throw std::invalid_argument("need exactly one label and one prior weight per function");
  }
  for (const auto& f : functions_) {
    if (f.size() != domain_size_) throw std::invalid_argument("function table length != domain size");
    for (int y : f.values) {
      if (!group_.contains(y)) throw std::invalid_argument("function value outside the response group");
    }
  }
  Rational total = 0;
  for (auto& w : prior_) {
    w.canonicalize();
    if (sgn(w) < 0) throw std::invalid_argument("prior weights must be non-negative");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("prior must sum to exactly 1, got " + to_string(total));

  std::vector<int> order(functions_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return functions_[a] < functions_[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (functions_[order[i]] == functions_[order[i - 1]]) {
      throw std::invalid_argument("duplicate function table in class");
    }
  }

  prior_values_.reserve(prior_.size());
  for (const auto& w : prior_) prior_values_.push_back(w.get_d());
  std::set<int> distinct(labels_.begin(), labels_.end());
  parts_.assign(distinct.begin(), distinct.end());
}

int LearningProblem::part_index(int label) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), label);
  if (it == parts_.end() || *it != label) throw std::out_of_range("unknown part label " + std::to_string(label));
  return static_cast<int>(it - parts_.begin());
}

Rational LearningProblem::part_prior(int label) const {
  Rational mass = 0;
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    if (labels_[i] == label) mass += prior_[i];
  }
  return mass;
}

RationalDistribution LearningProblem::prior_distribution() const {
  RationalDistribution d;
  for (int j : parts_) d[j] = 0;
  for (std::size_t i = 0; i < functions_.size(); ++i) d[labels_[i]] += prior_[i];
  return d;
}

LearningProblem make_parity(int n) {
  if (n < 1 || n > 12) throw CapacityError("parity supports 1 <= N <= 12, got N=" + std::to_string(n));
  const int count = 1 << n;
  std::vector<OracleFunction> functions;
  std::vector<int> labels;
  functions.reserve(count);
  for (int mask = 0; mask < count; ++mask) {
    OracleFunction f;
    f.values.resize(n);
    for (int x = 0; x < n; ++x) f.values[x] = (mask >> x) & 1;
    labels.push_back(std::popcount(static_cast<unsigned>(mask)) % 2);
    functions.push_back(std::move(f));
  }
  std::vector<Rational> prior(count, Rational(1, count));
  return LearningProblem("parity-" + std::to_string(n), n, FiniteAbelianGroup::cyclic(2),
                         std::move(functions), std::move(labels), std::move(prior));
}

LearningProblem make_image_parity() {
  std::vector<OracleFunction> functions;
  std::vector<int> labels;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const std::set<int> image{a, b, c};
        functions.push_back(OracleFunction{{a, b, c}});
        labels.push_back(image.size() % 2 == 0 ? 0 : 1);
      }
    }
  }
  std::vector<Rational> prior(functions.size(), Rational(1, 27));
  return LearningProblem("image-parity", 3, FiniteAbelianGroup::cyclic(3), std::move(functions),
                         std::move(labels), std::move(prior));
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int shamir_evaluate(int p, std::span<const int> coeffs, int x) {
  long long acc = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = (acc * x + coeffs[i]) % p;
  return static_cast<int>(((acc % p) + p) % p);
}

LearningProblem make_shamir(int p, int k) {
  if (!is_prime(p)) throw std::domain_error("shamir modulus must be prime, got " + std::to_string(p));
  if (k < 0 || k + 1 >= p) throw std::domain_error("shamir degree must satisfy k + 1 < p");
  const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(p), static_cast<unsigned>(k + 1));
  if (count > 1'000'000) {
    throw CapacityError("shamir class size p^(k+1) = " + std::to_string(count) + " exceeds 10^6");
  }
  std::vector<OracleFunction> functions;
  std::vector<int> labels;
  functions.reserve(count);
  std::vector<int> coeffs(k + 1, 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rem = idx;
    for (int i = k; i >= 0; --i) {
      coeffs[i] = static_cast<int>(rem % p);
      rem /= p;
    }
    OracleFunction f;
    f.values.resize(p - 1);
    for (int x = 1; x < p; ++x) f.values[x - 1] = shamir_evaluate(p, coeffs, x);
    functions.push_back(std::move(f));
    labels.push_back(coeffs[0]);
  }
  std::vector<Rational> prior(count, Rational(1, static_cast<long>(count)));
  return LearningProblem("shamir-" + std::to_string(p) + "-" + std::to_string(k), p - 1,
                         FiniteAbelianGroup::cyclic(p), std::move(functions), std::move(labels),
                         std::move(prior));
}

namespace {

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

int shamir_reconstruct(int p, int k, std::span<const std::pair<int, int>> shares) {
  if (!is_prime(p)) throw std::domain_error("shamir modulus must be prime");
  if (static_cast<int>(shares.size()) != k + 1) {
    throw std::invalid_argument("need exactly k+1 = " + std::to_string(k + 1) + " shares");
  }
  std::set<int> seen;
  for (auto [x, y] : shares) {
    if (x < 1 || x >= p) throw std::invalid_argument("share point outside {1..p-1}");
    if (y < 0 || y >= p) throw std::invalid_argument("share value outside Z_p");
    if (!seen.insert(x).second) throw std::invalid_argument("duplicate share point");
  }
  // f(0) = sum_i y_i prod_{m != i} x_m / (x_m - x_i)
  long long secret = 0;
  for (std::size_t i = 0; i < shares.size(); ++i) {
    long long num = 1, den = 1;
    for (std::size_t m = 0; m < shares.size(); ++m) {
      if (m == i) continue;
      num = num * shares[m].first % p;
      den = den * (((shares[m].first - shares[i].first) % p + p) % p) % p;
    }
    const long long basis = num * mod_pow(den, p - 2, p) % p;
    secret = (secret + shares[i].second * basis) % p;
  }
  return static_cast<int>(secret);
}

std::optional<RationalDistribution> posterior_classical(const LearningProblem& problem,
                                                        const Transcript& transcript) {
  for (auto [x, y] : transcript) {
    if (x < 0 || x >= problem.domain_size()) throw std::domain_error("query point outside the domain");
    if (!problem.group().contains(y)) throw std::domain_error("response outside the group");
  }
  RationalDistribution mass;
  for (int j : problem.parts()) mass[j] = 0;
  Rational total = 0;
  const auto& fns = problem.functions();
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const bool consistent = std::all_of(transcript.begin(), transcript.end(),
                                        [&](const auto& q) { return fns[i](q.first) == q.second; });
    if (!consistent) continue;
    mass[problem.labels()[i]] += problem.prior()[i];
    total += problem.prior()[i];
  }
  if (sgn(total) == 0) return std::nullopt;
  for (auto& [j, m] : mass) m /= total;
  return mass;
}

json problem_to_json(const LearningProblem& problem) {
  json fns = json::array();
  for (const auto& f : problem.functions()) fns.push_back(f.values);
  json prior = json::array();
  for (const auto& w : problem.prior()) {
    prior.push_back(json::array({integer_to_json(w.get_num()), integer_to_json(w.get_den())}));
  }
  json j;
  j["domain_size"] = problem.domain_size();
  j["group"] = group_to_json(problem.group());
  j["functions"] = std::move(fns);
  j["labels"] = problem.labels();
  j["prior"] = std::move(prior);
  return j;
}

LearningProblem problem_from_json(const json& j, std::string name) {
  const int domain_size = j.at("domain_size").get<int>();
  auto group = group_from_json(j.at("group"));
  std::vector<OracleFunction> functions;
  for (const auto& row : j.at("functions")) functions.push_back(OracleFunction{row.get<std::vector<int>>()});
  auto labels = j.at("labels").get<std::vector<int>>();
  std::vector<Rational> prior;
  for (const auto& w : j.at("prior")) {
    if (!w.is_array() || w.size() != 2) throw std::invalid_argument("prior entries must be [num, den]");
    const mpz_class den = integer_from_json(w[1]);
    if (den == 0) throw std::invalid_argument("zero prior denominator");
    prior.emplace_back(integer_from_json(w[0]), den);
  }
  return LearningProblem(std::move(name), domain_size, std::move(group), std::move(functions),
                         std::move(labels), std::move(prior));
}

LearningProblem pad_with_zero_point(const LearningProblem& problem) {
  std::vector<OracleFunction> functions = problem.functions();
  for (auto& f : functions) f.values.push_back(0);
  return LearningProblem(problem.name() + "+pad", problem.domain_size() + 1, problem.group(),
                         std::move(functions), problem.labels(), problem.prior());
}

}  // namespace uq
