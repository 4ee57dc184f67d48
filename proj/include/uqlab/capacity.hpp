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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uq {

/// Thrown when a request exceeds one of the configured desk-scale ceilings.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Hard ceilings on enumeration and simulation sizes.
struct Budget {
  std::uint64_t max_transcripts = 10'000'000;
  std::uint64_t max_functions = 1'000'000;
  int max_dim = 200;
};

/// Saturating product; returns UINT64_MAX on overflow.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace uq
