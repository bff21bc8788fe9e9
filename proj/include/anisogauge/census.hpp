/* Copyright 2026 The anisogauge Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anisogauge/ffield.hpp"
#include "anisogauge/finite_group.hpp"

namespace anisogauge {

struct CensusEntry {
  std::string label;
  std::uint64_t dimension = 0;
  std::uint64_t count = 0;

  friend bool operator==(const CensusEntry&, const CensusEntry&) = default;
};

/// Inventory of simple objects by dimension, with the global dimension the
/// inventory is supposed to account for.
struct Census {
  std::vector<CensusEntry> entries;
  std::uint64_t global_dimension = 0;

  std::uint64_t rank() const;
  std::uint64_t sum_of_squares() const;
  bool consistent() const { return sum_of_squares() == global_dimension; }
  /// Total count per dimension, ascending by dimension.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> by_dimension() const;
};

/// Orbits of v -> c v on F_{q^2} \ {0}, c = pick_order_p(q, p). Each orbit is
/// sorted and the list is ordered by smallest member.
/// Errc::ExistenceViolated unless p | q + 1.
std::vector<std::vector<ExtElement>> orbit_census(std::uint32_t p, std::uint32_t q);

/// Simple objects of the Z/p-equivariantization of the extension category:
/// p invertibles, (q^2 - 1)/p orbit sums of dimension p, p(p - 1) twisted X_i
/// of dimension q. Global dimension p^2 q^2.
Census equivariantization_census(std::uint32_t p, std::uint32_t q);

/// Irreducible representations of F_{q^2} x|_c Z/p by the little-group method
/// on the character group (Z/q)^2. Global dimension p q^2.
Census semidirect_irreps(std::uint32_t p, std::uint32_t q);

/// The group F_{q^2} x|_c Z/p itself; element (v, b) has index b q^2 + v with
/// v enumerated in (a0, a1) order.
FiniteGroup semidirect_group(std::uint32_t p, std::uint32_t q);

}  // namespace anisogauge
