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
#include <string_view>
#include <vector>

namespace anisogauge {

/// A finite group given by its multiplication table on {0, ..., n-1}.
class FiniteGroup {
 public:
  /// Validates the table (Latin square, identity, associativity when
  /// `check_associativity`); Errc::BadParameter otherwise.
  FiniteGroup(std::uint32_t order, std::vector<std::uint32_t> table, bool check_associativity = true);

  std::uint32_t order() const { return n_; }
  std::uint32_t identity() const { return e_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[std::size_t{a} * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  bool commute(std::uint32_t a, std::uint32_t b) const { return mul(a, b) == mul(b, a); }

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> table_;
  std::uint32_t e_ = 0;
  std::vector<std::uint32_t> inv_;
};

/// Conjugacy classes, each sorted, ordered by smallest member.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const FiniteGroup& g);

/// Number of conjugacy classes of the subgroup `members` (which must be a
/// subgroup of g), counted with conjugation inside the subgroup.
std::size_t class_count_within(const FiniteGroup& g, const std::vector<std::uint32_t>& members);

std::vector<std::uint32_t> centralizer(const FiniteGroup& g, std::uint32_t x);

/// Order of the commutator subgroup [G, G].
std::size_t commutator_subgroup_order(const FiniteGroup& g);

/// Rank of the Drinfeld center Z(Vec_G): the sum over class representatives
/// x of the class number of C(x). Errc::BoundExceeded above `bound`.
std::uint64_t drinfeld_double_rank(const FiniteGroup& g, std::uint32_t bound = 200);

FiniteGroup cyclic_group(std::uint32_t n);
/// S_n for small n, elements in lexicographic permutation order.
FiniteGroup symmetric_group(std::uint32_t n);
/// Z/m x| Z/k where the generator of Z/k acts by multiplication by r
/// (requires r^k = 1 mod m). Element (a, b) has index b * m + a.
FiniteGroup metacyclic_group(std::uint32_t m, std::uint32_t k, std::uint32_t r);

/// Text format: first line n, then n lines of n indices.
/// Errc::ParseError on malformed text, Errc::BadParameter if not a group.
FiniteGroup parse_group_table(std::string_view text);

}  // namespace anisogauge
