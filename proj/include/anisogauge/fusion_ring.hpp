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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace anisogauge {

struct FusionTerm {
  std::uint32_t label = 0;
  std::uint64_t mult = 0;

  friend bool operator==(const FusionTerm&, const FusionTerm&) = default;
};

/// Based ring with non-negative structure constants N_{ij}^k, stored sparsely
/// as one sorted term list per ordered pair (i, j).
class FusionRing {
 public:
  FusionRing(std::vector<std::string> labels, std::uint32_t unit, std::vector<std::uint32_t> dual);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::uint32_t i) const { return labels_[i]; }
  std::optional<std::uint32_t> index_of(std::string_view label) const;
  std::uint32_t unit() const { return unit_; }
  std::uint32_t dual(std::uint32_t i) const { return dual_[i]; }

  /// Sets N_{ij}^k; n = 0 removes the term.
  void set(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint64_t n);
  void add(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint64_t n);
  std::uint64_t coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;
  std::span<const FusionTerm> product(std::uint32_t i, std::uint32_t j) const { return rows_[row(i, j)]; }

  std::size_t nonzero_count() const;

  /// i is invertible iff i (x) i* is the unit alone.
  bool is_invertible(std::uint32_t i) const;

  friend bool operator==(const FusionRing&, const FusionRing&) = default;

 private:
  std::size_t row(std::uint32_t i, std::uint32_t j) const { return std::size_t{i} * labels_.size() + j; }

  std::vector<std::string> labels_;
  std::uint32_t unit_;
  std::vector<std::uint32_t> dual_;
  std::vector<std::vector<FusionTerm>> rows_;
};

struct AxiomReport {
  bool unit_ok = true;
  bool associativity_ok = true;
  bool duality_ok = true;
  std::string first_failure;

  bool ok() const { return unit_ok && associativity_ok && duality_ok; }
};

/// Unit law on both sides, associativity on every triple (i, j, k) compared
/// as full product vectors, and the duality identities
/// N_{ij}^1 = [j = i*], N_{ij}^k = N_{i* k}^j = N_{k j*}^i.
AxiomReport verify_axioms(const FusionRing& ring);

/// Frobenius-Perron dimensions. `integral` is set when an integer proposal was
/// verified exactly against d_i d_j = sum_k N_{ij}^k d_k; otherwise the
/// character equations were checked numerically.
struct FpDims {
  std::vector<double> dims;
  std::vector<std::uint64_t> integer_dims;  // filled iff integral
  bool integral = false;
  double global_dimension = 0;
  std::uint64_t integer_global_dimension = 0;  // 0 unless integral
};

/// Errc::NotACharacter if no positive character is found.
FpDims fp_dims(const FusionRing& ring);

/// Grothendieck ring of the Z/p-graded extension of Vec over F_{q^2}:
/// invertibles a in F_{q^2} (as (Z/q)^2) followed by X_1, ..., X_{p-1}.
/// Errc::ExistenceViolated unless p | q + 1; Errc::BadParameter unless p, q
/// are distinct primes.
FusionRing build_extension_ring(std::uint32_t p, std::uint32_t q);

/// Group ring of Z/n.
FusionRing cyclic_group_ring(std::uint32_t n);

/// Text format:
///   fusionring v1 <n>
///   <label> <dual-label>          (n lines, basis order)
///   <i> <j> <k> <N_ij^k>          (nonzero entries, lexicographic)
std::string serialize(const FusionRing& ring);
/// Errc::ParseError on malformed input.
FusionRing parse_fusion_ring(std::string_view text);

}  // namespace anisogauge
