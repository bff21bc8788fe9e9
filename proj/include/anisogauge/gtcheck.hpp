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
#include <string>
#include <utility>
#include <vector>

#include "anisogauge/ffield.hpp"
#include "anisogauge/mat2.hpp"
#include "anisogauge/orthogroup.hpp"

namespace anisogauge {

/// Roots of x^2 - tr(M) x + det(M) in F_{q^2}, in (a0, a1) order.
/// Errc::EvenCharacteristic for q = 2.
std::pair<ExtElement, ExtElement> eigenvalues_2x2(const FieldCtx& ctx, const Mat2& m);

/// Outcome of the eigenvalue-ratio test on a split orthogonal map
/// M = [[alpha, beta], [gamma, delta]] with beta invertible.
struct GTVerdict {
  bool group_theoretical = false;
  Mat2 criterion_matrix;  // alpha + beta delta beta^-1
  ExtElement mu1, mu2;    // eigenvalues of criterion_matrix, mu1 <= mu2
  ExtElement ratio;       // mu1 / mu2
  std::optional<ExtElement> ratio_reversed;  // mu2 / mu1 when it differs
  std::string witness;
};

/// Group-theoretical iff mu1 / mu2 is fixed by Frobenius.
/// Errc::BetaSingular, Errc::EvenCharacteristic, Errc::ZeroEigenvalue.
GTVerdict gt_criterion(const FieldCtx& ctx, const SplitOrthMap& m);

/// alpha_g for g = diag(a, a^-1) on the hyperbolic plane.
/// Errc::BadParameter unless a is in F_q \ {0, 1}.
SplitOrthMap hyperbolic_control(const FieldCtx& ctx, Residue a);

/// (x + 1)^3 (x - 1) expands to x^4 + 2x^3 - 2x - 1 over F_q.
bool polynomial_expansion_check(std::uint32_t q);

/// Roots of x^4 + 2x^3 - 2x - 1 in F_{q^2} with multiplicity, by exhaustive
/// scan followed by repeated synthetic division. Sorted.
std::vector<ExtElement> quartic_root_multiset(const FieldCtx& ctx);

/// The expansion identity, plus (for q <= 50) the root scan showing the only
/// roots in F_{q^2} are 1 and -1.
bool polynomial_identity_check(std::uint32_t q);

/// Checks assembled for the rotation g = rho_c with c of order p in ker(N).
struct NonGtReport {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  ExtElement c;
  bool eigenvalues_are_c_and_inverse = false;  // (a) with Frobenius swapping them
  bool lambda_equals_c = false;                // (b) (1 + c)/(1 + c^-1) = c
  bool lambda_outside_base = false;            // (c)
  bool criterion_not_gt = false;               // (d)
  bool criterion_matrix_is_id_plus_g = false;  // alpha + beta delta beta^-1 = Id + g
  bool embedding_is_homomorphism = false;      // on <rho_c>
  bool embedding_orthogonal = false;
  GTVerdict verdict;

  bool ok() const {
    return eigenvalues_are_c_and_inverse && lambda_equals_c && lambda_outside_base && criterion_not_gt &&
           criterion_matrix_is_id_plus_g && embedding_is_homomorphism && embedding_orthogonal;
  }
};

/// Errc::ExistenceViolated unless p | q + 1; Errc::BadParameter unless p, q are
/// distinct odd primes.
NonGtReport nongt_theorem_suite(std::uint32_t p, std::uint32_t q);

/// p | q + 1 for odd primes p < q. Errc::BadParameter otherwise.
bool existence_gate(std::uint32_t p, std::uint32_t q);

}  // namespace anisogauge
