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
#include <vector>

#include "anisogauge/ffield.hpp"
#include "anisogauge/mat2.hpp"
#include "anisogauge/quadspace.hpp"

namespace anisogauge {

/// Orthogonal map of the anisotropic plane in structured form
/// v -> c * sigma^s(v), with N(c) = 1 and s the reflection flag.
class OrthMap {
 public:
  const ExtElement& rotation_part() const { return c_; }
  bool reflects() const { return reflect_; }

  ExtElement apply(const ExtElement& v) const { return c_ * (reflect_ ? frobenius(v) : v); }
  /// (c, s) * (c', s') = (c sigma^s(c'), s xor s'); this map applied after other.
  OrthMap compose(const OrthMap& other) const;
  OrthMap inverse() const;
  /// Matrix in the basis {1, theta}.
  Mat2 matrix() const;

  friend bool operator==(const OrthMap&, const OrthMap&) = default;

 private:
  friend OrthMap rotation(const ExtElement& c);
  friend OrthMap reflection(const ExtElement& c);
  OrthMap(const ExtElement& c, bool reflect) : c_(c), reflect_(reflect) {}

  ExtElement c_;
  bool reflect_ = false;
};

/// Matrix of v -> x v in the basis {1, theta}.
Mat2 multiplication_matrix(const ExtElement& x);

/// v -> c v. Errc::NotNormOne unless N(c) = 1.
OrthMap rotation(const ExtElement& c);
/// v -> c sigma(v). Errc::NotNormOne unless N(c) = 1.
OrthMap reflection(const ExtElement& c);

/// All form-preserving invertible 2x2 matrices of a plane, found by scanning
/// every matrix over F_q. Sorted. Errc::UnsupportedKind for Split4.
std::vector<Mat2> enumerate_orth(const QuadSpace& space);

/// The structured list {rotation(c)} followed by {rotation(c) o sigma}, c in ker(N).
std::vector<OrthMap> anisotropic_orth(const FieldCtx& ctx);

/// Generators exhibiting a finite matrix group as dihedral of order 2n:
/// r^n = s^2 = 1, s r s = r^-1, and the group equals <r> u <r>s.
struct DihedralWitness {
  bool dihedral = false;
  std::uint64_t half_order = 0;
  Mat2 r{};
  Mat2 s{};
};

DihedralWitness verify_dihedral(const std::vector<Mat2>& group);

/// Splits the orthogonal maps of the anisotropic plane into those that are
/// F_{q^2}-linear (rotations) and those that are not. For q = 2 this is the
/// classification that the determinant cannot see.
struct RotationSplit {
  std::vector<Mat2> rotations;
  std::vector<Mat2> reflections;
};

RotationSplit classify_rotations(const FieldCtx& ctx, const std::vector<Mat2>& maps);

/// Block map [[alpha, beta], [gamma, delta]] on A + A^dual. Dual coordinates
/// are hat-preimage coordinates, consistent with QuadSpace's Split4 vectors.
struct SplitOrthMap {
  Mat2 alpha, beta, gamma, delta;

  Vec4 apply(const Vec4& x) const;
  /// This map applied after other.
  SplitOrthMap compose(const SplitOrthMap& other) const;

  friend bool operator==(const SplitOrthMap&, const SplitOrthMap&) = default;
};

/// The block embedding alpha_g of an orthogonal map g of a plane:
/// alpha = delta = (Id + g) / 2, beta = gamma = (Id - g) / 2 in hat-preimage
/// coordinates. Errc::EvenCharacteristic for q = 2.
SplitOrthMap embed_alpha_g(const Mat2& g);
SplitOrthMap embed_alpha_g(const OrthMap& g);

/// Exhaustive on all q^2 vectors of a plane.
bool is_orthogonal(const QuadSpace& space, const Mat2& map);
/// Polarization check on the standard basis of a Split4 space and its pairwise sums.
bool is_orthogonal(const QuadSpace& split, const SplitOrthMap& map);

}  // namespace anisogauge
