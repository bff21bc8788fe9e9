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
#include <span>
#include <vector>

#include "anisogauge/ffield.hpp"
#include "anisogauge/mat2.hpp"

namespace anisogauge {

enum class SpaceKind { Anisotropic, Hyperbolic, Split4 };

const char* to_string(SpaceKind kind);

/// A finite quadratic space over F_q.
///
/// Vectors are coordinate arrays. For the anisotropic plane the coordinates
/// of v = a0 + a1 theta are (a0, a1) and form(v) = N(v). The hyperbolic plane
/// has form(x, y) = x y. A Split4 space is A + A^dual over a base plane A;
/// functionals are represented by their hat-preimages, so (v, w) stands for
/// the pair (v, hat(w)) and form(v, w) = B(w, v).
class QuadSpace {
 public:
  SpaceKind kind() const { return kind_; }
  // For Split4, the kind of the underlying plane; otherwise kind().
  SpaceKind base_kind() const { return base_kind_; }
  const FieldCtx& ctx() const { return ctx_; }
  std::uint32_t q() const { return ctx_.q(); }
  std::size_t dimension() const { return kind_ == SpaceKind::Split4 ? 4 : 2; }

  Residue form(std::span<const Residue> v) const;
  Residue form(const Vec2& v) const { return form(std::span<const Residue>(v)); }
  Residue form(const Vec4& v) const { return form(std::span<const Residue>(v)); }

  /// Plane counterpart of this space: itself for 2-dimensional spaces, the
  /// base plane for Split4.
  QuadSpace plane() const { return {ctx_, base_kind_, base_kind_}; }

 private:
  friend QuadSpace build_anisotropic(const FieldCtx&);
  friend QuadSpace build_hyperbolic(const FieldCtx&);
  friend QuadSpace build_split(const QuadSpace&);
  QuadSpace(const FieldCtx& ctx, SpaceKind kind, SpaceKind base) : ctx_(ctx), kind_(kind), base_kind_(base) {}

  Residue plane_form(Residue x0, Residue x1) const;
  Residue plane_polar(const Vec2& v, const Vec2& w) const;

  FieldCtx ctx_;
  SpaceKind kind_;
  SpaceKind base_kind_;

  friend Residue bilinear(const QuadSpace&, const Vec2&, const Vec2&);
};

inline Vec2 to_vec(const ExtElement& x) { return {x.a0(), x.a1()}; }
inline ExtElement to_element(const FieldCtx& ctx, const Vec2& v) { return ctx.element(v[0], v[1]); }

/// All q^2 vectors of a plane in lexicographic order.
std::vector<Vec2> plane_vectors(std::uint32_t q);

QuadSpace build_anisotropic(const FieldCtx& ctx);
QuadSpace build_hyperbolic(const FieldCtx& ctx);
/// Split space over the anisotropic plane. Errc::EvenCharacteristic for q = 2.
QuadSpace build_split(const FieldCtx& ctx);
QuadSpace build_split(const QuadSpace& plane);

/// B(v, w) = (form(v + w) - form(v) - form(w)) / 2 on a plane.
/// Errc::EvenCharacteristic for q = 2, Errc::UnsupportedKind for Split4.
Residue bilinear(const QuadSpace& space, const Vec2& v, const Vec2& w);

/// Gram matrix of B in the coordinate basis.
Mat2 gram_matrix(const QuadSpace& space);

/// A linear functional on a plane, stored through its hat-preimage.
struct Functional {
  Vec2 preimage{};
  friend bool operator==(const Functional&, const Functional&) = default;
};

/// hat(v) = B(v, -). Errc::EvenCharacteristic, Errc::UnsupportedKind.
Functional hat(const QuadSpace& space, const Vec2& v);
Residue evaluate(const QuadSpace& space, const Functional& phi, const Vec2& w);
/// Values of phi on the coordinate basis; distinct functionals have distinct
/// value pairs.
Vec2 functional_values(const QuadSpace& space, const Functional& phi);

/// A finite abelian group (Z/n_1 x ... x Z/n_r) with a quadratic form t given
/// by exponents: t(a) = exp(2 pi i t_exp(a) / modulus). Construction checks
/// that t is even, that its polarization is biadditive and that it is
/// non-degenerate; violations throw Errc::BadParameter.
class MetricGroup {
 public:
  MetricGroup(std::vector<std::uint32_t> orders, std::uint32_t modulus, std::vector<std::uint32_t> t_exponents);

  std::size_t size() const { return t_.size(); }
  const std::vector<std::uint32_t>& orders() const { return orders_; }
  std::uint32_t modulus() const { return modulus_; }

  std::uint32_t t(std::size_t a) const { return t_[a]; }
  std::size_t add(std::size_t a, std::size_t c) const;
  std::size_t neg(std::size_t a) const;
  /// b(a, c) = t(a + c) - t(a) - t(c) in Z/modulus.
  std::uint32_t bichar(std::size_t a, std::size_t c) const;

  std::vector<std::uint32_t> coords(std::size_t a) const;
  std::size_t index(std::span<const std::uint32_t> coords) const;

 private:
  std::vector<std::uint32_t> orders_;
  std::uint32_t modulus_;
  std::vector<std::uint32_t> t_;
};

/// Metric group (F_q^2, t) with t the form reduced mod q.
/// Errc::UnsupportedKind for Split4.
MetricGroup metric_group_of(const QuadSpace& space);

}  // namespace anisogauge
