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

#include "anisogauge/quadspace.hpp"

#include <string>

#include "anisogauge/error.hpp"

namespace anisogauge {

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Anisotropic: return "anisotropic";
    case SpaceKind::Hyperbolic: return "hyperbolic";
    case SpaceKind::Split4: return "split4";
  }
  return "unknown";
}

Residue QuadSpace::plane_form(Residue x0, Residue x1) const {
  if (base_kind_ == SpaceKind::Hyperbolic) return mod_mul(x0, x1, ctx_.q());
  return norm(ctx_.element(x0, x1));
}

Residue QuadSpace::plane_polar(const Vec2& v, const Vec2& w) const {
  const auto q = ctx_.q();
  Vec2 s{mod_add(v[0], w[0], q), mod_add(v[1], w[1], q)};
  return mod_sub(mod_sub(plane_form(s[0], s[1]), plane_form(v[0], v[1]), q), plane_form(w[0], w[1]), q);
}

Residue QuadSpace::form(std::span<const Residue> v) const {
  if (v.size() != dimension())
    throw Error(Errc::BadParameter, "vector of length " + std::to_string(v.size()) + " in a " +
                                        std::to_string(dimension()) + "-dimensional space");
  if (kind_ != SpaceKind::Split4) return plane_form(v[0], v[1]);
  // (v, hat(w)) evaluates to B(w, v).
  return bilinear(plane(), Vec2{v[2], v[3]}, Vec2{v[0], v[1]});
}

std::vector<Vec2> plane_vectors(std::uint32_t q) {
  std::vector<Vec2> out;
  out.reserve(std::size_t{q} * q);
  for (Residue a = 0; a < q; ++a)
    for (Residue b = 0; b < q; ++b) out.push_back({a, b});
  return out;
}

QuadSpace build_anisotropic(const FieldCtx& ctx) {
  QuadSpace space(ctx, SpaceKind::Anisotropic, SpaceKind::Anisotropic);
  for (const auto& v : plane_vectors(ctx.q()))
    if ((v[0] != 0 || v[1] != 0) && space.form(v) == 0)
      throw Error(Errc::BadParameter, "norm form has a nonzero isotropic vector");
  return space;
}

QuadSpace build_hyperbolic(const FieldCtx& ctx) { return {ctx, SpaceKind::Hyperbolic, SpaceKind::Hyperbolic}; }

QuadSpace build_split(const FieldCtx& ctx) { return build_split(build_anisotropic(ctx)); }

QuadSpace build_split(const QuadSpace& plane) {
  if (plane.kind() == SpaceKind::Split4) throw Error(Errc::UnsupportedKind, "split space of a split space");
  if (plane.q() == 2) throw Error(Errc::EvenCharacteristic, "split space needs 1/2");
  QuadSpace split(plane.ctx(), SpaceKind::Split4, plane.kind());

  // v -> (v, hat v) and v -> (v, -hat v) are isometries from (A, form) and
  // (A, -form).
  const auto q = plane.q();
  auto check = [&](const Vec2& v) {
    const Residue f = plane.form(v);
    const Vec4 up{v[0], v[1], v[0], v[1]};
    const Vec4 down{v[0], v[1], mod_neg(v[0], q), mod_neg(v[1], q)};
    if (split.form(up) != f || split.form(down) != mod_neg(f, q))
      throw Error(Errc::BadParameter, "hat embedding is not isometric");
  };
  if (q <= 13) {
    for (const auto& v : plane_vectors(q)) check(v);
  } else {
    for (Residue k = 0; k < 64; ++k) check({mod_reduce(std::int64_t{k} * 7919 + 3, q), mod_reduce(std::int64_t{k} * k + 1, q)});
  }
  return split;
}

Residue bilinear(const QuadSpace& space, const Vec2& v, const Vec2& w) {
  if (space.kind() == SpaceKind::Split4) throw Error(Errc::UnsupportedKind, "bilinear form is defined on planes");
  const Residue half = space.ctx().half();  // throws EvenCharacteristic
  return mod_mul(half, space.plane_polar(v, w), space.q());
}

Mat2 gram_matrix(const QuadSpace& space) {
  const Vec2 e0{1, 0}, e1{0, 1};
  const Residue b00 = bilinear(space, e0, e0), b01 = bilinear(space, e0, e1), b11 = bilinear(space, e1, e1);
  return {space.q(), {b00, b01, b01, b11}};
}

Functional hat(const QuadSpace& space, const Vec2& v) {
  if (space.kind() != SpaceKind::Anisotropic && space.kind() != SpaceKind::Hyperbolic)
    throw Error(Errc::UnsupportedKind, "hat is defined on planes");
  (void)space.ctx().half();
  return Functional{v};
}

Residue evaluate(const QuadSpace& space, const Functional& phi, const Vec2& w) {
  return bilinear(space, phi.preimage, w);
}

Vec2 functional_values(const QuadSpace& space, const Functional& phi) {
  return {evaluate(space, phi, {1, 0}), evaluate(space, phi, {0, 1})};
}

// ---------------------------------------------------------------------------
// MetricGroup

MetricGroup::MetricGroup(std::vector<std::uint32_t> orders, std::uint32_t modulus,
                         std::vector<std::uint32_t> t_exponents)
    : orders_(std::move(orders)), modulus_(modulus), t_(std::move(t_exponents)) {
  std::size_t n = 1;
  for (auto o : orders_) {
    if (o == 0) throw Error(Errc::BadParameter, "cyclic factor of order 0");
    n *= o;
  }
  if (modulus_ == 0) throw Error(Errc::BadParameter, "modulus must be positive");
  if (t_.size() != n) throw Error(Errc::BadParameter, "t table has the wrong size");
  for (auto& x : t_) x %= modulus_;

  for (std::size_t a = 0; a < n; ++a)
    if (t_[a] != t_[neg(a)]) throw Error(Errc::BadParameter, "t(a) != t(-a)");

  // Biadditivity in the second slot against each generator; b is symmetric.
  std::vector<std::size_t> gens;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    std::vector<std::uint32_t> c(orders_.size(), 0);
    c[k] = 1 % orders_[k];
    gens.push_back(index(c));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (auto g : gens)
        if (bichar(a, add(c, g)) != (bichar(a, c) + bichar(a, g)) % modulus_)
          throw Error(Errc::BadParameter, "polarization of t is not biadditive");

  // With b biadditive, a is in the radical iff b(a, g) = 0 on generators.
  for (std::size_t a = 1; a < n; ++a) {
    bool radical = true;
    for (auto g : gens) radical = radical && bichar(a, g) == 0;
    if (radical) throw Error(Errc::BadParameter, "bicharacter is degenerate");
  }
}

std::vector<std::uint32_t> MetricGroup::coords(std::size_t a) const {
  std::vector<std::uint32_t> out(orders_.size());
  for (std::size_t k = orders_.size(); k-- > 0;) {
    out[k] = static_cast<std::uint32_t>(a % orders_[k]);
    a /= orders_[k];
  }
  return out;
}

std::size_t MetricGroup::index(std::span<const std::uint32_t> c) const {
  std::size_t a = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) a = a * orders_[k] + c[k] % orders_[k];
  return a;
}

std::size_t MetricGroup::add(std::size_t a, std::size_t c) const {
  auto x = coords(a), y = coords(c);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (x[k] + y[k]) % orders_[k];
  return index(x);
}

std::size_t MetricGroup::neg(std::size_t a) const {
  auto x = coords(a);
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = (orders_[k] - x[k]) % orders_[k];
  return index(x);
}

std::uint32_t MetricGroup::bichar(std::size_t a, std::size_t c) const {
  const std::uint64_t m = modulus_;
  return static_cast<std::uint32_t>((t_[add(a, c)] + 2 * m - t_[a] - t_[c]) % m);
}

MetricGroup metric_group_of(const QuadSpace& space) {
  if (space.kind() == SpaceKind::Split4) throw Error(Errc::UnsupportedKind, "metric group of a split space");
  const auto q = space.q();
  std::vector<std::uint32_t> t;
  t.reserve(std::size_t{q} * q);
  for (const auto& v : plane_vectors(q)) t.push_back(space.form(v));
  return MetricGroup({q, q}, q, std::move(t));
}

}  // namespace anisogauge
