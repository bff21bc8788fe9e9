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

#include "anisogauge/orthogroup.hpp"

#include <algorithm>

#include "anisogauge/error.hpp"

namespace anisogauge {

namespace {

void require_norm_one(const ExtElement& c) {
  if (norm(c) != 1) throw Error(Errc::NotNormOne, "N(" + c.to_string() + ") != 1");
}

// Exhaustive for small q, a fixed deterministic sample beyond.
void check_preserves_norm(const OrthMap& g) {
  const auto& m = g.rotation_part().modulus();
  auto check = [&](Residue a0, Residue a1) {
    ExtElement v(m, a0, a1);
    if (norm(g.apply(v)) != norm(v)) throw Error(Errc::NotNormOne, "map does not preserve N");
  };
  if (m.q <= 13) {
    for (Residue a0 = 0; a0 < m.q; ++a0)
      for (Residue a1 = 0; a1 < m.q; ++a1) check(a0, a1);
  } else {
    for (std::int64_t k = 0; k < 64; ++k) check(mod_reduce(k * 104729 + 5, m.q), mod_reduce(k * k + 2, m.q));
  }
}

std::uint64_t matrix_order(const Mat2& m, std::uint64_t cap) {
  const Mat2 id = Mat2::identity(m.q);
  Mat2 x = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (x == id) return k;
    x = x * m;
  }
  return 0;
}

}  // namespace

OrthMap OrthMap::compose(const OrthMap& other) const {
  const ExtElement twisted = reflect_ ? frobenius(other.c_) : other.c_;
  return OrthMap(c_ * twisted, reflect_ != other.reflect_);
}

OrthMap OrthMap::inverse() const {
  // A reflection c sigma with N(c) = 1 is an involution.
  return reflect_ ? *this : OrthMap(c_.inverse(), false);
}

Mat2 OrthMap::matrix() const {
  const auto& m = c_.modulus();
  const ExtElement img0 = apply(ExtElement(m, 1, 0));
  const ExtElement img1 = apply(ExtElement(m, 0, 1));
  return {m.q, {img0.a0(), img1.a0(), img0.a1(), img1.a1()}};
}

Mat2 multiplication_matrix(const ExtElement& x) {
  const auto& m = x.modulus();
  const ExtElement img1 = x * ExtElement(m, 0, 1);
  return {m.q, {x.a0(), img1.a0(), x.a1(), img1.a1()}};
}

OrthMap rotation(const ExtElement& c) {
  require_norm_one(c);
  OrthMap g(c, false);
  check_preserves_norm(g);
  return g;
}

OrthMap reflection(const ExtElement& c) {
  require_norm_one(c);
  OrthMap g(c, true);
  check_preserves_norm(g);
  return g;
}

std::vector<Mat2> enumerate_orth(const QuadSpace& space) {
  if (space.kind() == SpaceKind::Split4) throw Error(Errc::UnsupportedKind, "enumerate_orth needs a plane");
  const auto q = space.q();
  // A quadratic form on a plane is determined by its values on e0, e1, e0 + e1.
  const Vec2 probes[3] = {{1, 0}, {0, 1}, {1, 1 % q}};
  Residue targets[3];
  for (int i = 0; i < 3; ++i) targets[i] = space.form(probes[i]);

  std::vector<Mat2> out;
  Mat2 m{q, {}};
  for (Residue a = 0; a < q; ++a)
    for (Residue b = 0; b < q; ++b)
      for (Residue c = 0; c < q; ++c)
        for (Residue d = 0; d < q; ++d) {
          m.e = {a, b, c, d};
          if (!m.invertible()) continue;
          bool ok = true;
          for (int i = 0; i < 3 && ok; ++i) ok = space.form(m * probes[i]) == targets[i];
          if (ok && is_orthogonal(space, m)) out.push_back(m);
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrthMap> anisotropic_orth(const FieldCtx& ctx) {
  std::vector<OrthMap> out;
  const auto kernel = ker_norm(ctx);
  for (const auto& c : kernel) out.push_back(rotation(c));
  for (const auto& c : kernel) out.push_back(reflection(c));
  return out;
}

DihedralWitness verify_dihedral(const std::vector<Mat2>& group) {
  DihedralWitness w;
  if (group.empty() || group.size() % 2 != 0) return w;
  const std::uint64_t n = group.size() / 2;
  const std::uint32_t q = group.front().q;
  const Mat2 id = Mat2::identity(q);

  std::vector<Mat2> sorted = group;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return w;

  for (const auto& r : sorted) {
    if (matrix_order(r, n) != n) continue;
    std::vector<Mat2> cyclic;
    Mat2 x = id;
    for (std::uint64_t k = 0; k < n; ++k, x = x * r) cyclic.push_back(x);
    std::sort(cyclic.begin(), cyclic.end());
    const Mat2 r_inv = r.inverse();
    for (const auto& s : sorted) {
      if (std::binary_search(cyclic.begin(), cyclic.end(), s)) continue;
      if (!(s * s == id) || !(s * r * s == r_inv)) continue;
      std::vector<Mat2> all = cyclic;
      for (const auto& c : cyclic) all.push_back(c * s);
      std::sort(all.begin(), all.end());
      if (all != sorted) return w;
      w.dihedral = true;
      w.half_order = n;
      w.r = r;
      w.s = s;
      return w;
    }
  }
  return w;
}

RotationSplit classify_rotations(const FieldCtx& ctx, const std::vector<Mat2>& maps) {
  const Mat2 mul_theta = multiplication_matrix(ctx.theta());
  RotationSplit split;
  for (const auto& m : maps) (m * mul_theta == mul_theta * m ? split.rotations : split.reflections).push_back(m);
  return split;
}

Vec4 SplitOrthMap::apply(const Vec4& x) const {
  const auto q = alpha.q;
  const Vec2 v{x[0], x[1]}, w{x[2], x[3]};
  const Vec2 av = alpha * v, bw = beta * w, cv = gamma * v, dw = delta * w;
  return {mod_add(av[0], bw[0], q), mod_add(av[1], bw[1], q), mod_add(cv[0], dw[0], q), mod_add(cv[1], dw[1], q)};
}

SplitOrthMap SplitOrthMap::compose(const SplitOrthMap& o) const {
  return {alpha * o.alpha + beta * o.gamma, alpha * o.beta + beta * o.delta, gamma * o.alpha + delta * o.gamma,
          gamma * o.beta + delta * o.delta};
}

SplitOrthMap embed_alpha_g(const Mat2& g) {
  if (g.q == 2) throw Error(Errc::EvenCharacteristic, "alpha_g needs 1/2");
  const Residue half = mod_inv(2, g.q);
  const Mat2 id = Mat2::identity(g.q);
  const Mat2 plus = (id + g).scaled(half), minus = (id - g).scaled(half);
  return {plus, minus, minus, plus};
}

SplitOrthMap embed_alpha_g(const OrthMap& g) { return embed_alpha_g(g.matrix()); }

bool is_orthogonal(const QuadSpace& space, const Mat2& map) {
  if (space.kind() == SpaceKind::Split4) throw Error(Errc::UnsupportedKind, "expected a plane");
  for (const auto& v : plane_vectors(space.q()))
    if (space.form(map * v) != space.form(v)) return false;
  return true;
}

bool is_orthogonal(const QuadSpace& split, const SplitOrthMap& map) {
  if (split.kind() != SpaceKind::Split4) throw Error(Errc::UnsupportedKind, "expected a split space");
  const auto q = split.q();
  auto unit = [](int i) {
    Vec4 e{};
    e[i] = 1;
    return e;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Vec4 x = unit(i);
      if (j != i) x[j] = mod_add(x[j], 1, q);
      if (split.form(map.apply(x)) != split.form(x)) return false;
    }
  return true;
}

}  // namespace anisogauge
