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

#include <array>
#include <cstdint>
#include <string>

#include "anisogauge/modarith.hpp"

namespace anisogauge {

using Vec2 = std::array<Residue, 2>;
using Vec4 = std::array<Residue, 4>;

/// 2x2 matrix over F_q, row-major: [[a, b], [c, d]]. Acts on column vectors.
struct Mat2 {
  std::uint32_t q = 0;
  std::array<Residue, 4> e{};

  static Mat2 identity(std::uint32_t q) { return {q, {1, 0, 0, 1}}; }
  static Mat2 zero(std::uint32_t q) { return {q, {0, 0, 0, 0}}; }
  static Mat2 from(std::uint32_t q, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return {q, {mod_reduce(a, q), mod_reduce(b, q), mod_reduce(c, q), mod_reduce(d, q)}};
  }

  Residue at(int row, int col) const { return e[row * 2 + col]; }

  Mat2 operator+(const Mat2& o) const {
    Mat2 r{q, {}};
    for (int i = 0; i < 4; ++i) r.e[i] = mod_add(e[i], o.e[i], q);
    return r;
  }
  Mat2 operator-(const Mat2& o) const {
    Mat2 r{q, {}};
    for (int i = 0; i < 4; ++i) r.e[i] = mod_sub(e[i], o.e[i], q);
    return r;
  }
  Mat2 operator-() const { return zero(q) - *this; }
  Mat2 operator*(const Mat2& o) const {
    auto mm = [&](int i, int j) {
      return mod_add(mod_mul(at(i, 0), o.at(0, j), q), mod_mul(at(i, 1), o.at(1, j), q), q);
    };
    return {q, {mm(0, 0), mm(0, 1), mm(1, 0), mm(1, 1)}};
  }
  Mat2 scaled(Residue s) const {
    Mat2 r{q, {}};
    for (int i = 0; i < 4; ++i) r.e[i] = mod_mul(e[i], s, q);
    return r;
  }
  Vec2 operator*(const Vec2& v) const {
    return {mod_add(mod_mul(e[0], v[0], q), mod_mul(e[1], v[1], q), q),
            mod_add(mod_mul(e[2], v[0], q), mod_mul(e[3], v[1], q), q)};
  }

  Residue det() const { return mod_sub(mod_mul(e[0], e[3], q), mod_mul(e[1], e[2], q), q); }
  Residue trace() const { return mod_add(e[0], e[3], q); }
  bool invertible() const { return det() != 0; }
  Mat2 transpose() const { return {q, {e[0], e[2], e[1], e[3]}}; }
  // Precondition: invertible().
  Mat2 inverse() const {
    Residue di = mod_inv(det(), q);
    return Mat2{q, {e[3], mod_neg(e[1], q), mod_neg(e[2], q), e[0]}}.scaled(di);
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  friend auto operator<=>(const Mat2& x, const Mat2& y) { return x.e <=> y.e; }

  std::string to_string() const {
    return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" + std::to_string(e[2]) + "," +
           std::to_string(e[3]) + "]]";
  }
};

}  // namespace anisogauge
