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

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anisogauge/modarith.hpp"

namespace anisogauge {

/// Reduction data for F_q[x] / (x^2 + c1 x + c0). The root theta satisfies
/// theta^2 = r0 + r1 theta with r0 = -c0 and r1 = -c1.
struct ExtModulus {
  std::uint32_t q = 0;
  Residue r0 = 0;
  Residue r1 = 0;

  friend bool operator==(const ExtModulus&, const ExtModulus&) = default;
};

/// An element a0 + a1 theta of F_{q^2}. Elements carry their modulus so that
/// they are plain values; mixing elements of different fields is a logic error.
class ExtElement {
 public:
  ExtElement() = default;
  ExtElement(const ExtModulus& m, Residue a0, Residue a1) : m_(m), a0_(a0 % m.q), a1_(a1 % m.q) {}

  Residue a0() const { return a0_; }
  Residue a1() const { return a1_; }
  std::uint32_t q() const { return m_.q; }
  const ExtModulus& modulus() const { return m_; }

  bool is_zero() const { return a0_ == 0 && a1_ == 0; }
  bool is_one() const { return a0_ == 1 % m_.q && a1_ == 0; }
  bool in_base_field() const { return a1_ == 0; }

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement operator*(const ExtElement& o) const;
  ExtElement operator/(const ExtElement& o) const { return *this * o.inverse(); }
  ExtElement& operator+=(const ExtElement& o) { return *this = *this + o; }
  ExtElement& operator-=(const ExtElement& o) { return *this = *this - o; }
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }

  ExtElement scaled(Residue s) const;
  ExtElement pow(std::uint64_t e) const;
  // Throws Errc::BadParameter for zero.
  ExtElement inverse() const;

  /// Multiplicative order; the element must be nonzero.
  std::uint64_t order() const;

  friend bool operator==(const ExtElement& x, const ExtElement& y) {
    return x.a0_ == y.a0_ && x.a1_ == y.a1_ && x.m_ == y.m_;
  }
  // Canonical (a0, a1) lexicographic order.
  friend std::strong_ordering operator<=>(const ExtElement& x, const ExtElement& y) {
    if (auto c = x.a0_ <=> y.a0_; c != 0) return c;
    return x.a1_ <=> y.a1_;
  }

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const ExtElement& x) { return os << x.to_string(); }

 private:
  ExtModulus m_{};
  Residue a0_ = 0;
  Residue a1_ = 0;
};

/// The tower F_q in F_{q^2} with a canonical defining polynomial: x^2 - d with
/// d the least quadratic non-residue for odd q, x^2 + x + 1 for q = 2.
class FieldCtx {
 public:
  static constexpr std::uint32_t kDefaultBound = 10000;

  std::uint32_t q() const { return m_.q; }
  const ExtModulus& modulus() const { return m_; }
  // Coefficients of the monic defining polynomial x^2 + c1 x + c0.
  Residue poly_c0() const { return mod_neg(m_.r0, m_.q); }
  Residue poly_c1() const { return mod_neg(m_.r1, m_.q); }
  std::string defining_poly() const;

  ExtElement zero() const { return {m_, 0, 0}; }
  ExtElement one() const { return {m_, 1, 0}; }
  ExtElement theta() const { return {m_, 0, 1}; }
  ExtElement element(Residue a0, Residue a1) const { return {m_, a0, a1}; }
  ExtElement base(Residue r) const { return {m_, r, 0}; }

  /// All q^2 elements in (a0, a1) order.
  std::vector<ExtElement> elements() const;

  // Half, used throughout the odd-characteristic constructions.
  Residue half() const;

 private:
  friend FieldCtx make_field(std::uint32_t q, std::uint32_t bound);
  explicit FieldCtx(const ExtModulus& m) : m_(m) {}
  ExtModulus m_;
};

// Errc::NotPrime, Errc::BoundExceeded.
FieldCtx make_field(std::uint32_t q, std::uint32_t bound = FieldCtx::kDefaultBound);

/// x -> x^q, computed from the conjugate root.
ExtElement frobenius(const ExtElement& x);
Residue norm(const ExtElement& x);
Residue trace(const ExtElement& x);

/// Kernel of the norm, sorted by (a0, a1). Has exactly q + 1 elements.
std::vector<ExtElement> ker_norm(const FieldCtx& ctx);

/// A generator of the cyclic group ker_norm, smallest in (a0, a1) order.
ExtElement ker_norm_generator(const FieldCtx& ctx);

/// Smallest c != 1 in ker_norm with c^p = 1. Errc::NoSuchElement when p does
/// not divide q + 1, Errc::BadParameter when p is not prime or p == q.
ExtElement pick_order_p(const FieldCtx& ctx, std::uint32_t p);

/// A square root of x, the smaller of {y, -y}; nullopt if x is not a square.
std::optional<ExtElement> sqrt_ext(const ExtElement& x);

}  // namespace anisogauge
