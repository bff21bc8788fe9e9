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

#include "anisogauge/ffield.hpp"

#include <algorithm>
#include <sstream>

#include "anisogauge/error.hpp"

namespace anisogauge {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NoSuchElement: return "NoSuchElement";
    case Errc::UnsupportedKind: return "UnsupportedKind";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::NotNormOne: return "NotNormOne";
    case Errc::ExistenceViolated: return "ExistenceViolated";
    case Errc::NotACharacter: return "NotACharacter";
    case Errc::BetaSingular: return "BetaSingular";
    case Errc::ZeroEigenvalue: return "ZeroEigenvalue";
    case Errc::BadParameter: return "BadParameter";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool is_quadratic_residue(Residue a, std::uint32_t q) {
  a %= q;
  return a != 0 && mod_pow(a, (q - 1) / 2, q) == 1;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtElement

ExtElement ExtElement::operator+(const ExtElement& o) const {
  return {m_, mod_add(a0_, o.a0_, m_.q), mod_add(a1_, o.a1_, m_.q)};
}

ExtElement ExtElement::operator-(const ExtElement& o) const {
  return {m_, mod_sub(a0_, o.a0_, m_.q), mod_sub(a1_, o.a1_, m_.q)};
}

ExtElement ExtElement::operator-() const { return {m_, mod_neg(a0_, m_.q), mod_neg(a1_, m_.q)}; }

ExtElement ExtElement::operator*(const ExtElement& o) const {
  const std::uint64_t q = m_.q;
  const std::uint64_t hh = std::uint64_t{a1_} * o.a1_ % q;
  const std::uint64_t c0 = (std::uint64_t{a0_} * o.a0_ + hh * m_.r0) % q;
  const std::uint64_t c1 = (std::uint64_t{a0_} * o.a1_ + std::uint64_t{a1_} * o.a0_ + hh * m_.r1) % q;
  return {m_, static_cast<Residue>(c0), static_cast<Residue>(c1)};
}

ExtElement ExtElement::scaled(Residue s) const {
  return {m_, mod_mul(a0_, s, m_.q), mod_mul(a1_, s, m_.q)};
}

ExtElement ExtElement::pow(std::uint64_t e) const {
  ExtElement r(m_, 1, 0), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

ExtElement ExtElement::inverse() const {
  if (is_zero()) throw Error(Errc::BadParameter, "inverse of zero");
  return frobenius(*this).scaled(mod_inv(norm(*this), m_.q));
}

std::uint64_t ExtElement::order() const {
  if (is_zero()) throw Error(Errc::BadParameter, "order of zero");
  std::uint64_t n = std::uint64_t{m_.q} * m_.q - 1;
  for (std::uint64_t f : prime_factors(n)) {
    while (n % f == 0 && pow(n / f).is_one()) n /= f;
  }
  return n;
}

std::string ExtElement::to_string() const {
  std::ostringstream os;
  if (a1_ == 0) {
    os << a0_;
  } else {
    if (a0_ != 0) os << a0_ << "+";
    if (a1_ != 1) os << a1_ << "*";
    os << "t";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// FieldCtx

std::string FieldCtx::defining_poly() const {
  const std::uint32_t q = m_.q;
  // Odd q: always x^2 - d with d the least non-residue, never reduced further.
  if (q != 2) return "x^2 - " + std::to_string(m_.r0);
  auto signed_term = [q](Residue c, const char* suffix) {
    std::ostringstream os;
    if (c == 0) return std::string{};
    bool negative = q > 2 && c > q / 2;
    Residue mag = negative ? q - c : c;
    os << (negative ? " - " : " + ");
    if (mag != 1 || *suffix == '\0') os << mag;
    os << suffix;
    return os.str();
  };
  return "x^2" + signed_term(poly_c1(), "x") + signed_term(poly_c0(), "");
}

std::vector<ExtElement> FieldCtx::elements() const {
  std::vector<ExtElement> out;
  out.reserve(std::size_t{m_.q} * m_.q);
  for (Residue a0 = 0; a0 < m_.q; ++a0)
    for (Residue a1 = 0; a1 < m_.q; ++a1) out.emplace_back(m_, a0, a1);
  return out;
}

Residue FieldCtx::half() const {
  if (m_.q == 2) throw Error(Errc::EvenCharacteristic, "1/2 does not exist in F_2");
  return mod_inv(2, m_.q);
}

FieldCtx make_field(std::uint32_t q, std::uint32_t bound) {
  if (q > bound) throw Error(Errc::BoundExceeded, "q = " + std::to_string(q) + " exceeds " + std::to_string(bound));
  if (!is_prime(q)) throw Error(Errc::NotPrime, std::to_string(q) + " is not prime");

  ExtModulus m{q, 0, 0};
  if (q == 2) {
    m.r0 = 1;  // theta^2 = theta + 1
    m.r1 = 1;
  } else {
    Residue d = 2;
    while (is_quadratic_residue(d, q)) ++d;
    m.r0 = d;
  }
  // x^2 - r1 x - r0 must have no root in F_q.
  for (Residue x = 0; x < q; ++x) {
    Residue v = mod_sub(mod_sub(mod_mul(x, x, q), mod_mul(m.r1, x, q), q), m.r0, q);
    if (v == 0) throw Error(Errc::BadParameter, "defining polynomial is reducible");
  }
  return FieldCtx(m);
}

// ---------------------------------------------------------------------------

ExtElement frobenius(const ExtElement& x) {
  // The conjugate root is r1 - theta.
  const auto& m = x.modulus();
  return {m, mod_add(x.a0(), mod_mul(x.a1(), m.r1, m.q), m.q), mod_neg(x.a1(), m.q)};
}

Residue norm(const ExtElement& x) { return (x * frobenius(x)).a0(); }

Residue trace(const ExtElement& x) { return (x + frobenius(x)).a0(); }

std::vector<ExtElement> ker_norm(const FieldCtx& ctx) {
  std::vector<ExtElement> out;
  for (const auto& x : ctx.elements())
    if (norm(x) == 1) out.push_back(x);
  return out;
}

ExtElement ker_norm_generator(const FieldCtx& ctx) {
  const std::uint64_t target = std::uint64_t{ctx.q()} + 1;
  for (const auto& x : ker_norm(ctx))
    if (x.order() == target) return x;
  throw Error(Errc::NoSuchElement, "ker(N) has no generator");
}

ExtElement pick_order_p(const FieldCtx& ctx, std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::BadParameter, "p = " + std::to_string(p) + " is not prime");
  if (p == ctx.q()) throw Error(Errc::BadParameter, "p must differ from q");
  if ((ctx.q() + 1) % p != 0)
    throw Error(Errc::NoSuchElement, std::to_string(p) + " does not divide q+1 = " + std::to_string(ctx.q() + 1));
  for (const auto& c : ker_norm(ctx))
    if (!c.is_one() && c.pow(p).is_one()) return c;
  throw Error(Errc::NoSuchElement, "no element of order p in ker(N)");
}

std::optional<ExtElement> sqrt_ext(const ExtElement& x) {
  const auto& m = x.modulus();
  if (x.is_zero()) return x;
  const std::uint64_t n = std::uint64_t{m.q} * m.q - 1;
  if (m.q == 2) return x.pow(2);  // squaring is a bijection on F_4
  if (!x.pow(n / 2).is_one()) return std::nullopt;

  // Tonelli-Shanks in the cyclic group F_{q^2}^x of order n = 2^s t.
  unsigned s = 0;
  std::uint64_t t = n;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  ExtElement z;
  for (Residue a0 = 0, done = 0; a0 < m.q && !done; ++a0)
    for (Residue a1 = 0; a1 < m.q; ++a1) {
      ExtElement cand(m, a0, a1);
      if (!cand.is_zero() && !cand.pow(n / 2).is_one()) {
        z = cand;
        done = 1;
        break;
      }
    }
  unsigned big_m = s;
  ExtElement c = z.pow(t), tt = x.pow(t), r = x.pow((t + 1) / 2);
  while (!tt.is_one()) {
    unsigned i = 0;
    for (ExtElement probe = tt; !probe.is_one(); probe *= probe) ++i;
    ExtElement b = c;
    for (unsigned k = 0; k + i + 1 < big_m; ++k) b *= b;
    big_m = i;
    c = b * b;
    tt *= c;
    r *= b;
  }
  ExtElement neg = -r;
  return std::min(r, neg);
}

}  // namespace anisogauge
