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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "anisogauge/error.hpp"
#include "oracles.hpp"

namespace anisogauge {
namespace {

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an anisogauge::Error";
  return Errc::ParseError;
}

TEST(MakeField, CanonicalPolynomials) {
  EXPECT_EQ(make_field(2).defining_poly(), "x^2 + x + 1");
  EXPECT_EQ(make_field(5).defining_poly(), "x^2 - 2");
  EXPECT_EQ(make_field(3).defining_poly(), "x^2 - 2");
  EXPECT_EQ(make_field(7).defining_poly(), "x^2 - 3");
  EXPECT_EQ(make_field(17).defining_poly(), "x^2 - 3");
}

TEST(MakeField, LeastNonResidueMatchesExhaustiveSquares) {
  for (auto q : oracle::odd_primes_up_to(200)) {
    std::set<Residue> squares;
    for (Residue x = 1; x < q; ++x) squares.insert(x * x % q);
    Residue d = 1;
    while (squares.count(d)) ++d;
    EXPECT_EQ(make_field(q).poly_c0(), q - d) << "q=" << q;
  }
}

TEST(MakeField, Errors) {
  EXPECT_EQ(error_code([] { make_field(4); }), Errc::NotPrime);
  EXPECT_EQ(error_code([] { make_field(1); }), Errc::NotPrime);
  EXPECT_EQ(error_code([] { make_field(10007); }), Errc::BoundExceeded);
  EXPECT_EQ(error_code([] { make_field(13, 11); }), Errc::BoundExceeded);
  EXPECT_NO_THROW(make_field(9973));
}

TEST(Frobenius, Examples) {
  const auto f4 = make_field(2);
  EXPECT_EQ(frobenius(f4.theta()), f4.element(1, 1));
  const auto f25 = make_field(5);
  EXPECT_EQ(frobenius(f25.theta()), -f25.theta());
  EXPECT_EQ(frobenius(f25.one()), f25.one());
}

TEST(Frobenius, MatchesPowerAndFixesExactlyBaseField) {
  for (auto q : oracle::primes_up_to(31)) {
    const auto ctx = make_field(q);
    for (const auto& x : ctx.elements()) {
      const auto fx = frobenius(x);
      ASSERT_EQ(fx, oracle::frobenius_by_power(x)) << "q=" << q << " x=" << x;
      ASSERT_EQ(frobenius(fx), x);
      ASSERT_EQ(fx == x, x.in_base_field());
    }
  }
}

TEST(NormTrace, Examples) {
  const auto f4 = make_field(2);
  EXPECT_EQ(norm(f4.theta()), 1u);
  const auto f25 = make_field(5);
  EXPECT_EQ(norm(f25.theta()), 3u);
  EXPECT_EQ(norm(f25.zero()), 0u);
  EXPECT_EQ(trace(f25.theta()), 0u);
  EXPECT_EQ(trace(f25.base(3)), 1u);
  EXPECT_EQ(trace(f25.zero()), 0u);
}

TEST(NormTrace, MultiplicativeAndAdditiveExhaustive) {
  for (auto q : {2u, 3u, 5u, 7u, 11u}) {
    const auto ctx = make_field(q);
    const auto elems = ctx.elements();
    for (const auto& x : elems) {
      ASSERT_EQ(norm(x) == 0, x.is_zero());
      ASSERT_EQ(ctx.base(norm(x)), x.pow(q + 1));
      for (const auto& y : elems) {
        ASSERT_EQ(norm(x * y), mod_mul(norm(x), norm(y), q));
        ASSERT_EQ(trace(x + y), mod_add(trace(x), trace(y), q));
      }
    }
  }
}

TEST(FieldAxioms, InverseAndDistributivitySampled) {
  std::mt19937 rng(20261016);
  for (auto q : oracle::primes_up_to(101)) {
    const auto ctx = make_field(q);
    std::uniform_int_distribution<Residue> coeff(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = ctx.element(coeff(rng), coeff(rng));
      const auto y = ctx.element(coeff(rng), coeff(rng));
      const auto z = ctx.element(coeff(rng), coeff(rng));
      ASSERT_EQ(x * (y + z), x * y + x * z);
      ASSERT_EQ((x * y) * z, x * (y * z));
      if (!x.is_zero()) {
        ASSERT_TRUE((x * x.inverse()).is_one());
      }
    }
  }
}

TEST(KerNorm, Examples) {
  const auto f4 = make_field(2);
  const auto k4 = ker_norm(f4);
  ASSERT_EQ(k4.size(), 3u);
  EXPECT_EQ(k4[0], f4.theta());
  EXPECT_EQ(k4[1], f4.one());
  EXPECT_EQ(k4[2], f4.element(1, 1));
  EXPECT_EQ(ker_norm(make_field(3)).size(), 4u);
  EXPECT_EQ(ker_norm(make_field(5)).size(), 6u);
}

TEST(KerNorm, OrderQPlusOneAndCyclic) {
  for (auto q : oracle::primes_up_to(100)) {
    const auto ctx = make_field(q);
    const auto kernel = ker_norm(ctx);
    ASSERT_EQ(kernel.size(), q + 1u) << "q=" << q;
    ASSERT_TRUE(std::is_sorted(kernel.begin(), kernel.end()));
    const auto gen = ker_norm_generator(ctx);
    std::set<std::pair<Residue, Residue>> generated;
    ExtElement x = ctx.one();
    for (std::uint32_t k = 0; k <= q; ++k, x *= gen) generated.insert({x.a0(), x.a1()});
    ASSERT_EQ(generated.size(), q + 1u) << "q=" << q;
  }
}

TEST(PickOrderP, Examples) {
  const auto f4 = make_field(2);
  EXPECT_EQ(pick_order_p(f4, 3), f4.theta());

  // Oracle: smallest element of the whole field with N = 1, c^3 = 1, c != 1.
  const auto f25 = make_field(5);
  ExtElement expected;
  for (const auto& x : f25.elements())
    if (norm(x) == 1 && !x.is_one() && (x * x * x).is_one()) {
      expected = x;
      break;
    }
  EXPECT_EQ(pick_order_p(f25, 3), expected);
  EXPECT_EQ(pick_order_p(f25, 3), f25.element(2, 2));

  EXPECT_EQ(error_code([] { pick_order_p(make_field(7), 3); }), Errc::NoSuchElement);
  EXPECT_EQ(error_code([] { pick_order_p(make_field(7), 4); }), Errc::BadParameter);
}

TEST(PickOrderP, PropertiesForOddDivisors) {
  for (auto q : oracle::primes_up_to(100)) {
    const auto ctx = make_field(q);
    for (auto p : oracle::odd_primes_up_to(q + 1)) {
      if ((q + 1) % p != 0 || p == q) continue;
      const auto c = pick_order_p(ctx, p);
      EXPECT_TRUE(c.pow(p).is_one());
      EXPECT_FALSE(c.is_one());
      EXPECT_FALSE(c.in_base_field()) << "q=" << q << " p=" << p;
      EXPECT_EQ(norm(c), 1u);
    }
  }
}

TEST(SqrtExt, Examples) {
  const auto f25 = make_field(5);
  EXPECT_EQ(sqrt_ext(f25.zero()), f25.zero());
  EXPECT_EQ(sqrt_ext(f25.base(2)), f25.theta());
  EXPECT_EQ(sqrt_ext(f25.one()), f25.one());
}

TEST(SqrtExt, RootsSquareBackAndSquareCountIsExact) {
  for (auto q : oracle::primes_up_to(31)) {
    const auto ctx = make_field(q);
    std::size_t squares = 0;
    std::set<std::pair<Residue, Residue>> image;
    for (const auto& y : ctx.elements()) {
      const auto s = y * y;
      image.insert({s.a0(), s.a1()});
    }
    for (const auto& x : ctx.elements()) {
      const auto r = sqrt_ext(x);
      ASSERT_EQ(r.has_value(), image.count({x.a0(), x.a1()}) == 1) << "q=" << q << " x=" << x;
      if (!r) continue;
      ++squares;
      ASSERT_EQ(*r * *r, x);
      ASSERT_FALSE(-*r < *r);
    }
    if (q != 2) {
      EXPECT_EQ(squares, (std::size_t{q} * q + 1) / 2) << "q=" << q;
      for (Residue a = 0; a < q; ++a) EXPECT_TRUE(sqrt_ext(ctx.base(a)).has_value());
    }
  }
}

}  // namespace
}  // namespace anisogauge
