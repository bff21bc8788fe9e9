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

#include "anisogauge/fusion_ring.hpp"

#include <gtest/gtest.h>

#include <cmath>

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

std::vector<std::pair<std::uint32_t, std::uint32_t>> valid_pairs(std::uint64_t bound) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (auto q : oracle::odd_primes_up_to(bound))
    for (auto p : oracle::odd_primes_up_to(q - 1))
      if ((q + 1) % p == 0 && std::uint64_t{p} * q * q <= bound) out.emplace_back(p, q);
  return out;
}

std::uint32_t idx(const FusionRing& r, std::string_view label) {
  const auto i = r.index_of(label);
  EXPECT_TRUE(i.has_value()) << label;
  return i.value_or(0);
}

FusionRing fibonacci() {
  FusionRing r({"1", "tau"}, 0, {0, 1});
  r.set(0, 0, 0, 1);
  r.set(0, 1, 1, 1);
  r.set(1, 0, 1, 1);
  r.set(1, 1, 0, 1);
  r.set(1, 1, 1, 1);
  return r;
}

FusionRing ising() {
  FusionRing r({"1", "psi", "sigma"}, 0, {0, 1, 2});
  for (std::uint32_t i = 0; i < 3; ++i) r.set(0, i, i, 1), r.set(i, 0, i, 1);
  r.set(1, 1, 0, 1);
  r.set(1, 2, 2, 1);
  r.set(2, 1, 2, 1);
  r.set(2, 2, 0, 1);
  r.set(2, 2, 1, 1);
  return r;
}

TEST(ExtensionRing, ExamplesAtThreeFive) {
  const auto r = build_extension_ring(3, 5);
  ASSERT_EQ(r.size(), 27u);
  const auto x1 = idx(r, "X1"), x2 = idx(r, "X2");

  const auto x1x2 = r.product(x1, x2);
  ASSERT_EQ(x1x2.size(), 25u);
  for (const auto& t : x1x2) {
    EXPECT_LT(t.label, 25u);
    EXPECT_EQ(t.mult, 1u);
  }

  const auto x1x1 = r.product(x1, x1);
  ASSERT_EQ(x1x1.size(), 1u);
  EXPECT_EQ(x1x1[0], (FusionTerm{x2, 5}));

  for (std::uint32_t a = 0; a < 25; ++a)
    for (std::uint32_t b = 0; b < 25; ++b) {
      const auto ab = r.product(a, b);
      ASSERT_EQ(ab.size(), 1u);
      const auto expect = ((a / 5 + b / 5) % 5) * 5 + (a % 5 + b % 5) % 5;
      ASSERT_EQ(ab[0], (FusionTerm{expect, 1}));
    }
  EXPECT_EQ(r.product(idx(r, "[2,3]"), x1)[0], (FusionTerm{x1, 1}));
  EXPECT_EQ(r.product(x2, idx(r, "[4,1]"))[0], (FusionTerm{x2, 1}));
  EXPECT_EQ(r.dual(x1), x2);
  EXPECT_EQ(r.dual(idx(r, "[1,2]")), idx(r, "[4,3]"));
}

TEST(ExtensionRing, Errors) {
  EXPECT_EQ(error_code([] { build_extension_ring(3, 7); }), Errc::ExistenceViolated);
  EXPECT_EQ(error_code([] { build_extension_ring(4, 7); }), Errc::BadParameter);
  EXPECT_EQ(error_code([] { build_extension_ring(3, 9); }), Errc::BadParameter);
  EXPECT_EQ(error_code([] { build_extension_ring(5, 5); }), Errc::BadParameter);
}

TEST(ExtensionRing, AxiomsAndDimensionsForAllSmallPairs) {
  const auto pairs = valid_pairs(2000);
  ASSERT_GE(pairs.size(), 6u);
  for (auto [p, q] : pairs) {
    const auto r = build_extension_ring(p, q);
    EXPECT_EQ(r.size(), std::size_t{q} * q + p - 1);
    const auto rep = verify_axioms(r);
    EXPECT_TRUE(rep.ok()) << "p=" << p << " q=" << q << ": " << rep.first_failure;
    const auto d = fp_dims(r);
    ASSERT_TRUE(d.integral);
    for (std::uint32_t i = 0; i < r.size(); ++i) EXPECT_EQ(d.integer_dims[i], i < q * q ? 1u : q);
    EXPECT_EQ(d.integer_global_dimension, std::uint64_t{p} * q * q);
  }
}

TEST(ExtensionRing, EvenPrimePairsStillSatisfyAxioms) {
  // p = 2 divides every odd q + 1; q = 2 pairs with p = 3.
  for (auto [p, q] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 2u}}) {
    const auto r = build_extension_ring(p, q);
    EXPECT_TRUE(verify_axioms(r).ok()) << p << "," << q;
    EXPECT_EQ(fp_dims(r).integer_global_dimension, std::uint64_t{p} * q * q);
  }
}

TEST(ExtensionRing, GradingIsRespected) {
  for (auto [p, q] : {std::pair{3u, 5u}, {3u, 11u}, {7u, 13u}}) {
    const auto r = build_extension_ring(p, q);
    auto deg = [&](std::uint32_t i) { return i < q * q ? 0u : i - q * q + 1; };
    for (std::uint32_t i = 0; i < r.size(); ++i)
      for (std::uint32_t j = 0; j < r.size(); ++j)
        for (const auto& t : r.product(i, j)) ASSERT_EQ(deg(t.label), (deg(i) + deg(j)) % p);
  }
}

TEST(ExtensionRing, InvertibleIffDimensionOne) {
  const auto r = build_extension_ring(5, 19);
  const auto d = fp_dims(r);
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    const auto self = r.product(i, r.dual(i));
    const bool single_unit = self.size() == 1 && self[0] == FusionTerm{r.unit(), 1};
    EXPECT_EQ(r.is_invertible(i), single_unit);
    EXPECT_EQ(r.is_invertible(i), d.integer_dims[i] == 1) << r.label(i);
  }
}

TEST(VerifyAxioms, MutationBreaksAssociativity) {
  auto r = build_extension_ring(3, 5);
  const auto x1 = idx(r, "X1"), x2 = idx(r, "X2");
  r.set(x1, x1, x2, 6);
  const auto rep = verify_axioms(r);
  EXPECT_FALSE(rep.associativity_ok);
  EXPECT_FALSE(rep.ok());
  EXPECT_FALSE(rep.first_failure.empty());
}

TEST(VerifyAxioms, DetectsUnitAndDualityDefects) {
  auto r = cyclic_group_ring(4);
  r.set(0, 1, 1, 0);
  r.set(0, 1, 2, 1);
  EXPECT_FALSE(verify_axioms(r).unit_ok);

  // Z/3 with the identity as duality map: 1 (x) 1* would have to contain 0.
  FusionRing bad_dual({"0", "1", "2"}, 0, {0, 1, 2});
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) bad_dual.set(a, b, (a + b) % 3, 1);
  EXPECT_FALSE(verify_axioms(bad_dual).duality_ok);
}

TEST(VerifyAxioms, GroupRingsPass) {
  for (std::uint32_t n = 1; n <= 12; ++n) {
    const auto r = cyclic_group_ring(n);
    EXPECT_TRUE(verify_axioms(r).ok()) << n;
    const auto d = fp_dims(r);
    EXPECT_TRUE(d.integral);
    EXPECT_EQ(d.integer_global_dimension, n);
  }
}

TEST(FpDims, NonIntegralRings) {
  const auto fib = fp_dims(fibonacci());
  EXPECT_TRUE(verify_axioms(fibonacci()).ok());
  EXPECT_FALSE(fib.integral);
  EXPECT_NEAR(fib.dims[1], (1 + std::sqrt(5.0)) / 2, 1e-9);
  EXPECT_NEAR(fib.global_dimension, (5 + std::sqrt(5.0)) / 2, 1e-9);

  const auto is = fp_dims(ising());
  EXPECT_TRUE(verify_axioms(ising()).ok());
  EXPECT_FALSE(is.integral);
  EXPECT_NEAR(is.dims[2], std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(is.global_dimension, 4.0, 1e-9);
}

TEST(FpDims, CharacterEquationHolds) {
  const auto r = build_extension_ring(3, 11);
  const auto d = fp_dims(r);
  for (std::uint32_t i = 0; i < r.size(); ++i)
    for (std::uint32_t j = 0; j < r.size(); j += 7) {
      std::uint64_t rhs = 0;
      for (const auto& t : r.product(i, j)) rhs += t.mult * d.integer_dims[t.label];
      ASSERT_EQ(d.integer_dims[i] * d.integer_dims[j], rhs);
    }
}

TEST(Serialize, RoundTrip) {
  for (const auto& r : {build_extension_ring(3, 5), cyclic_group_ring(5), fibonacci(), ising()}) {
    const auto text = serialize(r);
    const auto back = parse_fusion_ring(text);
    EXPECT_EQ(back, r);
    EXPECT_EQ(serialize(back), text);
  }
}

TEST(Serialize, Format) {
  const auto text = serialize(cyclic_group_ring(2));
  EXPECT_EQ(text.rfind("fusionring v1 2\n", 0), 0u);
  const auto r = parse_fusion_ring("fusionring v1 2\n1 1\ntau tau\n0 0 0 1\n0 1 1 1\n1 0 1 1\n1 1 0 1\n1 1 1 1\n");
  EXPECT_EQ(r, fibonacci());
}

TEST(Serialize, ParseErrors) {
  for (const char* bad : {"", "fusionring v2 1\n1 1\n", "fusionring v1 2\n1 1\n", "fusionring v1 1\n1 1\n0 0 5 1\n",
                          "fusionring v1 1\n1 1\n0 0 0 x\n", "fusionring v1 1\n1 nope\n"})
    EXPECT_EQ(error_code([&] { parse_fusion_ring(bad); }), Errc::ParseError) << bad;
}

}  // namespace
}  // namespace anisogauge
