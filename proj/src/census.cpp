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

#include "anisogauge/census.hpp"

#include <algorithm>
#include <map>

#include "anisogauge/error.hpp"
#include "anisogauge/orthogroup.hpp"

namespace anisogauge {

std::uint64_t Census::rank() const {
  std::uint64_t r = 0;
  for (const auto& e : entries) r += e.count;
  return r;
}

std::uint64_t Census::sum_of_squares() const {
  std::uint64_t s = 0;
  for (const auto& e : entries) s += e.count * e.dimension * e.dimension;
  return s;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> Census::by_dimension() const {
  std::map<std::uint64_t, std::uint64_t> acc;
  for (const auto& e : entries) acc[e.dimension] += e.count;
  return {acc.begin(), acc.end()};
}

namespace {

ExtElement generator_for(std::uint32_t p, std::uint32_t q, const FieldCtx& ctx) {
  if (!is_prime(p) || !is_prime(q) || p == q) throw Error(Errc::BadParameter, "p and q must be distinct primes");
  if ((q + 1) % p != 0)
    throw Error(Errc::ExistenceViolated, "p = " + std::to_string(p) + " does not divide q+1 = " + std::to_string(q + 1));
  return pick_order_p(ctx, p);
}

}  // namespace

std::vector<std::vector<ExtElement>> orbit_census(std::uint32_t p, std::uint32_t q) {
  const FieldCtx ctx = make_field(q);
  const ExtElement c = generator_for(p, q, ctx);
  std::vector<char> done(std::size_t{q} * q, 0);
  auto idx = [q](const ExtElement& x) { return std::size_t{x.a0()} * q + x.a1(); };
  std::vector<std::vector<ExtElement>> orbits;
  for (const auto& v : ctx.elements()) {
    if (v.is_zero() || done[idx(v)]) continue;
    std::vector<ExtElement> orbit;
    for (ExtElement w = v; !done[idx(w)]; w = c * w) {
      done[idx(w)] = 1;
      orbit.push_back(w);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Census equivariantization_census(std::uint32_t p, std::uint32_t q) {
  const auto orbits = orbit_census(p, q);
  Census c;
  c.global_dimension = std::uint64_t{p} * p * q * q;
  c.entries.push_back({"(1,chi)", 1, p});
  for (const auto& o : orbits)
    if (o.size() != p) throw Error(Errc::BadParameter, "<c> does not act freely on F_{q^2} \\ {0}");
  c.entries.push_back({"X_O", p, orbits.size()});
  c.entries.push_back({"(X_i,chi)", q, std::uint64_t{p - 1} * p});
  return c;
}

Census semidirect_irreps(std::uint32_t p, std::uint32_t q) {
  const FieldCtx ctx = make_field(q);
  const ExtElement c = generator_for(p, q, ctx);
  // <c> acts on characters u.v by u -> C^{-T} u.
  const Mat2 dual_action = multiplication_matrix(c).inverse().transpose();

  std::vector<char> done(std::size_t{q} * q, 0);
  std::map<std::uint64_t, std::uint64_t> irreps;  // dimension -> count
  for (const auto& u : plane_vectors(q)) {
    const std::size_t iu = std::size_t{u[0]} * q + u[1];
    if (done[iu]) continue;
    std::uint64_t orbit = 0;
    for (Vec2 w = u; !done[std::size_t{w[0]} * q + w[1]]; w = dual_action * w) {
      done[std::size_t{w[0]} * q + w[1]] = 1;
      ++orbit;
    }
    // Stabilizer of order p / orbit extends in p / orbit ways; each induces up
    // to an irrep of dimension orbit.
    irreps[orbit] += p / orbit;
  }
  Census census;
  census.global_dimension = std::uint64_t{p} * q * q;
  for (auto [dim, count] : irreps)
    census.entries.push_back({dim == 1 ? "fixed character" : "induced, orbit size " + std::to_string(dim), dim, count});
  return census;
}

FiniteGroup semidirect_group(std::uint32_t p, std::uint32_t q) {
  const FieldCtx ctx = make_field(q);
  const ExtElement c = generator_for(p, q, ctx);
  const std::uint32_t qq = q * q, n = p * qq;
  std::vector<ExtElement> cpow(p, ctx.one());
  for (std::uint32_t b = 1; b < p; ++b) cpow[b] = cpow[b - 1] * c;
  const auto elems = ctx.elements();

  std::vector<std::uint32_t> t(std::size_t{n} * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const std::uint32_t b = x / qq;
    const ExtElement& v = elems[x % qq];
    for (std::uint32_t y = 0; y < n; ++y) {
      // (v, b)(w, b') = (v + c^b w, b + b')
      const ExtElement s = v + cpow[b] * elems[y % qq];
      t[std::size_t{x} * n + y] = ((b + y / qq) % p) * qq + s.a0() * q + s.a1();
    }
  }
  return FiniteGroup(n, std::move(t), n <= 200);
}

}  // namespace anisogauge
