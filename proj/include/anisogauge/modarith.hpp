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

// Arithmetic on residues modulo a small prime. Residues are kept in [0, q).
// All products fit in 64 bits because q is bounded well below 2^31.

namespace anisogauge {

using Residue = std::uint32_t;

constexpr Residue mod_reduce(std::int64_t a, std::uint32_t q) {
  std::int64_t r = a % static_cast<std::int64_t>(q);
  return static_cast<Residue>(r < 0 ? r + q : r);
}

constexpr Residue mod_add(Residue a, Residue b, std::uint32_t q) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<Residue>(s >= q ? s - q : s);
}

constexpr Residue mod_sub(Residue a, Residue b, std::uint32_t q) {
  return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + q - b);
}

constexpr Residue mod_neg(Residue a, std::uint32_t q) { return a == 0 ? 0 : q - a; }

constexpr Residue mod_mul(Residue a, Residue b, std::uint32_t q) {
  return static_cast<Residue>((std::uint64_t{a} * b) % q);
}

constexpr Residue mod_pow(Residue base, std::uint64_t e, std::uint32_t q) {
  std::uint64_t r = 1 % q, b = base % q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return static_cast<Residue>(r);
}

// q must be prime and a nonzero.
constexpr Residue mod_inv(Residue a, std::uint32_t q) { return mod_pow(a, q - 2, q); }

bool is_prime(std::uint64_t n);

// Legendre-style test: true iff a is a nonzero square mod the odd prime q.
bool is_quadratic_residue(Residue a, std::uint32_t q);

}  // namespace anisogauge
