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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "anisogauge/error.hpp"
#include "anisogauge/modarith.hpp"

namespace anisogauge {

FusionRing::FusionRing(std::vector<std::string> labels, std::uint32_t unit, std::vector<std::uint32_t> dual)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)) {
  const auto n = labels_.size();
  if (n == 0) throw Error(Errc::BadParameter, "empty basis");
  if (unit_ >= n) throw Error(Errc::BadParameter, "unit out of range");
  if (dual_.size() != n) throw Error(Errc::BadParameter, "dual map has the wrong size");
  for (std::size_t i = 0; i < n; ++i)
    if (dual_[i] >= n || dual_[dual_[i]] != i) throw Error(Errc::BadParameter, "dual map is not an involution");
  rows_.resize(n * n);
}

std::optional<std::uint32_t> FusionRing::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - labels_.begin());
}

void FusionRing::set(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint64_t n) {
  auto& r = rows_[row(i, j)];
  auto it = std::lower_bound(r.begin(), r.end(), k, [](const FusionTerm& t, std::uint32_t key) { return t.label < key; });
  if (it != r.end() && it->label == k) {
    if (n == 0)
      r.erase(it);
    else
      it->mult = n;
  } else if (n != 0) {
    r.insert(it, FusionTerm{k, n});
  }
}

void FusionRing::add(std::uint32_t i, std::uint32_t j, std::uint32_t k, std::uint64_t n) {
  set(i, j, k, coeff(i, j, k) + n);
}

std::uint64_t FusionRing::coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
  const auto& r = rows_[row(i, j)];
  auto it = std::lower_bound(r.begin(), r.end(), k, [](const FusionTerm& t, std::uint32_t key) { return t.label < key; });
  return (it != r.end() && it->label == k) ? it->mult : 0;
}

std::size_t FusionRing::nonzero_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

bool FusionRing::is_invertible(std::uint32_t i) const {
  auto p = product(i, dual(i));
  return p.size() == 1 && p[0].label == unit_ && p[0].mult == 1;
}

// ---------------------------------------------------------------------------

namespace {

std::string triple(const FusionRing& r, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  return "(" + r.label(i) + ", " + r.label(j) + ", " + r.label(k) + ")";
}

}  // namespace

AxiomReport verify_axioms(const FusionRing& ring) {
  AxiomReport rep;
  const auto n = static_cast<std::uint32_t>(ring.size());
  const auto one = ring.unit();
  auto fail = [&rep](bool& flag, std::string msg) {
    if (rep.first_failure.empty()) rep.first_failure = std::move(msg);
    flag = false;
  };

  for (std::uint32_t j = 0; j < n && rep.unit_ok; ++j) {
    for (auto row : {ring.product(one, j), ring.product(j, one)}) {
      if (row.size() != 1 || row[0].label != j || row[0].mult != 1)
        fail(rep.unit_ok, "unit law fails at " + ring.label(j));
    }
  }

  // Associativity, one triple at a time: acc = (ij)k - i(jk) over a dense
  // scratch vector, reset through the touched list.
  std::vector<std::int64_t> acc(n, 0);
  std::vector<std::uint32_t> touched;
  touched.reserve(n);
  auto bump = [&](std::uint32_t label, std::int64_t v) {
    if (acc[label] == 0) touched.push_back(label);
    acc[label] += v;
  };
  for (std::uint32_t i = 0; i < n && rep.associativity_ok; ++i) {
    for (std::uint32_t j = 0; j < n && rep.associativity_ok; ++j) {
      const auto ij = ring.product(i, j);
      for (std::uint32_t k = 0; k < n; ++k) {
        for (const auto& m : ij)
          for (const auto& t : ring.product(m.label, k)) bump(t.label, static_cast<std::int64_t>(m.mult * t.mult));
        for (const auto& l : ring.product(j, k))
          for (const auto& t : ring.product(i, l.label)) bump(t.label, -static_cast<std::int64_t>(l.mult * t.mult));
        bool clean = true;
        for (auto label : touched) {
          clean = clean && acc[label] == 0;
          acc[label] = 0;
        }
        touched.clear();
        if (!clean) {
          fail(rep.associativity_ok, "associativity fails at " + triple(ring, i, j, k));
          break;
        }
      }
    }
  }

  // N_{ij}^1 = [j = i*].
  for (std::uint32_t i = 0; i < n && rep.duality_ok; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint64_t expect = (j == ring.dual(i)) ? 1 : 0;
      if (ring.coeff(i, j, one) != expect) {
        fail(rep.duality_ok, "N_{ij}^1 != [j = i*] at " + triple(ring, i, j, one));
        break;
      }
    }
  // Both rotations are involutions on triples, so checking them on the
  // nonzero entries covers every triple.
  for (std::uint32_t i = 0; i < n && rep.duality_ok; ++i)
    for (std::uint32_t j = 0; j < n && rep.duality_ok; ++j)
      for (const auto& t : ring.product(i, j)) {
        const auto k = t.label;
        if (ring.coeff(ring.dual(i), k, j) != t.mult || ring.coeff(k, ring.dual(j), i) != t.mult) {
          fail(rep.duality_ok, "Frobenius reciprocity fails at " + triple(ring, i, j, k));
          break;
        }
      }
  return rep;
}

FpDims fp_dims(const FusionRing& ring) {
  const auto n = static_cast<std::uint32_t>(ring.size());
  const auto one = ring.unit();

  // The FP character is the Perron eigenvector of M = sum_i L_i, whose entries
  // M_{kl} = sum_i N_{ik}^l are all positive for a transitive ring.
  std::vector<double> v(n, 1.0), next(n);
  for (int iter = 0; iter < 5000; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < n; ++k)
        for (const auto& t : ring.product(i, k)) next[k] += static_cast<double>(t.mult) * v[t.label];
    const double scale = next[one];
    if (!(scale > 0)) throw Error(Errc::NotACharacter, "power iteration lost positivity");
    double delta = 0;
    for (std::uint32_t k = 0; k < n; ++k) {
      next[k] /= scale;
      delta = std::max(delta, std::abs(next[k] - v[k]) / std::max(1.0, next[k]));
    }
    v.swap(next);
    if (delta < 1e-13) break;
  }

  FpDims out;
  out.dims = v;
  for (double d : v)
    if (!(d > 0)) throw Error(Errc::NotACharacter, "non-positive dimension");

  // Integer proposal, verified exactly.
  std::vector<std::uint64_t> cand(n);
  for (std::uint32_t k = 0; k < n; ++k) cand[k] = static_cast<std::uint64_t>(std::llround(v[k]));
  bool exact = std::all_of(cand.begin(), cand.end(), [](std::uint64_t d) { return d > 0; });
  for (std::uint32_t i = 0; i < n && exact; ++i)
    for (std::uint32_t j = 0; j < n && exact; ++j) {
      unsigned __int128 rhs = 0;
      for (const auto& t : ring.product(i, j)) rhs += static_cast<unsigned __int128>(t.mult) * cand[t.label];
      exact = rhs == static_cast<unsigned __int128>(cand[i]) * cand[j];
    }
  if (exact) {
    out.integral = true;
    out.integer_dims = cand;
    for (std::uint32_t k = 0; k < n; ++k) {
      out.dims[k] = static_cast<double>(cand[k]);
      out.integer_global_dimension += cand[k] * cand[k];
    }
  } else {
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) {
        double rhs = 0;
        for (const auto& t : ring.product(i, j)) rhs += static_cast<double>(t.mult) * v[t.label];
        if (std::abs(rhs - v[i] * v[j]) > 1e-8 * std::max(1.0, rhs))
          throw Error(Errc::NotACharacter, "character equation fails at (" + ring.label(i) + ", " + ring.label(j) + ")");
      }
  }
  for (double d : out.dims) out.global_dimension += d * d;
  return out;
}

FusionRing build_extension_ring(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p) || !is_prime(q) || p == q)
    throw Error(Errc::BadParameter, "p and q must be distinct primes");
  if ((q + 1) % p != 0)
    throw Error(Errc::ExistenceViolated, "p = " + std::to_string(p) + " does not divide q+1 = " + std::to_string(q + 1));

  const std::uint32_t inv = q * q;
  const std::uint32_t n = inv + (p - 1);
  std::vector<std::string> labels;
  std::vector<std::uint32_t> dual(n);
  labels.reserve(n);
  auto coord = [q](std::uint32_t a) { return std::pair<std::uint32_t, std::uint32_t>{a / q, a % q}; };
  auto index = [q](std::uint32_t x, std::uint32_t y) { return (x % q) * q + (y % q); };
  for (std::uint32_t a = 0; a < inv; ++a) {
    auto [x, y] = coord(a);
    labels.push_back("[" + std::to_string(x) + "," + std::to_string(y) + "]");
    dual[a] = index(q - x, q - y);
  }
  auto xi = [inv](std::uint32_t i) { return inv + i - 1; };  // X_i, 1 <= i < p
  for (std::uint32_t i = 1; i < p; ++i) {
    labels.push_back("X" + std::to_string(i));
    dual[xi(i)] = xi(p - i);
  }

  FusionRing ring(std::move(labels), 0, std::move(dual));
  for (std::uint32_t a = 0; a < inv; ++a) {
    auto [ax, ay] = coord(a);
    for (std::uint32_t b = 0; b < inv; ++b) {
      auto [bx, by] = coord(b);
      ring.set(a, b, index(ax + bx, ay + by), 1);
    }
    for (std::uint32_t i = 1; i < p; ++i) {
      ring.set(a, xi(i), xi(i), 1);
      ring.set(xi(i), a, xi(i), 1);
    }
  }
  for (std::uint32_t i = 1; i < p; ++i)
    for (std::uint32_t j = 1; j < p; ++j) {
      if (i + j == p) {
        for (std::uint32_t a = 0; a < inv; ++a) ring.set(xi(i), xi(j), a, 1);
      } else {
        ring.set(xi(i), xi(j), xi((i + j) % p), q);
      }
    }
  return ring;
}

FusionRing cyclic_group_ring(std::uint32_t n) {
  if (n == 0) throw Error(Errc::BadParameter, "Z/0");
  std::vector<std::string> labels;
  std::vector<std::uint32_t> dual(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    labels.push_back("g" + std::to_string(a));
    dual[a] = (n - a) % n;
  }
  FusionRing ring(std::move(labels), 0, std::move(dual));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) ring.set(a, b, (a + b) % n, 1);
  return ring;
}

std::string serialize(const FusionRing& ring) {
  if (ring.unit() != 0) throw Error(Errc::BadParameter, "serialized rings list the unit first");
  std::ostringstream os;
  const auto n = static_cast<std::uint32_t>(ring.size());
  os << "fusionring v1 " << n << "\n";
  for (std::uint32_t i = 0; i < n; ++i) os << ring.label(i) << " " << ring.label(ring.dual(i)) << "\n";
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      for (const auto& t : ring.product(i, j)) os << i << " " << j << " " << t.label << " " << t.mult << "\n";
  return os.str();
}

FusionRing parse_fusion_ring(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string magic, version;
  std::size_t n = 0;
  if (!(is >> magic >> version >> n) || magic != "fusionring" || version != "v1" || n == 0)
    throw Error(Errc::ParseError, "bad header");
  std::vector<std::string> labels(n), dual_labels(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!(is >> labels[i] >> dual_labels[i])) throw Error(Errc::ParseError, "truncated basis section");
  std::vector<std::uint32_t> dual(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::find(labels.begin(), labels.end(), dual_labels[i]);
    if (it == labels.end()) throw Error(Errc::ParseError, "unknown dual label " + dual_labels[i]);
    dual[i] = static_cast<std::uint32_t>(it - labels.begin());
  }
  FusionRing ring(std::move(labels), 0, std::move(dual));
  std::uint64_t i, j, k, m;
  while (is >> i >> j >> k >> m) {
    if (i >= n || j >= n || k >= n || m == 0) throw Error(Errc::ParseError, "bad structure constant line");
    ring.set(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), m);
  }
  if (!is.eof()) throw Error(Errc::ParseError, "trailing garbage");
  return ring;
}

}  // namespace anisogauge
