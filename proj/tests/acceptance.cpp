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

// Acceptance run: one line per criterion, non-zero exit if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "anisogauge/census.hpp"
#include "anisogauge/error.hpp"
#include "anisogauge/finite_group.hpp"
#include "anisogauge/fusion_ring.hpp"
#include "anisogauge/gtcheck.hpp"
#include "anisogauge/orthogroup.hpp"
#include "anisogauge/quadspace.hpp"
#include "oracles.hpp"

namespace {

using namespace anisogauge;
using Clock = std::chrono::steady_clock;
using Pairs = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note << "first failure: " << what;
    ok = ok && cond;
  }
};

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(ANISOGAUGE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string pair_str(std::uint32_t p, std::uint32_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// Odd primes p < q with p | q + 1, selected by a predicate on (p, q).
Pairs odd_pairs(std::uint32_t qmax, const std::function<bool(std::uint32_t, std::uint32_t)>& keep) {
  Pairs out;
  for (auto q : oracle::odd_primes_up_to(qmax))
    for (auto p : oracle::odd_primes_up_to(q - 1))
      if ((q + 1) % p == 0 && keep(p, q)) out.emplace_back(p, q);
  return out;
}

Pairs small_pairs() {
  return odd_pairs(2000, [](std::uint32_t p, std::uint32_t q) { return std::uint64_t{p} * q * q <= 2000; });
}

void rank_seventeen(Outcome& o) {
  const auto start = Clock::now();
  const auto r = run_cli("census 3 5 --format json");
  const double secs = seconds_since(start);
  o.require(r.status == 0, "exit status " + std::to_string(r.status));
  if (!o.ok) return;
  const auto pl = nlohmann::json::parse(r.out).at("payload");
  std::vector<std::pair<int, int>> dims;
  for (const auto& e : pl.at("entries")) dims.emplace_back(e.at("dimension").get<int>(), e.at("count").get<int>());
  o.require(pl.at("rank") == 17, "rank " + pl.at("rank").dump());
  o.require(dims == std::vector<std::pair<int, int>>{{1, 3}, {3, 8}, {5, 6}}, "census entries");
  o.require(pl.at("sum_of_squares") == 225, "sum of squares");
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  o.note << "rank 17 = 3 + 8 + 6, sum d^2 = 225, " << std::fixed << std::setprecision(3) << secs << " s";
}

void dihedral_orders(Outcome& o) {
  const auto start = Clock::now();
  for (std::uint32_t q : {3u, 5u, 7u, 11u, 13u}) {
    const auto ctx = make_field(q);
    const auto aniso = enumerate_orth(build_anisotropic(ctx));
    const auto hyper = enumerate_orth(build_hyperbolic(ctx));
    const auto wa = verify_dihedral(aniso);
    const auto wh = verify_dihedral(hyper);
    const auto tag = "q=" + std::to_string(q);
    o.require(aniso.size() == 2 * (q + 1), tag + " |O(N)| = " + std::to_string(aniso.size()));
    o.require(wa.dihedral && wa.half_order == q + 1, tag + " anisotropic presentation");
    o.require(hyper.size() == 2 * (q - 1), tag + " |O(hyp)| = " + std::to_string(hyper.size()));
    o.require(wh.dihedral && wh.half_order == q - 1, tag + " hyperbolic presentation");
  }
  const double secs = seconds_since(start);
  o.require(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  if (o.ok) o.note << "q in {3,5,7,11,13}, " << std::fixed << std::setprecision(3) << secs << " s";
}

void fusion_axioms(Outcome& o) {
  const auto pairs = small_pairs();
  for (auto [p, q] : Pairs{{3, 5}, {3, 11}, {3, 17}, {5, 19}, {7, 13}})
    o.require(std::find(pairs.begin(), pairs.end(), std::pair{p, q}) != pairs.end(), "missing " + pair_str(p, q));
  for (auto [p, q] : pairs) {
    const auto ring = build_extension_ring(p, q);
    const auto rep = verify_axioms(ring);
    o.require(rep.ok(), pair_str(p, q) + " " + rep.first_failure);
    const auto d = fp_dims(ring);
    o.require(d.integral, pair_str(p, q) + " non-integral dimensions");
    if (!d.integral) continue;
    for (std::uint32_t i = 0; i < ring.size(); ++i)
      o.require(d.integer_dims[i] == (ring.is_invertible(i) ? 1 : q), pair_str(p, q) + " dim of " + ring.label(i));
    o.require(d.integer_global_dimension == std::uint64_t{p} * q * q, pair_str(p, q) + " global dimension");
  }
  if (o.ok) o.note << pairs.size() << " pairs with pq^2 <= 2000";
}

void criterion_verdicts(Outcome& o) {
  const auto pairs = odd_pairs(50, [](auto, auto) { return true; });
  for (auto [p, q] : pairs) {
    const auto r = nongt_theorem_suite(p, q);
    o.require(r.ok() && !r.verdict.group_theoretical, pair_str(p, q) + " non-GT suite");
    o.require(oracle::frobenius_by_power(r.verdict.ratio) != r.verdict.ratio, pair_str(p, q) + " ratio in F_q");
  }
  std::size_t controls = 0;
  for (auto q : oracle::odd_primes_up_to(50)) {
    const auto ctx = make_field(q);
    for (Residue a = 2; a + 1 < q; ++a, ++controls) {
      const auto v = gt_criterion(ctx, hyperbolic_control(ctx, a));
      o.require(v.group_theoretical && oracle::frobenius_by_power(v.ratio) == v.ratio,
                "control q=" + std::to_string(q) + " a=" + std::to_string(a));
    }
  }
  if (o.ok) o.note << pairs.size() << " non-GT pairs, " << controls << " GT controls";
}

void analytic_identities(Outcome& o) {
  const auto pairs = odd_pairs(50, [](auto, auto) { return true; });
  for (auto [p, q] : pairs) {
    const auto ctx = make_field(q);
    const auto c = pick_order_p(ctx, p);
    const auto g = rotation(c);
    const auto m = embed_alpha_g(g);
    const auto a = m.alpha + m.beta * m.delta * m.beta.inverse();
    o.require(a == Mat2::identity(q) + g.matrix(), pair_str(p, q) + " criterion matrix");
    o.require((ctx.one() + c) / (ctx.one() + c.inverse()) == c, pair_str(p, q) + " lambda");
    o.require(nongt_theorem_suite(p, q).criterion_matrix_is_id_plus_g, pair_str(p, q) + " suite flag");
  }
  const auto primes = oracle::primes_up_to(100);
  for (auto q : primes) {
    o.require(polynomial_expansion_check(q), "expansion q=" + std::to_string(q));
    // Independent expansion: multiply out (x + 1)^3 (x - 1) coefficient-wise.
    std::vector<std::int64_t> poly{1};
    auto times = [&](std::int64_t root) {
      std::vector<std::int64_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += root * poly[i];
        next[i + 1] += poly[i];
      }
      poly = next;
    };
    times(1), times(1), times(1), times(-1);
    const std::vector<std::int64_t> expected{-1, -2, 0, 2, 1};
    for (std::size_t i = 0; i < 5; ++i)
      o.require(mod_reduce(poly[i], q) == mod_reduce(expected[i], q), "coefficient mod " + std::to_string(q));
  }
  if (o.ok) o.note << pairs.size() << " pairs, expansion for " << primes.size() << " primes q <= 100";
}

void census_cross_validation(Outcome& o) {
  const auto pairs = small_pairs();
  for (auto [p, q] : pairs) {
    const auto irreps = semidirect_irreps(p, q);
    auto degree_zero = equivariantization_census(p, q).by_dimension();
    std::erase_if(degree_zero, [q = q](const auto& e) { return e.first == q; });
    const std::uint64_t q2 = std::uint64_t{q} * q;
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{{1, p}, {p, (q2 - 1) / p}};
    o.require(irreps.by_dimension() == expected && degree_zero == expected, pair_str(p, q) + " census agreement");
    const auto g = semidirect_group(p, q);
    o.require(g.order() == irreps.sum_of_squares(), pair_str(p, q) + " group order");
    o.require(conjugacy_classes(g).size() == irreps.rank(), pair_str(p, q) + " class count");
  }
  if (o.ok) o.note << pairs.size() << " pairs, class counts by brute force";
}

void sum_of_squares(Outcome& o) {
  std::size_t emitted = 0;
  for (auto q : oracle::primes_up_to(50))
    for (auto p : oracle::primes_up_to(q + 1)) {
      if (p == q || (q + 1) % p != 0) continue;
      const auto c = equivariantization_census(p, q);
      ++emitted;
      const std::uint64_t expect = std::uint64_t{p} * p * q * q;
      o.require(c.sum_of_squares() == expect && c.consistent(), pair_str(p, q) + " sum of squares");
      o.require(c.rank() == std::uint64_t{p} * p + (std::uint64_t{q} * q - 1) / p, pair_str(p, q) + " rank");
    }
  if (o.ok) o.note << emitted << " censuses, q <= 50";
}

void double_rank(Outcome& o) {
  o.require(drinfeld_double_rank(symmetric_group(3)) == 8, "S3");
  for (std::uint32_t n = 1; n <= 30; ++n)
    o.require(drinfeld_double_rank(cyclic_group(n)) == std::uint64_t{n} * n, "Z/" + std::to_string(n));
  const auto g21 = metacyclic_group(7, 3, 2);
  const auto pairs = oracle::commuting_pair_orbits(g21);
  const auto rank = drinfeld_double_rank(g21);
  o.require(commutator_subgroup_order(g21) == 7, "order 21 group is nonabelian");
  o.require(rank == pairs, "order 21: " + std::to_string(rank) + " vs " + std::to_string(pairs));
  if (o.ok) o.note << "S3 = 8, Z/n = n^2 (n <= 30), order 21 = " << rank;
}

void determinism(Outcome& o) {
  const std::vector<std::string> commands{"census 3 5", "verify 3 5", "verify 5 19", "sweep 20",
                                          "double-rank " ANISOGAUGE_TEST_DATA "/z7_z3.txt"};
  for (const auto& args : commands)
    for (const char* fmt : {"json", "csv", "table"}) {
      const auto a = run_cli(args + " --format " + fmt);
      const auto b = run_cli(args + " --format " + fmt);
      o.require(a.status == 0 && b.status == 0, args + " exit status");
      if (std::string(fmt) == "json") {
        const auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out);
        o.require(ja.at("payload").dump() == jb.at("payload").dump(), args + " payload");
        o.require(ja.at("checksum") == jb.at("checksum"), args + " checksum");
      } else if (std::string(fmt) == "csv") {
        o.require(a.out == b.out, args + " csv bytes");
      }
    }
  if (o.ok) o.note << commands.size() << " commands, two runs each";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, void (*)(Outcome&)>> criteria{
      {"rank-17 census reproduction", rank_seventeen},
      {"dihedral orthogonal group orders", dihedral_orders},
      {"fusion ring axioms and FP dimensions", fusion_axioms},
      {"criterion verdicts and hyperbolic controls", criterion_verdicts},
      {"analytic identities", analytic_identities},
      {"census cross-validation", census_cross_validation},
      {"sum-of-squares conservation", sum_of_squares},
      {"Drinfeld double rank oracle", double_rank},
      {"deterministic payloads", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.note.str() << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
