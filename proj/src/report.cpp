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

#include "anisogauge/report.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <sstream>

#include "anisogauge/census.hpp"
#include "anisogauge/error.hpp"
#include "anisogauge/fusion_ring.hpp"
#include "anisogauge/gtcheck.hpp"
#include "anisogauge/orthogroup.hpp"
#include "anisogauge/quadspace.hpp"

namespace anisogauge {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_pair(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw Error(Errc::NotPrime, "q = " + std::to_string(q) + " is not prime");
  if (p == q) throw Error(Errc::BadParameter, "p and q must be distinct");
  if ((q + 1) % p != 0)
    throw Error(Errc::ExistenceViolated, "p ∤ q+1 (" + std::to_string(p) + " does not divide " +
                                             std::to_string(q + 1) + ")");
}

json census_json(const Census& c) {
  json entries = json::array();
  for (const auto& e : c.entries) entries.push_back({{"label", e.label}, {"dimension", e.dimension}, {"count", e.count}});
  return {{"rank", c.rank()},
          {"entries", entries},
          {"sum_of_squares", c.sum_of_squares()},
          {"global_dimension", c.global_dimension}};
}

struct CheckList {
  json items = json::array();
  bool all_passed = true;

  void add(const std::string& name, bool ok, const std::string& detail) {
    items.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    all_passed = all_passed && ok;
  }
  void skip(const std::string& name, const std::string& why) {
    items.push_back({{"name", name}, {"status", "skipped"}, {"detail", why}});
  }
};

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

std::string RunReport::checksum() const {
  // FNV-1a, 64 bit.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : payload.dump()) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport census_report(std::uint32_t p, std::uint32_t q) {
  const auto start = Clock::now();
  require_pair(p, q);
  const FieldCtx ctx = make_field(q);
  const Census c = equivariantization_census(p, q);

  RunReport r;
  r.command = "census";
  r.payload = {{"p", p}, {"q", q}, {"defining_poly", ctx.defining_poly()}};
  const json body = census_json(c);
  for (const auto& [k, v] : body.items()) r.payload[k] = v;
  r.passed = c.consistent();
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport verify_report(std::uint32_t p, std::uint32_t q, std::uint64_t bound) {
  const auto start = Clock::now();
  if (!is_prime(p)) throw Error(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw Error(Errc::NotPrime, "q = " + std::to_string(q) + " is not prime");
  const std::uint64_t size = std::uint64_t{p} * q * q;
  if (size > bound)
    throw Error(Errc::BoundExceeded, "p q^2 = " + std::to_string(size) + " exceeds the bound " + std::to_string(bound));
  require_pair(p, q);

  const FieldCtx ctx = make_field(q);
  CheckList checks;

  const auto kernel = ker_norm(ctx);
  const auto gen = ker_norm_generator(ctx);
  checks.add("ker_norm", kernel.size() == q + 1 && gen.order() == q + 1,
             "|ker N| = " + std::to_string(kernel.size()) + ", generator " + gen.to_string());

  const QuadSpace aniso = build_anisotropic(ctx);
  const auto orth = enumerate_orth(aniso);
  const auto dih = verify_dihedral(orth);
  std::vector<Mat2> structured;
  for (const auto& g : anisotropic_orth(ctx)) structured.push_back(g.matrix());
  std::sort(structured.begin(), structured.end());
  checks.add("orth_anisotropic", orth.size() == 2 * (q + 1) && dih.dihedral && structured == orth,
             "|O| = " + std::to_string(orth.size()) + ", dihedral " + (dih.dihedral ? "yes" : "no"));

  const auto horth = enumerate_orth(build_hyperbolic(ctx));
  const auto hdih = verify_dihedral(horth);
  checks.add("orth_hyperbolic", horth.size() == 2 * (q - 1) && hdih.dihedral,
             "|O| = " + std::to_string(horth.size()) + ", dihedral " + (hdih.dihedral ? "yes" : "no"));

  const MetricGroup mg = metric_group_of(aniso);
  checks.add("metric_group", mg.size() == std::size_t{q} * q, "non-degenerate on (Z/" + std::to_string(q) + ")^2");

  const FusionRing ring = build_extension_ring(p, q);
  const AxiomReport axioms = verify_axioms(ring);
  checks.add("fusion_axioms", axioms.ok(), axioms.ok() ? "unit, associativity, duality" : axioms.first_failure);

  const FpDims dims = fp_dims(ring);
  bool dims_ok = dims.integral && dims.integer_global_dimension == size;
  for (std::uint32_t i = 0; i < ring.size() && dims_ok; ++i)
    dims_ok = dims.integer_dims[i] == (ring.is_invertible(i) ? 1u : q);
  checks.add("fp_dims", dims_ok, "global dimension " + std::to_string(dims.integer_global_dimension));

  const Census eq = equivariantization_census(p, q);
  const std::uint64_t rank_formula = std::uint64_t{p} * p + (std::uint64_t{q} * q - 1) / p;
  checks.add("equivariantization_census", eq.consistent() && eq.rank() == rank_formula,
             "rank " + std::to_string(eq.rank()) + ", sum d^2 = " + std::to_string(eq.sum_of_squares()));

  const Census irreps = semidirect_irreps(p, q);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> degree0{{1, p}, {p, (std::uint64_t{q} * q - 1) / p}};
  checks.add("semidirect_irreps", irreps.consistent() && irreps.by_dimension() == degree0,
             "rank " + std::to_string(irreps.rank()) + ", sum d^2 = " + std::to_string(irreps.sum_of_squares()));

  const FiniteGroup grp = semidirect_group(p, q);
  const auto classes = conjugacy_classes(grp).size();
  const auto abelianization = grp.order() / commutator_subgroup_order(grp);
  checks.add("semidirect_class_count", classes == irreps.rank() && abelianization == p,
             std::to_string(classes) + " classes, |G/[G,G]| = " + std::to_string(abelianization));

  checks.add("polynomial_identity", polynomial_identity_check(q), "(x+1)^3(x-1) = x^4+2x^3-2x-1");

  json verdict = nullptr;
  if (p == 2 || q == 2) {
    checks.skip("criterion", "needs odd p and q");
  } else {
    const NonGtReport suite = nongt_theorem_suite(p, q);
    checks.add("criterion", suite.ok(), suite.verdict.witness);
    verdict = {{"c", suite.c.to_string()},
               {"mu1", suite.verdict.mu1.to_string()},
               {"mu2", suite.verdict.mu2.to_string()},
               {"ratio", suite.verdict.ratio.to_string()},
               {"group_theoretical", suite.verdict.group_theoretical}};
  }
  if (p != 2 && q != 2 && p < q)
    checks.add("existence_gate", existence_gate(p, q), "p | q+1");
  else
    checks.skip("existence_gate", "stated for odd primes p < q");

  RunReport r;
  r.command = "verify";
  r.payload = {{"p", p},
               {"q", q},
               {"defining_poly", ctx.defining_poly()},
               {"group_orders", {{"ker_norm", kernel.size()}, {"orth_anisotropic", orth.size()}, {"orth_hyperbolic", horth.size()}}},
               {"census", census_json(eq)},
               {"fusion_axioms", axioms.ok()},
               {"verdict", verdict},
               {"checks", checks.items},
               {"passed", checks.all_passed}};
  r.passed = checks.all_passed;
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport sweep_report(std::uint32_t qmax, const Bounds& bounds) {
  const auto start = Clock::now();
  if (qmax > Bounds::kSweepLimit)
    throw Error(Errc::BoundExceeded, "qmax = " + std::to_string(qmax) + " exceeds " + std::to_string(Bounds::kSweepLimit));

  json rows = json::array();
  bool all = true;
  for (std::uint32_t q = 5; q <= qmax; q += 2) {
    if (!is_prime(q)) continue;
    for (std::uint32_t p = 3; p < q; p += 2) {
      if (!is_prime(p)) continue;
      const bool exists = existence_gate(p, q);
      json row = {{"q", q}, {"p", p}, {"p_divides_q_plus_1", exists}, {"rank", nullptr}, {"verify", "n/a"}};
      if (exists) {
        row["rank"] = equivariantization_census(p, q).rank();
        const std::uint64_t size = std::uint64_t{p} * q * q;
        if (q > bounds.sweep || size > bounds.verify) {
          row["verify"] = "skipped";
        } else {
          const bool ok = verify_report(p, q, bounds.verify).passed;
          row["verify"] = ok ? "pass" : "fail";
          all = all && ok;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  RunReport r;
  r.command = "sweep";
  r.payload = {{"qmax", qmax}, {"rows", rows}, {"passed", all}};
  r.passed = all;
  r.elapsed_ms = ms_since(start);
  return r;
}

RunReport double_rank_report(const FiniteGroup& g) {
  const auto start = Clock::now();
  RunReport r;
  r.command = "double-rank";
  r.payload = {{"order", g.order()},
               {"conjugacy_classes", conjugacy_classes(g).size()},
               {"rank", drinfeld_double_rank(g)}};
  r.elapsed_ms = ms_since(start);
  return r;
}

std::string render(const RunReport& report, Format format) {
  const json& pl = report.payload;
  std::ostringstream os;

  if (format == Format::Json) {
    json doc = {{"command", report.command},
                {"payload", pl},
                {"checksum", report.checksum()},
                {"elapsed_ms", report.elapsed_ms}};
    os << doc.dump(2) << "\n";
    return os.str();
  }

  const bool csv = format == Format::Csv;
  if (report.command == "census") {
    if (csv) {
      os << "label,dimension,count\n";
      for (const auto& e : pl["entries"])
        os << csv_field(e["label"].get<std::string>()) << "," << e["dimension"] << "," << e["count"] << "\n";
    } else {
      os << "census p=" << pl["p"] << " q=" << pl["q"] << "  (F_q^2 = F_q[x]/(" << scalar(pl["defining_poly"]) << "))\n";
      os << pad("label", 14) << std::setw(10) << "dimension" << std::setw(8) << "count" << "\n";
      for (const auto& e : pl["entries"])
        os << pad(e["label"].get<std::string>(), 14) << std::setw(10) << e["dimension"].dump() << std::setw(8)
           << e["count"].dump() << "\n";
      os << "rank " << pl["rank"] << "\n";
      os << "sum d^2 " << pl["sum_of_squares"] << " (global dimension " << pl["global_dimension"] << ")\n";
    }
  } else if (report.command == "verify") {
    if (csv) {
      os << "check,status,detail\n";
      for (const auto& c : pl["checks"])
        os << scalar(c["name"]) << "," << scalar(c["status"]) << "," << csv_field(scalar(c["detail"])) << "\n";
    } else {
      os << "verify p=" << pl["p"] << " q=" << pl["q"] << "\n";
      for (const auto& c : pl["checks"]) {
        std::string status = scalar(c["status"]);
        for (auto& ch : status) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        os << pad("[" + status + "]", 10) << pad(scalar(c["name"]), 28) << scalar(c["detail"]) << "\n";
      }
      os << (pl["passed"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    }
  } else if (report.command == "sweep") {
    if (csv) {
      os << "q,p,p_divides_q_plus_1,rank,verify\n";
      for (const auto& row : pl["rows"])
        os << row["q"] << "," << row["p"] << "," << row["p_divides_q_plus_1"] << "," << scalar(row["rank"]) << ","
           << scalar(row["verify"]) << "\n";
    } else {
      os << std::setw(5) << "q" << std::setw(5) << "p" << std::setw(8) << "p|q+1" << std::setw(8) << "rank"
         << "  verify\n";
      for (const auto& row : pl["rows"])
        os << std::setw(5) << row["q"].dump() << std::setw(5) << row["p"].dump() << std::setw(8)
           << (row["p_divides_q_plus_1"].get<bool>() ? "yes" : "no") << std::setw(8) << scalar(row["rank"]) << "  "
           << scalar(row["verify"]) << "\n";
    }
  } else {
    if (csv) {
      os << "order,conjugacy_classes,rank\n" << pl["order"] << "," << pl["conjugacy_classes"] << "," << pl["rank"] << "\n";
    } else {
      os << "|G| = " << pl["order"] << ", " << pl["conjugacy_classes"] << " conjugacy classes, rank of Z(Vec_G) = "
         << pl["rank"] << "\n";
    }
  }
  return os.str();
}

}  // namespace anisogauge
