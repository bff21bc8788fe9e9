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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "anisogauge/error.hpp"
#include "anisogauge/finite_group.hpp"
#include "anisogauge/fusion_ring.hpp"
#include "anisogauge/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitExistence = 2;
constexpr int kExitBound = 3;
constexpr int kExitUsage = 64;

int exit_code_for(anisogauge::Errc code) {
  using anisogauge::Errc;
  switch (code) {
    case Errc::ExistenceViolated: return kExitExistence;
    case Errc::BoundExceeded: return kExitBound;
    case Errc::NotPrime:
    case Errc::BadParameter:
    case Errc::ParseError: return kExitUsage;
    default: return kExitCheckFailed;
  }
}

std::uint64_t default_verify_bound() {
  if (const char* env = std::getenv("ANISOGAUGE_BOUND")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed ANISOGAUGE_BOUND=" << env << "\n";
    }
  }
  return anisogauge::Bounds::kDefaultVerify;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace anisogauge;

  CLI::App app{"Exact constructions and checks for Z/p-gaugings of the anisotropic plane over F_q^2"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"table", Format::Table}, {"json", Format::Json}, {"csv", Format::Csv}};
  Format format = Format::Table;
  std::uint32_t p = 0, q = 0, qmax = 0;
  std::uint64_t verify_bound = default_verify_bound();
  std::uint32_t sweep_bound = Bounds::kDefaultSweep;
  std::string group_file;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* census = app.add_subcommand("census", "Simple-object census of the equivariantized category");
  census->add_option("p", p)->required();
  census->add_option("q", q)->required();
  add_format(census);

  auto* verify = app.add_subcommand("verify", "Run every check for one (p, q)");
  verify->add_option("p", p)->required();
  verify->add_option("q", q)->required();
  verify->add_option("--bound", verify_bound, "Cap on p*q^2 (env ANISOGAUGE_BOUND)");
  add_format(verify);

  auto* sweep = app.add_subcommand("sweep", "Existence table over odd prime pairs p < q <= qmax");
  sweep->add_option("qmax", qmax)->required();
  sweep->add_option("--bound", sweep_bound, "Largest q for which rows are fully verified");
  add_format(sweep);

  auto* dbl = app.add_subcommand("double-rank", "Rank of the Drinfeld double of a group given by its table");
  dbl->add_option("group-file", group_file)->required();
  add_format(dbl);

  auto* ring = app.add_subcommand("ring", "Print the Grothendieck ring of the Z/p-extension");
  ring->add_option("p", p)->required();
  ring->add_option("q", q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    RunReport report;
    if (*census) {
      report = census_report(p, q);
    } else if (*verify) {
      report = verify_report(p, q, verify_bound);
    } else if (*sweep) {
      report = sweep_report(qmax, Bounds{default_verify_bound(), sweep_bound});
    } else if (*dbl) {
      std::ifstream in(group_file);
      if (!in) {
        std::cerr << "error: cannot open " << group_file << "\n";
        return kExitUsage;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      report = double_rank_report(parse_group_table(buf.str()));
    } else {
      std::cout << serialize(build_extension_ring(p, q));
      return kExitOk;
    }
    std::cout << render(report, format);
    return report.passed ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}
