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
#include <string>

#include "json.hpp"

#include "anisogauge/finite_group.hpp"

namespace anisogauge {

enum class Format { Table, Json, Csv };

/// Result of one CLI command. Everything deterministic lives in `payload`;
/// the checksum covers payload.dump() only, timing stays outside it.
struct RunReport {
  std::string command;
  nlohmann::ordered_json payload;
  bool passed = true;
  double elapsed_ms = 0;

  std::string checksum() const;
};

struct Bounds {
  static constexpr std::uint64_t kDefaultVerify = 2000;  // cap on p q^2
  static constexpr std::uint32_t kDefaultSweep = 50;     // cap on q for sweep verification
  static constexpr std::uint32_t kSweepLimit = 200;      // hard cap on sweep qmax

  std::uint64_t verify = kDefaultVerify;
  std::uint32_t sweep = kDefaultSweep;
};

/// Errc::ExistenceViolated when p does not divide q + 1.
RunReport census_report(std::uint32_t p, std::uint32_t q);
/// Errc::BoundExceeded when p q^2 > bound; Errc::ExistenceViolated as above.
RunReport verify_report(std::uint32_t p, std::uint32_t q, std::uint64_t bound = Bounds::kDefaultVerify);
/// Rows for every odd prime pair p < q <= qmax, q ascending then p ascending.
/// Errc::BoundExceeded when qmax > Bounds::kSweepLimit.
RunReport sweep_report(std::uint32_t qmax, const Bounds& bounds = {});
RunReport double_rank_report(const FiniteGroup& g);

std::string render(const RunReport& report, Format format);

}  // namespace anisogauge
