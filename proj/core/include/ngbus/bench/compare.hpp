// Copyright 2026 The ngbus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NGBUS__BENCH__COMPARE_HPP_
#define NGBUS__BENCH__COMPARE_HPP_

#include <optional>
#include <string>
#include <vector>

#include "ngbus/bench/report.hpp"

namespace ngbus::bench {

struct ModeSummary
{
  std::string mode;
  std::int64_t median{0};
  std::int64_t iqr{0};
  /// (median(mode) - median(standalone)) / median(standalone); the paper-style
  /// alternative base (divide by median(mode)) is carried alongside because
  /// the two disagree and both get printed.
  std::optional<double> change_vs_standalone;
  std::optional<double> change_base_mode;
  std::optional<double> iqr_ratio_vs_standalone;
};

/// Cross-mode comparison of runs of one scenario.
struct Comparison
{
  std::string scenario;
  std::vector<ModeSummary> modes;
  /// median(ipc) <= median(noipc) and median(ipc) <= median(standalone);
  /// unset when the needed modes are missing.
  std::optional<bool> ordering_ok;
};

/// \throws Error{kScenarioMismatch} when reports span scenarios,
/// Error{kEmptyInput} for fewer than two reports.
Comparison compare(const std::vector<BenchReport> & reports);

std::string render_table(const Comparison & comparison);

}  // namespace ngbus::bench

#endif  // NGBUS__BENCH__COMPARE_HPP_
