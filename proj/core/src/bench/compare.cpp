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

#include "ngbus/bench/compare.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ngbus/errors.hpp"

namespace ngbus::bench {

Comparison compare(const std::vector<BenchReport> & reports)
{
  if (reports.size() < 2) {
    throw Error(ErrorCode::kEmptyInput, "compare needs at least two reports");
  }
  Comparison cmp;
  cmp.scenario = reports.front().scenario;
  for (const BenchReport & r : reports) {
    if (r.scenario != cmp.scenario) {
      throw Error(
        ErrorCode::kScenarioMismatch,
        "report scenarios '" + cmp.scenario + "' and '" + r.scenario + "' differ");
    }
  }

  const BenchReport * standalone = nullptr;
  for (const BenchReport & r : reports) {
    if (r.mode == "standalone") {
      standalone = &r;
      break;
    }
  }

  for (const BenchReport & r : reports) {
    ModeSummary s;
    s.mode = r.mode;
    s.median = r.stats.median;
    s.iqr = r.stats.iqr();
    if (standalone != nullptr && standalone->stats.median > 0 && r.stats.median > 0) {
      const double diff = static_cast<double>(r.stats.median - standalone->stats.median);
      s.change_vs_standalone = diff / static_cast<double>(standalone->stats.median);
      s.change_base_mode = diff / static_cast<double>(r.stats.median);
      if (standalone->stats.iqr() > 0) {
        s.iqr_ratio_vs_standalone =
          static_cast<double>(r.stats.iqr()) / static_cast<double>(standalone->stats.iqr());
      }
    }
    cmp.modes.push_back(s);
  }

  auto median_of = [&reports](const std::string & mode) -> std::optional<std::int64_t> {
      for (const BenchReport & r : reports) {
        if (r.mode == mode) {return r.stats.median;}
      }
      return std::nullopt;
    };
  const auto ipc = median_of("composed-ipc");
  const auto noipc = median_of("composed-noipc");
  const auto solo = median_of("standalone");
  if (ipc && noipc && solo) {
    cmp.ordering_ok = *ipc <= *noipc && *ipc <= *solo;
  }
  return cmp;
}

std::string render_table(const Comparison & cmp)
{
  std::ostringstream out;
  out << "scenario: " << cmp.scenario << "\n";
  char line[160];
  std::snprintf(
    line, sizeof(line), "%-16s %14s %14s %12s %12s %10s\n",
    "mode", "median[us]", "iqr[us]", "d%(vs solo)", "d%(own base)", "iqr ratio");
  out << line;
  for (const ModeSummary & m : cmp.modes) {
    std::string c1 = "-", c2 = "-", c3 = "-";
    char buf[32];
    if (m.change_vs_standalone) {
      std::snprintf(buf, sizeof(buf), "%+.1f%%", *m.change_vs_standalone * 100.0);
      c1 = buf;
    }
    if (m.change_base_mode) {
      std::snprintf(buf, sizeof(buf), "%+.1f%%", *m.change_base_mode * 100.0);
      c2 = buf;
    }
    if (m.iqr_ratio_vs_standalone) {
      std::snprintf(buf, sizeof(buf), "%.2f", *m.iqr_ratio_vs_standalone);
      c3 = buf;
    }
    std::snprintf(
      line, sizeof(line), "%-16s %14.1f %14.1f %12s %12s %10s\n",
      m.mode.c_str(), static_cast<double>(m.median) / 1e3,
      static_cast<double>(m.iqr) / 1e3, c1.c_str(), c2.c_str(), c3.c_str());
    out << line;
  }
  if (cmp.ordering_ok.has_value()) {
    out << "ordering median(ipc) <= median(noipc), median(ipc) <= median(standalone): "
        << (*cmp.ordering_ok ? "holds" : "VIOLATED") << "\n";
  } else {
    out << "ordering: not evaluated (need standalone, composed-noipc and composed-ipc runs)\n";
  }
  return out.str();
}

}  // namespace ngbus::bench
