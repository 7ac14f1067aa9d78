// Copyright 2026 The gapseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GAPSEQ_TOOLS_OUTPUT_HPP_
#define GAPSEQ_TOOLS_OUTPUT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gapseq/rr_ledger.hpp"
#include "gapseq/semigroup.hpp"
#include "gapseq/structure.hpp"
#include "json.hpp"

namespace gapseq::cli {

// Everything the tool reports about one gap sequence.
struct OutputRecord {
  int genus = 0;
  std::vector<int> gaps;
  std::vector<int> non_gaps_window;  // non-gaps in [1, 2g]
  int multiplicity = 1;
  int frobenius = -1;
  // hyperelliptic | exceptional | ordinary, or "trivial" at genus 0.
  std::string classification;
  std::vector<ApRun> ap_runs;
  std::optional<DimensionLedger> ledger;
};

// `gaps` must be validated.
OutputRecord make_record(const GapSequence& gaps, bool include_ledger);

// Keys sorted, integer lists ascending, "ledger" only when present.
nlohmann::json to_json(const OutputRecord& record);

// g=<g> gaps={..} nongaps<=2g={..}; `detailed` appends multiplicity,
// frobenius, class and runs.
std::string to_plain(const OutputRecord& record, bool detailed);

// Column order genus,gaps,non_gaps_window,multiplicity,frobenius,
// classification,ap_runs[,ell,i]; lists are ';'-separated, runs j:lambda.
std::string csv_header(bool with_ledger);
std::string to_csv(const OutputRecord& record);

nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const DimensionLedger& ledger);

}  // namespace gapseq::cli

#endif  // GAPSEQ_TOOLS_OUTPUT_HPP_
