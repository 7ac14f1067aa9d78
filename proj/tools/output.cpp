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

#include "output.hpp"

#include <sstream>
#include <string>

namespace gapseq::cli {

namespace {

template <class Range, class Fn>
std::string join(const Range& items, const char* sep, Fn&& fn) {
  std::ostringstream os;
  bool first = true;
  for (const auto& item : items) {
    if (!first) os << sep;
    first = false;
    os << fn(item);
  }
  return os.str();
}

std::string join_ints(const std::vector<int>& v, const char* sep) {
  return join(v, sep, [](int x) { return x; });
}

std::string join_runs(const std::vector<ApRun>& runs, const char* sep) {
  return join(runs, sep, [](const ApRun& r) {
    return std::to_string(r.residue) + ":" + std::to_string(r.length);
  });
}

}  // namespace

OutputRecord make_record(const GapSequence& gaps, bool include_ledger) {
  const NumericalSemigroup s = complement_semigroup(gaps);
  OutputRecord r;
  r.genus = gaps.genus();
  r.gaps = gaps.gaps();
  r.non_gaps_window = s.non_gaps_up_to(2 * r.genus);
  r.multiplicity = multiplicity(s);
  r.frobenius = frobenius_number(s);
  if (r.genus == 0) {
    r.classification = "trivial";
  } else {
    r.classification = classification_name(classify(gaps));
    r.ap_runs = ap_decomposition(gaps).runs;
  }
  if (include_ledger) r.ledger = dimension_ledger(gaps);
  return r;
}

nlohmann::json to_json(const OutputRecord& record) {
  nlohmann::json j;
  j["genus"] = record.genus;
  j["gaps"] = record.gaps;
  j["non_gaps_window"] = record.non_gaps_window;
  j["multiplicity"] = record.multiplicity;
  j["frobenius"] = record.frobenius;
  j["classification"] = record.classification;
  j["ap_runs"] = nlohmann::json::array();
  for (const ApRun& run : record.ap_runs) {
    j["ap_runs"].push_back({{"j", run.residue}, {"lambda", run.length}});
  }
  if (record.ledger) {
    j["ledger"] = {{"ell", record.ledger->ell}, {"i", record.ledger->omega}};
  }
  return j;
}

std::string to_plain(const OutputRecord& record, bool detailed) {
  std::ostringstream os;
  os << "g=" << record.genus << " gaps={" << join_ints(record.gaps, ",") << "} nongaps<=2g={"
     << join_ints(record.non_gaps_window, ",") << "}";
  if (detailed) {
    os << " multiplicity=" << record.multiplicity << " frobenius=" << record.frobenius
       << " class=" << record.classification << " runs={" << join_runs(record.ap_runs, ",")
       << "}";
  }
  if (record.ledger) {
    os << " ell=(" << join_ints(record.ledger->ell, ",") << ") i=("
       << join_ints(record.ledger->omega, ",") << ")";
  }
  return os.str();
}

std::string csv_header(bool with_ledger) {
  std::string h = "genus,gaps,non_gaps_window,multiplicity,frobenius,classification,ap_runs";
  if (with_ledger) h += ",ell,i";
  return h;
}

std::string to_csv(const OutputRecord& record) {
  std::ostringstream os;
  os << record.genus << ',' << join_ints(record.gaps, ";") << ','
     << join_ints(record.non_gaps_window, ";") << ',' << record.multiplicity << ','
     << record.frobenius << ',' << record.classification << ','
     << join_runs(record.ap_runs, ";");
  if (record.ledger) {
    os << ',' << join_ints(record.ledger->ell, ";") << ','
       << join_ints(record.ledger->omega, ";");
  }
  return os.str();
}

nlohmann::json to_json(const ValidationReport& report) {
  nlohmann::json j;
  j["valid"] = report.valid;
  j["violations"] = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    j["violations"].push_back({{"constraint", constraint_name(v.constraint)},
                               {"witness", v.witness},
                               {"message", describe(v)}});
  }
  return j;
}

nlohmann::json to_json(const DimensionLedger& ledger) {
  return {{"genus", ledger.genus},
          {"canonical_degree", ledger.canonical_degree},
          {"ell", ledger.ell},
          {"i", ledger.omega}};
}

}  // namespace gapseq::cli
