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

#include "gapseq/rr_ledger.hpp"

#include <algorithm>
#include <vector>

namespace gapseq {

DimensionLedger dimension_ledger(const GapSequence& gaps) {
  if (!gaps.is_validated()) {
    throw DomainError("dimension_ledger: gap sequence has not been validated");
  }
  const int g = gaps.genus();
  DimensionLedger ledger;
  ledger.genus = g;
  ledger.canonical_degree = canonical_degree(g);
  ledger.ell.resize(static_cast<std::size_t>(2 * g + 1));
  ledger.omega.resize(static_cast<std::size_t>(2 * g + 1));

  int non_gaps_so_far = 0;
  for (int n = 0; n <= 2 * g; ++n) {
    if (n >= 1 && !gaps.contains(n)) ++non_gaps_so_far;
    ledger.ell[n] = 1 + non_gaps_so_far;
  }
  for (int n = 0; n <= 2 * g; ++n) {
    ledger.omega[n] = static_cast<int>(std::count_if(
        gaps.gaps().begin(), gaps.gaps().end(), [&](int x) { return x > n && x <= 2 * g - 1; }));
  }
  return ledger;
}

namespace {

std::vector<int> plateaus(const DimensionLedger& ledger) {
  std::vector<int> out;
  const int last = std::min<int>(2 * ledger.genus - 1, static_cast<int>(ledger.ell.size()) - 1);
  for (int n = 1; n <= last; ++n) {
    if (ledger.ell[n] == ledger.ell[n - 1]) out.push_back(n);
  }
  return out;
}

}  // namespace

ValidationReport verify_riemann_roch(const DimensionLedger& ledger) {
  const int g = ledger.genus;
  check_genus(g, "verify_riemann_roch");
  std::vector<Violation> found;
  const int expected_len = 2 * g + 1;
  const int ell_len = static_cast<int>(ledger.ell.size());
  const int omega_len = static_cast<int>(ledger.omega.size());

  if (ell_len != expected_len) {
    found.push_back({Constraint::kLedgerShape, {-1, ell_len, expected_len}});
  }
  if (omega_len != expected_len) {
    found.push_back({Constraint::kLedgerShape, {-1, omega_len, expected_len}});
  }
  if (ledger.canonical_degree != canonical_degree(g)) {
    found.push_back({Constraint::kCanonicalDegree, {-1, ledger.canonical_degree, canonical_degree(g)}});
  }
  const int len = std::min(ell_len, omega_len);

  if (ell_len > 0 && ledger.ell[0] != 1) {
    found.push_back({Constraint::kConstantsBase, {0, ledger.ell[0], 1}});
  }
  if (omega_len > 0 && ledger.omega[0] != g) {
    found.push_back({Constraint::kDifferentialBase, {0, ledger.omega[0], g}});
  }
  if (g >= 1 && omega_len >= 2 * g && ledger.omega[2 * g - 1] != 0) {
    found.push_back({Constraint::kDifferentialTerminal, {2 * g - 1, ledger.omega[2 * g - 1], 0}});
  }

  for (int n = 0; n < len; ++n) {
    const int expected = n + 1 - g + ledger.omega[n];
    if (ledger.ell[n] != expected) {
      found.push_back({Constraint::kRiemannRoch, {n, ledger.ell[n], expected}});
    }
  }

  // Exactly one of: ell rises by one, omega falls by one.
  for (int n = 1; n < len; ++n) {
    const int rise = ledger.ell[n] - ledger.ell[n - 1];
    const int fall = ledger.omega[n - 1] - ledger.omega[n];
    if (rise < 0 || rise > 1) {
      found.push_back({Constraint::kStep, {n, rise, rise < 0 ? 0 : 1}});
    }
    if (fall < 0 || fall > 1) {
      found.push_back({Constraint::kStep, {n, fall, fall < 0 ? 0 : 1}});
    }
    if (rise + fall != 1) {
      found.push_back({Constraint::kStep, {n, rise + fall, 1}});
    }
  }

  if (ell_len == expected_len) {
    const std::vector<int> flat = plateaus(ledger);
    if (static_cast<int>(flat.size()) != g) {
      found.push_back({Constraint::kPlateauCount, {-1, static_cast<int>(flat.size()), g}});
    } else if (!validate_gap_sequence(flat, g).valid) {
      found.push_back({Constraint::kPlateauSet, {-1, 0, 1}});
    }
  }

  std::sort(found.begin(), found.end());
  ValidationReport report;
  report.valid = found.empty();
  report.violations = std::move(found);
  return report;
}

ValidationReport verify_riemann_roch(const DimensionLedger& ledger, const GapSequence& gaps) {
  ValidationReport report = verify_riemann_roch(ledger);
  if (static_cast<int>(ledger.ell.size()) == 2 * ledger.genus + 1) {
    const std::vector<int> flat = plateaus(ledger);
    std::vector<int> expected = gaps.gaps();
    std::sort(expected.begin(), expected.end());
    if (gaps.genus() != ledger.genus || flat != expected) {
      // Report the first index where plateau membership and gap membership disagree.
      int where = -1;
      for (int n = 1; n <= 2 * ledger.genus - 1 && where < 0; ++n) {
        const bool is_flat = std::binary_search(flat.begin(), flat.end(), n);
        if (is_flat != gaps.contains(n)) where = n;
      }
      report.violations.push_back({Constraint::kPlateauSet, {where, 0, 1}});
      std::sort(report.violations.begin(), report.violations.end());
      report.valid = false;
    }
  }
  return report;
}

}  // namespace gapseq
