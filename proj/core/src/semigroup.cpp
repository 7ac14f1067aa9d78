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

#include "gapseq/semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "access.hpp"

namespace gapseq {

GapSequence::GapSequence(int genus, std::vector<int> gaps)
    : genus_(genus), gaps_(std::move(gaps)) {}

GapSequence GapSequence::validated(int genus, std::vector<int> gaps) {
  const ValidationReport report = validate_gap_sequence(gaps, genus);
  if (!report.valid) {
    std::string msg = "not a valid gap sequence of genus " + std::to_string(genus);
    for (const Violation& v : report.violations) msg += "; " + describe(v);
    throw DomainError(msg);
  }
  return GapSequence(genus, std::move(gaps), true);
}

bool GapSequence::contains(int n) const noexcept {
  if (validated_) return std::binary_search(gaps_.begin(), gaps_.end(), n);
  return std::find(gaps_.begin(), gaps_.end(), n) != gaps_.end();
}

const char* constraint_name(Constraint c) noexcept {
  switch (c) {
    case Constraint::kCardinality: return "cardinality";
    case Constraint::kFirstGap: return "first-gap";
    case Constraint::kRange: return "range";
    case Constraint::kMonotonicity: return "monotonicity";
    case Constraint::kClosure: return "closure";
    case Constraint::kLedgerShape: return "ledger-shape";
    case Constraint::kCanonicalDegree: return "canonical-degree";
    case Constraint::kConstantsBase: return "ell-base";
    case Constraint::kDifferentialBase: return "omega-base";
    case Constraint::kDifferentialTerminal: return "omega-terminal";
    case Constraint::kRiemannRoch: return "riemann-roch";
    case Constraint::kStep: return "step";
    case Constraint::kPlateauCount: return "plateau-count";
    case Constraint::kPlateauSet: return "plateau-set";
  }
  return "unknown";
}

std::string describe(const Violation& v) {
  std::ostringstream os;
  os << constraint_name(v.constraint) << ": ";
  const auto& w = v.witness;
  auto at = [&w](std::size_t k) { return k < w.size() ? w[k] : 0; };
  switch (v.constraint) {
    case Constraint::kCardinality:
      os << at(0) << " distinct gaps given, genus " << at(1) << " requires " << at(1);
      break;
    case Constraint::kFirstGap:
      os << "1 missing";
      break;
    case Constraint::kRange:
      os << at(0) << " outside [1, " << at(1) << "]";
      break;
    case Constraint::kMonotonicity:
      os << at(1) << " does not exceed preceding " << at(0);
      break;
    case Constraint::kClosure:
      os << at(0) << "+" << at(1) << "=" << at(2) << " is a gap";
      break;
    default:
      if (at(0) >= 0) os << "n=" << at(0) << " ";
      os << "observed " << at(1) << ", expected " << at(2);
      break;
  }
  return os.str();
}

bool ValidationReport::has(Constraint c) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [c](const Violation& v) { return v.constraint == c; });
}

ValidationReport validate_gap_sequence(std::span<const int> candidate, int genus) {
  check_genus(genus, "validate_gap_sequence");
  const int top = 2 * genus - 1;
  std::vector<Violation> found;

  for (std::size_t k = 1; k < candidate.size(); ++k) {
    if (candidate[k] <= candidate[k - 1]) {
      found.push_back({Constraint::kMonotonicity, {candidate[k - 1], candidate[k]}});
    }
  }

  std::vector<int> distinct(candidate.begin(), candidate.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  if (distinct.size() != static_cast<std::size_t>(genus)) {
    found.push_back({Constraint::kCardinality, {static_cast<int>(distinct.size()), genus}});
  }
  if (genus >= 1 && !std::binary_search(distinct.begin(), distinct.end(), 1)) {
    found.push_back({Constraint::kFirstGap, {1}});
  }

  // is_gap covers [0, 2g-1]; out-of-range elements only raise range findings.
  std::vector<char> is_gap(static_cast<std::size_t>(std::max(top + 1, 1)), 0);
  for (int x : distinct) {
    if (x < 1 || x > top) {
      found.push_back({Constraint::kRange, {x, top}});
    } else {
      is_gap[x] = 1;
    }
  }

  for (int p = 2; p <= top; ++p) {
    if (!is_gap[p]) continue;
    for (int q1 = 1; q1 <= p / 2; ++q1) {
      if (!is_gap[q1] && !is_gap[p - q1]) {
        found.push_back({Constraint::kClosure, {q1, p - q1, p}});
      }
    }
  }

  std::sort(found.begin(), found.end());
  ValidationReport report;
  report.valid = found.empty();
  report.violations = std::move(found);
  return report;
}

ValidationReport validate_gap_sequence(const GapSequence& candidate) {
  return validate_gap_sequence(candidate.gaps(), candidate.genus());
}

NumericalSemigroup::NumericalSemigroup(int genus, std::vector<bool> window)
    : genus_(genus), window_(std::move(window)) {
  if (genus_ == 0) return;
  const int size = static_cast<int>(window_.size());
  for (int n = 1; n < size; ++n) {
    if (window_[n]) {
      multiplicity_ = n;
      break;
    }
  }
  for (int n = size - 1; n >= 1; --n) {
    if (!window_[n]) {
      frobenius_ = n;
      break;
    }
  }
}

NumericalSemigroup NumericalSemigroup::from_candidate(const GapSequence& candidate) {
  const int g = candidate.genus();
  if (!candidate.is_validated()) {
    const ValidationReport report = validate_gap_sequence(candidate);
    for (const Violation& v : report.violations) {
      if (v.constraint == Constraint::kCardinality || v.constraint == Constraint::kRange) {
        throw DomainError("cannot form a semigroup window: " + describe(v));
      }
    }
  }
  std::vector<bool> window(static_cast<std::size_t>(4 * g + 1), true);
  for (int x : candidate.gaps()) window[x] = false;
  return NumericalSemigroup(g, std::move(window));
}

bool NumericalSemigroup::contains(int n) const noexcept {
  if (n < 0) return false;
  if (n >= static_cast<int>(window_.size())) return true;
  return window_[n];
}

std::vector<int> NumericalSemigroup::non_gaps_up_to(int bound) const {
  std::vector<int> out;
  for (int n = 1; n <= bound; ++n) {
    if (contains(n)) out.push_back(n);
  }
  return out;
}

GapSequence NumericalSemigroup::gap_sequence() const {
  std::vector<int> gaps;
  for (int n = 1; n < static_cast<int>(window_.size()); ++n) {
    if (!window_[n]) gaps.push_back(n);
  }
  if (is_closed_under_addition(*this)) {
    return GapSequenceAccess::trusted(genus_, std::move(gaps));
  }
  return GapSequence(genus_, std::move(gaps));
}

NumericalSemigroup complement_semigroup(const GapSequence& gaps) {
  if (!gaps.is_validated()) {
    throw DomainError("complement_semigroup: gap sequence has not been validated");
  }
  return NumericalSemigroup::from_candidate(gaps);
}

bool is_closed_under_addition(const NumericalSemigroup& s) {
  const int top = 2 * s.genus() - 1;
  for (int a = 1; 2 * a <= top; ++a) {
    if (!s.contains(a)) continue;
    for (int b = a; a + b <= top; ++b) {
      if (s.contains(b) && !s.contains(a + b)) return false;
    }
  }
  return true;
}

int multiplicity(const NumericalSemigroup& s) { return s.multiplicity(); }

int frobenius_number(const NumericalSemigroup& s) { return s.frobenius(); }

std::vector<int> minimal_generators(const NumericalSemigroup& s) {
  if (s.genus() == 0) return {1};
  std::vector<int> generators;
  const int bound = 2 * s.genus() + s.multiplicity();
  for (int x = 1; x <= bound; ++x) {
    if (!s.contains(x)) continue;
    bool decomposes = false;
    for (int a = 1; 2 * a <= x && !decomposes; ++a) {
      decomposes = s.contains(a) && s.contains(x - a);
    }
    if (!decomposes) generators.push_back(x);
  }
  return generators;
}

}  // namespace gapseq
