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

#ifndef GAPSEQ_SEMIGROUP_HPP_
#define GAPSEQ_SEMIGROUP_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gapseq/errors.hpp"

namespace gapseq {

// The gap set P = {n_1 < ... < n_g} at a point, together with its genus.
//
// A GapSequence is either a *candidate* (any genus/integer list, kept
// verbatim so that a ValidationReport can point at what is wrong with it)
// or *validated*: sorted, of size genus, starting at 1, bounded by 2g-1 and
// with an additively closed complement. Only the factory `validated` and
// the enumeration routines produce validated sequences.
class GapSequence {
 public:
  GapSequence() = default;

  // Unchecked candidate. Elements are stored exactly as given.
  GapSequence(int genus, std::vector<int> gaps);

  // Runs validate_gap_sequence and throws DomainError listing the
  // violations when the candidate is not a valid gap sequence.
  static GapSequence validated(int genus, std::vector<int> gaps);

  int genus() const noexcept { return genus_; }
  const std::vector<int>& gaps() const noexcept { return gaps_; }
  bool is_validated() const noexcept { return validated_; }

  bool contains(int n) const noexcept;

  // Equality and ordering ignore the validation flag. Ordering is by genus
  // and then lexicographic on the gap tuple.
  friend bool operator==(const GapSequence& a, const GapSequence& b) noexcept {
    return a.genus_ == b.genus_ && a.gaps_ == b.gaps_;
  }
  friend std::strong_ordering operator<=>(const GapSequence& a,
                                          const GapSequence& b) noexcept {
    if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
    return a.gaps_ <=> b.gaps_;
  }

 private:
  friend struct GapSequenceAccess;
  GapSequence(int genus, std::vector<int> gaps, bool validated)
      : genus_(genus), gaps_(std::move(gaps)), validated_(validated) {}

  int genus_ = 0;
  std::vector<int> gaps_;
  bool validated_ = false;
};

// Constraint tags, in report sort order. The first five apply to gap
// sequences; the rest are raised by verify_riemann_roch.
enum class Constraint : std::uint8_t {
  kCardinality,
  kFirstGap,
  kRange,
  kMonotonicity,
  kClosure,
  kLedgerShape,
  kCanonicalDegree,
  kConstantsBase,     // l(0) = 1
  kDifferentialBase,  // i(0) = g
  kDifferentialTerminal,  // i(2g-1) = 0
  kRiemannRoch,
  kStep,
  kPlateauCount,
  kPlateauSet,
};

// Stable lower-case name ("cardinality", "first-gap", "closure", ...).
const char* constraint_name(Constraint c) noexcept;

// One failed constraint plus the integers that demonstrate it:
//   cardinality   {distinct elements given, genus}
//   first-gap     {1}
//   range         {offending element}
//   monotonicity  {previous, current}
//   closure       {q1, q2, q1 + q2} with q1 <= q2 non-gaps and the sum a gap
//   ledger tags   {n, observed, expected} (n = -1 when not index specific)
struct Violation {
  Constraint constraint;
  std::vector<int> witness;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

// Human readable one-liner, e.g. "closure: 2+2=4 is a gap".
std::string describe(const Violation& v);

struct ValidationReport {
  bool valid = true;
  // Sorted by constraint tag, then witness.
  std::vector<Violation> violations;

  bool has(Constraint c) const noexcept;
};

// Checks cardinality, first gap, range, monotonicity and additive closure of
// the complement. Malformed candidates produce violations; only genus < 0
// (DomainError) or genus > kMaxGenus (LimitError) throw.
ValidationReport validate_gap_sequence(std::span<const int> candidate,
                                       int genus);
ValidationReport validate_gap_sequence(const GapSequence& candidate);

// The non-gap side: {0} together with every positive integer outside the gap
// set, stored as a membership window over [0, 4g].
class NumericalSemigroup {
 public:
  // Builds the window of a candidate whose elements are distinct, lie in
  // [1, 2g-1] and number exactly g. Closure is not required, so the result
  // may fail is_closed_under_addition. Throws DomainError otherwise.
  static NumericalSemigroup from_candidate(const GapSequence& candidate);

  int genus() const noexcept { return genus_; }
  // window()[n] is true iff n is a non-gap, for 0 <= n <= 4g.
  const std::vector<bool>& window() const noexcept { return window_; }
  int multiplicity() const noexcept { return multiplicity_; }
  // Largest gap, -1 for genus 0.
  int frobenius() const noexcept { return frobenius_; }

  // Membership for any integer; everything past the window is a member.
  bool contains(int n) const noexcept;

  // Non-gaps in [1, bound].
  std::vector<int> non_gaps_up_to(int bound) const;

  // Re-derives the gap set from the window.
  GapSequence gap_sequence() const;

 private:
  NumericalSemigroup(int genus, std::vector<bool> window);

  int genus_ = 0;
  std::vector<bool> window_;
  int multiplicity_ = 1;
  int frobenius_ = -1;
};

// Complement of a validated gap sequence. DomainError on a candidate.
NumericalSemigroup complement_semigroup(const GapSequence& gaps);

// True iff a + b is a member for all members a, b with a + b <= 2g - 1.
// Together with "everything >= 2g is a member" this gives closure under all
// finite sums.
bool is_closed_under_addition(const NumericalSemigroup& s);

// Least positive non-gap d; 1 for genus 0.
int multiplicity(const NumericalSemigroup& s);

// Largest gap; -1 for genus 0.
int frobenius_number(const NumericalSemigroup& s);

// Members that are not the sum of two positive members, ascending.
std::vector<int> minimal_generators(const NumericalSemigroup& s);

}  // namespace gapseq

#endif  // GAPSEQ_SEMIGROUP_HPP_
