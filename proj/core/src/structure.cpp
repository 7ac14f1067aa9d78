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

#include "gapseq/structure.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "access.hpp"

namespace gapseq {

namespace {

void require_validated_positive(const GapSequence& gaps, const char* operation) {
  if (!gaps.is_validated()) {
    throw DomainError(std::string(operation) + ": gap sequence has not been validated");
  }
  if (gaps.genus() < 1) {
    throw DomainError(std::string(operation) + ": requires genus >= 1");
  }
}

}  // namespace

std::vector<int> ApDecomposition::gaps() const {
  std::vector<int> out;
  for (const ApRun& run : runs) {
    for (int k = 0; k <= run.length; ++k) out.push_back(run.residue + k * multiplicity);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ApDecomposition ap_decomposition(const GapSequence& gaps) {
  require_validated_positive(gaps, "ap_decomposition");
  const NumericalSemigroup s = complement_semigroup(gaps);
  ApDecomposition out;
  out.multiplicity = s.multiplicity();
  const int d = out.multiplicity;
  // Every residue below d is a gap, and a gap n > d has n - d a gap, so each
  // class is an unbroken progression starting at its residue.
  for (int j = 1; j < d; ++j) {
    int length = 0;
    while (!s.contains(j + (length + 1) * d)) ++length;
    out.runs.push_back({j, length});
  }
  return out;
}

const char* classification_name(Classification c) noexcept {
  switch (c) {
    case Classification::kHyperelliptic: return "hyperelliptic";
    case Classification::kExceptional: return "exceptional";
    case Classification::kOrdinary: return "ordinary";
  }
  return "unknown";
}

Classification classify(const GapSequence& gaps) {
  require_validated_positive(gaps, "classify");
  const int g = gaps.genus();
  if (gaps == hyperelliptic_sequence(g)) return Classification::kHyperelliptic;
  if (g >= 2 && gaps == exceptional_sequence(g)) return Classification::kExceptional;
  return Classification::kOrdinary;
}

GapSequence hyperelliptic_sequence(int genus) {
  check_genus(genus, "hyperelliptic_sequence");
  if (genus < 1) throw DomainError("hyperelliptic_sequence: requires genus >= 1");
  std::vector<int> gaps;
  for (int k = 0; k < genus; ++k) gaps.push_back(2 * k + 1);
  return GapSequenceAccess::trusted(genus, std::move(gaps));
}

GapSequence exceptional_sequence(int genus) {
  check_genus(genus, "exceptional_sequence");
  if (genus < 2) {
    throw DomainError("exceptional_sequence: requires genus >= 2 (at genus 1 the set {2} "
                      "does not contain the gap 1)");
  }
  std::vector<int> gaps;
  for (int n = 1; n < genus; ++n) gaps.push_back(n);
  gaps.push_back(genus + 1);
  return GapSequenceAccess::trusted(genus, std::move(gaps));
}

}  // namespace gapseq
