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

#ifndef GAPSEQ_STRUCTURE_HPP_
#define GAPSEQ_STRUCTURE_HPP_

#include <cstdint>
#include <vector>

#include "gapseq/semigroup.hpp"

namespace gapseq {

// Gaps in residue class `residue` modulo d are exactly
// residue, residue + d, ..., residue + length * d.
struct ApRun {
  int residue = 0;
  int length = 0;

  friend bool operator==(const ApRun&, const ApRun&) = default;
};

struct ApDecomposition {
  int multiplicity = 0;
  // One run per residue 1, ..., d-1, ascending.
  std::vector<ApRun> runs;

  // Gap set regenerated from the runs, ascending.
  std::vector<int> gaps() const;
};

// DomainError unless `gaps` is validated with genus >= 1.
ApDecomposition ap_decomposition(const GapSequence& gaps);

enum class Classification : std::uint8_t { kHyperelliptic, kExceptional, kOrdinary };

const char* classification_name(Classification c) noexcept;

// Hyperelliptic takes precedence over exceptional (they coincide at g = 2).
// DomainError unless validated with genus >= 1.
Classification classify(const GapSequence& gaps);

// {1, 3, ..., 2g-1}; DomainError for g < 1.
GapSequence hyperelliptic_sequence(int genus);

// {1, ..., g-1} u {g+1}; DomainError for g < 2, where the formula does not
// start at 1.
GapSequence exceptional_sequence(int genus);

}  // namespace gapseq

#endif  // GAPSEQ_STRUCTURE_HPP_
