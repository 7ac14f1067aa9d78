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

#ifndef GAPSEQ_RR_LEDGER_HPP_
#define GAPSEQ_RR_LEDGER_HPP_

#include <vector>

#include "gapseq/semigroup.hpp"

namespace gapseq {

// Dimensions along the divisors nP, n = 0, ..., 2g:
//   ell[n]   = dim H^0(X, O_{nP})       functions with a pole of order <= n
//   omega[n] = dim H^0(X, Omega_{-nP})  differentials vanishing to order >= n
// Only dimensions are modelled; no sheaf or divisor data is carried.
struct DimensionLedger {
  int genus = 0;
  std::vector<int> ell;
  std::vector<int> omega;
  int canonical_degree = -2;
};

// ell[n] = 1 + #non-gaps in [1, n] and omega[n] = #gaps in (n, 2g-1], each
// counted directly from the gap set, so the Riemann-Roch relation between
// them is a check rather than a definition. DomainError on a candidate.
DimensionLedger dimension_ledger(const GapSequence& gaps);

// Checks the ledger against everything the dimension count must satisfy:
//   ell[0] = 1, omega[0] = g, omega[2g-1] = 0, canonical degree 2g-2,
//   ell[n] = n + 1 - g + omega[n] for every n,
//   unit steps with exactly one of ell/omega moving at each n,
//   exactly g plateaus of ell on [1, 2g-1], forming a valid gap sequence.
ValidationReport verify_riemann_roch(const DimensionLedger& ledger);

// As above, and additionally requires the plateau set to equal `gaps`.
ValidationReport verify_riemann_roch(const DimensionLedger& ledger,
                                     const GapSequence& gaps);

// deg K = 2g - 2.
constexpr int canonical_degree(int genus) noexcept { return 2 * genus - 2; }

}  // namespace gapseq

#endif  // GAPSEQ_RR_LEDGER_HPP_
