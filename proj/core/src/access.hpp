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

#ifndef GAPSEQ_SRC_ACCESS_HPP_
#define GAPSEQ_SRC_ACCESS_HPP_

#include <utility>
#include <vector>

#include "gapseq/semigroup.hpp"

namespace gapseq {

// Library-internal constructor for sequences whose validity is already
// established by the caller (enumeration, named families).
struct GapSequenceAccess {
  static GapSequence trusted(int genus, std::vector<int> gaps) {
    return GapSequence(genus, std::move(gaps), true);
  }
};

}  // namespace gapseq

#endif  // GAPSEQ_SRC_ACCESS_HPP_
