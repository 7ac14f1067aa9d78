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

#include "gapseq/errors.hpp"

#include <string>

namespace gapseq {

LimitError::LimitError(const std::string& what, int genus, int cap)
    : std::out_of_range(what), genus_(genus), cap_(cap) {}

void check_genus(int genus, const char* operation) {
  if (genus < 0) {
    throw DomainError(std::string(operation) + ": genus must be non-negative, got " +
                      std::to_string(genus));
  }
  if (genus > kMaxGenus) {
    throw LimitError(std::string(operation) + ": genus " + std::to_string(genus) +
                         " exceeds the supported maximum " + std::to_string(kMaxGenus),
                     genus, kMaxGenus);
  }
}

}  // namespace gapseq
