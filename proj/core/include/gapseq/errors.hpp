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

#ifndef GAPSEQ_ERRORS_HPP_
#define GAPSEQ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gapseq {

// Largest genus any operation accepts. Enumeration caps are lower.
inline constexpr int kMaxGenus = 64;

// Raised when an argument lies outside an operation's mathematical domain
// (negative genus, an unvalidated sequence where a validated one is
// required, exceptional_sequence(1), ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a genus exceeds a resource cap. The message names the cap.
class LimitError : public std::out_of_range {
 public:
  LimitError(const std::string& what, int genus, int cap);

  int genus() const noexcept { return genus_; }
  int cap() const noexcept { return cap_; }

 private:
  int genus_;
  int cap_;
};

// Throws DomainError for genus < 0 and LimitError for genus > kMaxGenus.
void check_genus(int genus, const char* operation);

}  // namespace gapseq

#endif  // GAPSEQ_ERRORS_HPP_
