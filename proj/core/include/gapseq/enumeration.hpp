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

#ifndef GAPSEQ_ENUMERATION_HPP_
#define GAPSEQ_ENUMERATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gapseq/semigroup.hpp"

namespace gapseq {

enum class Method : std::uint8_t { kOracle, kTree };

const char* method_name(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

// Subset oracle: C(2g-2, g-1) candidates, so refuse beyond this.
inline constexpr int kOracleMaxGenus = 20;
// Tree enumeration with materialized sequences.
inline constexpr int kTreeMaxGenus = 40;
// Tree enumeration in counting-only mode.
inline constexpr int kTreeCountMaxGenus = kMaxGenus;

struct EnumerationOptions {
  // Worker threads for the tree method; 0 picks hardware concurrency.
  // Results never depend on this value.
  int workers = 1;
};

struct EnumerationResult {
  int genus = 0;
  Method method = Method::kOracle;
  // Validated, strictly increasing in lexicographic order of gap tuples.
  std::vector<GapSequence> sequences;
  std::uint64_t count = 0;
};

// Tries every (g-1)-subset S of {2, ..., 2g-1} and keeps {1} u S when
// validate_gap_sequence accepts it. LimitError above kOracleMaxGenus.
EnumerationResult brute_force_enumerate(int genus);

// Walks the semigroup tree from N down to depth `genus`: the children of a
// semigroup are obtained by removing one minimal generator larger than its
// Frobenius number. Output order matches brute_force_enumerate.
// LimitError above kTreeMaxGenus.
EnumerationResult tree_enumerate(int genus, const EnumerationOptions& options = {});

// Number of gap sequences of the given genus without materializing them.
// Caps: kOracleMaxGenus for the oracle, kTreeCountMaxGenus for the tree.
std::uint64_t count_gap_sequences(int genus, Method method,
                                  const EnumerationOptions& options = {});

using SequenceSink = std::function<void(const GapSequence&)>;

struct StreamSummary {
  std::uint64_t delivered = 0;
  bool completed = true;
  // what() of the exception that stopped the stream, if any.
  std::string error;
};

// Hands every gap sequence of the genus to `sink` once, in lexicographic
// order, using the tree method. An exception escaping the sink stops the
// stream; the summary then reports how many sequences were delivered.
StreamSummary stream_sequences(int genus, const SequenceSink& sink,
                               const EnumerationOptions& options = {});

}  // namespace gapseq

#endif  // GAPSEQ_ENUMERATION_HPP_
