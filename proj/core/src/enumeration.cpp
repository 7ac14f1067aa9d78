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

#include "gapseq/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "access.hpp"

namespace gapseq {

const char* method_name(Method m) noexcept {
  return m == Method::kOracle ? "oracle" : "tree";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "oracle") return Method::kOracle;
  if (name == "tree") return Method::kTree;
  return std::nullopt;
}

namespace {

void check_cap(int genus, int cap, const char* operation, const char* what) {
  if (genus < 0) {
    throw DomainError(std::string(operation) + ": genus must be non-negative, got " +
                      std::to_string(genus));
  }
  if (genus > cap) {
    throw LimitError(std::string(operation) + ": genus " + std::to_string(genus) +
                         " exceeds the " + what + " cap of " + std::to_string(cap),
                     genus, cap);
  }
}

int resolve_workers(int requested) {
  if (requested < 0) {
    throw DomainError("worker count must be non-negative, got " + std::to_string(requested));
  }
  if (requested == 0) {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  return requested;
}

// ---------------------------------------------------------------------------
// Subset oracle

// Visits every (g-1)-subset of {2, ..., 2g-1} in lexicographic order, with
// the gap 1 prepended, and calls `visit` on those that validate.
template <class Visit>
void for_each_valid_subset(int genus, Visit&& visit) {
  if (genus == 0) {
    visit(std::vector<int>{});
    return;
  }
  const int k = genus - 1;
  const int lo = 2;
  const int hi = 2 * genus - 1;
  std::vector<int> candidate(static_cast<std::size_t>(genus));
  candidate[0] = 1;
  for (int i = 0; i < k; ++i) candidate[i + 1] = lo + i;
  while (true) {
    if (validate_gap_sequence(candidate, genus).valid) visit(candidate);
    // Advance the tail (positions 1..k) to the next combination.
    int pos = k;
    while (pos >= 1 && candidate[pos] == hi - (k - pos)) --pos;
    if (pos < 1) break;
    ++candidate[pos];
    for (int j = pos + 1; j <= k; ++j) candidate[j] = candidate[j - 1] + 1;
  }
}

// ---------------------------------------------------------------------------
// Semigroup tree
//
// Each node keeps, for every n below a fixed bound, the number of ways to
// write n = a + b with a <= b both in the semigroup (0 included). Then n is
// a gap iff the count is 0 and a minimal generator iff it is 1. Removing a
// generator x only touches counts at n >= x, where the pairs {x, n - x}
// disappear.

constexpr int kDecompositionCapacity = 3 * kMaxGenus + 2;

struct Node {
  std::array<std::uint8_t, kDecompositionCapacity> decompositions{};
  std::int16_t genus = 0;
  std::int16_t frobenius = -1;
  std::int16_t multiplicity = 1;
};

class TreeWalker {
 public:
  // Children are generated only for nodes of genus < target, whose
  // generators all lie below 3 * target - 1.
  explicit TreeWalker(int target) : target_(target), bound_(3 * target + 2) {}

  int target() const noexcept { return target_; }

  Node root() const {
    Node n;
    for (int i = 0; i < bound_; ++i) {
      n.decompositions[i] = static_cast<std::uint8_t>(i / 2 + 1);
    }
    return n;
  }

  // Calls visit(x) for every minimal generator x > frobenius, ascending.
  // Such generators are at most conductor + multiplicity.
  template <class Visit>
  void for_each_removable(const Node& n, Visit&& visit) const {
    const int first = std::max(n.frobenius + 1, 1);
    const int last = n.frobenius + 1 + n.multiplicity;
    for (int x = first; x <= last; ++x) {
      if (n.decompositions[x] == 1) visit(x);
    }
  }

  int removable_count(const Node& n) const {
    int count = 0;
    for_each_removable(n, [&count](int) { ++count; });
    return count;
  }

  Node child(const Node& parent, int generator) const {
    Node c;
    c.decompositions = parent.decompositions;
    for (int i = generator; i < bound_; ++i) {
      if (parent.decompositions[i - generator] > 0) --c.decompositions[i];
    }
    c.genus = static_cast<std::int16_t>(parent.genus + 1);
    c.frobenius = static_cast<std::int16_t>(generator);
    c.multiplicity = generator == parent.multiplicity
                         ? static_cast<std::int16_t>(parent.multiplicity + 1)
                         : parent.multiplicity;
    return c;
  }

  std::vector<int> gaps(const Node& n) const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n.genus) + 1);
    for (int i = 1; i <= n.frobenius; ++i) {
      if (n.decompositions[i] == 0) out.push_back(i);
    }
    return out;
  }

  std::uint64_t count_below(const Node& start) const {
    if (start.genus == target_) return 1;
    std::uint64_t total = 0;
    std::vector<Node> stack{start};
    while (!stack.empty()) {
      const Node n = stack.back();
      stack.pop_back();
      if (n.genus + 1 == target_) {
        total += static_cast<std::uint64_t>(removable_count(n));
        continue;
      }
      for_each_removable(n, [&](int x) { stack.push_back(child(n, x)); });
    }
    return total;
  }

  void collect_below(const Node& start, std::vector<std::vector<int>>& out) const {
    if (start.genus == target_) {
      out.push_back(gaps(start));
      return;
    }
    std::vector<Node> stack{start};
    while (!stack.empty()) {
      const Node n = stack.back();
      stack.pop_back();
      if (n.genus + 1 == target_) {
        const std::vector<int> base = gaps(n);
        for_each_removable(n, [&](int x) {
          std::vector<int> g = base;
          g.push_back(x);
          out.push_back(std::move(g));
        });
        continue;
      }
      for_each_removable(n, [&](int x) { stack.push_back(child(n, x)); });
    }
  }

  // Breadth-first expansion until there are enough independent subtrees to
  // keep `workers` threads busy, or the target depth is reached.
  std::vector<Node> frontier(int workers) const {
    std::vector<Node> level{root()};
    const std::size_t wanted = static_cast<std::size_t>(workers) * 16;
    while (workers > 1 && level.size() < wanted && level.front().genus < target_) {
      std::vector<Node> next;
      for (const Node& n : level) {
        for_each_removable(n, [&](int x) { next.push_back(child(n, x)); });
      }
      level = std::move(next);
    }
    return level;
  }

 private:
  int target_;
  int bound_;
};

// Runs `work(node, slot)` over the frontier on `workers` threads; each
// worker writes only to its own slot.
template <class Slot, class Work>
std::vector<Slot> run_partitioned(const std::vector<Node>& nodes, int workers, Work&& work) {
  const int used = std::max(1, std::min<int>(workers, static_cast<int>(nodes.size())));
  std::vector<Slot> slots(static_cast<std::size_t>(used));
  if (used == 1) {
    for (const Node& n : nodes) work(n, slots[0]);
    return slots;
  }
  std::atomic<std::size_t> next{0};
  {
    std::vector<std::jthread> threads;
    threads.reserve(static_cast<std::size_t>(used));
    for (int w = 0; w < used; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = next.fetch_add(1); i < nodes.size(); i = next.fetch_add(1)) {
          work(nodes[i], slots[static_cast<std::size_t>(w)]);
        }
      });
    }
  }
  return slots;
}

std::uint64_t tree_count(int genus, int workers) {
  const TreeWalker walker(genus);
  const auto slots = run_partitioned<std::uint64_t>(
      walker.frontier(workers), workers,
      [&walker](const Node& n, std::uint64_t& acc) { acc += walker.count_below(n); });
  std::uint64_t total = 0;
  for (std::uint64_t s : slots) total += s;
  return total;
}

std::vector<std::vector<int>> tree_collect(int genus, int workers) {
  const TreeWalker walker(genus);
  auto slots = run_partitioned<std::vector<std::vector<int>>>(
      walker.frontier(workers), workers,
      [&walker](const Node& n, std::vector<std::vector<int>>& acc) {
        walker.collect_below(n, acc);
      });
  std::vector<std::vector<int>> all;
  for (auto& s : slots) {
    all.insert(all.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

EnumerationResult brute_force_enumerate(int genus) {
  check_cap(genus, kOracleMaxGenus, "brute_force_enumerate", "oracle");
  EnumerationResult result;
  result.genus = genus;
  result.method = Method::kOracle;
  for_each_valid_subset(genus, [&](const std::vector<int>& gaps) {
    result.sequences.push_back(GapSequenceAccess::trusted(genus, gaps));
  });
  result.count = result.sequences.size();
  return result;
}

EnumerationResult tree_enumerate(int genus, const EnumerationOptions& options) {
  check_cap(genus, kTreeMaxGenus, "tree_enumerate", "materialized tree");
  const int workers = resolve_workers(options.workers);
  EnumerationResult result;
  result.genus = genus;
  result.method = Method::kTree;
  auto all = tree_collect(genus, workers);
  result.sequences.reserve(all.size());
  for (auto& gaps : all) {
    result.sequences.push_back(GapSequenceAccess::trusted(genus, std::move(gaps)));
  }
  result.count = result.sequences.size();
  return result;
}

std::uint64_t count_gap_sequences(int genus, Method method, const EnumerationOptions& options) {
  if (method == Method::kOracle) {
    check_cap(genus, kOracleMaxGenus, "count_gap_sequences", "oracle");
    std::uint64_t count = 0;
    for_each_valid_subset(genus, [&count](const std::vector<int>&) { ++count; });
    return count;
  }
  check_cap(genus, kTreeCountMaxGenus, "count_gap_sequences", "tree counting");
  return tree_count(genus, resolve_workers(options.workers));
}

StreamSummary stream_sequences(int genus, const SequenceSink& sink,
                               const EnumerationOptions& options) {
  check_cap(genus, kTreeMaxGenus, "stream_sequences", "materialized tree");
  const int workers = resolve_workers(options.workers);
  // Lexicographic delivery needs the whole level sorted before the first
  // item goes out.
  auto all = tree_collect(genus, workers);
  StreamSummary summary;
  for (auto& gaps : all) {
    try {
      sink(GapSequenceAccess::trusted(genus, std::move(gaps)));
    } catch (const std::exception& e) {
      summary.completed = false;
      summary.error = e.what();
      return summary;
    } catch (...) {
      summary.completed = false;
      summary.error = "unknown sink failure";
      return summary;
    }
    ++summary.delivered;
  }
  return summary;
}

}  // namespace gapseq
