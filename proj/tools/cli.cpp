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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gapseq/enumeration.hpp"
#include "gapseq/rr_ledger.hpp"
#include "gapseq/semigroup.hpp"
#include "gapseq/structure.hpp"
#include "output.hpp"

namespace gapseq::cli {

namespace {

// Signals a non-zero exit after the message has been written.
struct Exit {
  int code;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int env_cap(std::ostream& err) {
  const char* raw = std::getenv(kMaxGenusEnv);
  if (raw == nullptr || *raw == '\0') return kMaxGenus;
  const std::string_view text = trim(raw);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0) {
    err << "error: " << kMaxGenusEnv << " must be a non-negative integer, got '" << raw << "'\n";
    throw Exit{kExitUsage};
  }
  return value;
}

// Enforces the genus bounds shared by every subcommand.
void check_genus_arg(int genus, int hard_cap, const char* what, std::ostream& err) {
  if (genus < 0) {
    err << "error: genus must be non-negative, got " << genus << "\n";
    throw Exit{kExitUsage};
  }
  const int env = env_cap(err);
  const int cap = std::min(hard_cap, env);
  if (genus > cap) {
    err << "error: genus " << genus << " exceeds the " << what << " cap of " << cap;
    if (env < hard_cap) err << " (lowered by " << kMaxGenusEnv << ")";
    err << "\n";
    throw Exit{kExitCap};
  }
}

struct SequenceInput {
  std::string gaps;
  int genus = 0;
  int hyperelliptic = 0;
  int exceptional = 0;
  CLI::Option* gaps_opt = nullptr;
  CLI::Option* genus_opt = nullptr;
  CLI::Option* hyper_opt = nullptr;
  CLI::Option* exc_opt = nullptr;

  void attach(CLI::App* cmd) {
    gaps_opt = cmd->add_option("--gaps", gaps, "Comma-separated gap list, e.g. 1,2,5");
    genus_opt = cmd->add_option("--genus", genus, "Genus of the gap list");
    hyper_opt = cmd->add_option("--hyperelliptic", hyperelliptic,
                                "Use the hyperelliptic sequence {1,3,...,2g-1} of this genus");
    exc_opt = cmd->add_option("--exceptional", exceptional,
                              "Use the exceptional sequence {1,...,g-1,g+1} of this genus");
    hyper_opt->excludes(gaps_opt)->excludes(genus_opt);
    exc_opt->excludes(gaps_opt)->excludes(genus_opt)->excludes(hyper_opt);
  }

  // The sequence named on the command line, validated or not.
  GapSequence resolve(std::ostream& err) const {
    if (hyper_opt->count() > 0) {
      check_genus_arg(hyperelliptic, kMaxGenus, "genus", err);
      if (hyperelliptic < 1) {
        err << "error: --hyperelliptic requires genus >= 1\n";
        throw Exit{kExitUsage};
      }
      return hyperelliptic_sequence(hyperelliptic);
    }
    if (exc_opt->count() > 0) {
      check_genus_arg(exceptional, kMaxGenus, "genus", err);
      if (exceptional < 2) {
        err << "error: --exceptional requires genus >= 2\n";
        throw Exit{kExitUsage};
      }
      return exceptional_sequence(exceptional);
    }
    if (genus_opt->count() == 0) {
      err << "error: --genus is required with --gaps\n";
      throw Exit{kExitUsage};
    }
    check_genus_arg(genus, kMaxGenus, "genus", err);
    auto parsed = parse_gap_list(gaps);
    if (!parsed) {
      err << "error: cannot parse --gaps '" << gaps << "'\n";
      throw Exit{kExitUsage};
    }
    if (gaps_opt->count() == 0 && genus != 0) {
      err << "error: one of --gaps, --hyperelliptic, --exceptional is required\n";
      throw Exit{kExitUsage};
    }
    return GapSequence(genus, std::move(*parsed));
  }

  // resolve() followed by validation; invalid sequences end the command
  // with exit 1 after listing the violations on `err`.
  GapSequence resolve_validated(std::ostream& err) const {
    GapSequence candidate = resolve(err);
    if (candidate.is_validated()) return candidate;
    const ValidationReport report = validate_gap_sequence(candidate);
    if (!report.valid) {
      err << "error: not a valid gap sequence of genus " << candidate.genus() << "\n";
      for (const Violation& v : report.violations) err << "  " << describe(v) << "\n";
      throw Exit{kExitInvalid};
    }
    return GapSequence::validated(candidate.genus(), candidate.gaps());
  }
};

void emit_record(const OutputRecord& record, const std::string& format, bool detailed,
                 std::ostream& out) {
  if (format == "json") {
    out << to_json(record).dump() << "\n";
  } else if (format == "csv") {
    out << to_csv(record) << "\n";
  } else {
    out << to_plain(record, detailed) << "\n";
  }
}

void emit_count(std::uint64_t count, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << nlohmann::json{{"count", count}}.dump() << "\n";
  } else {
    out << "count=" << count << "\n";
  }
}

int cmd_enumerate(int genus, Method method, const std::string& format, bool include_ledger,
                  int workers, std::ostream& out, std::ostream& err) {
  check_genus_arg(genus, method == Method::kOracle ? kOracleMaxGenus : kTreeMaxGenus,
                  method == Method::kOracle ? "oracle" : "materialized tree", err);
  if (format == "csv") out << csv_header(include_ledger) << "\n";
  std::uint64_t count = 0;
  if (method == Method::kOracle) {
    const EnumerationResult result = brute_force_enumerate(genus);
    for (const GapSequence& seq : result.sequences) {
      emit_record(make_record(seq, include_ledger), format, false, out);
    }
    count = result.count;
  } else {
    const StreamSummary summary = stream_sequences(
        genus,
        [&](const GapSequence& seq) {
          emit_record(make_record(seq, include_ledger), format, false, out);
        },
        EnumerationOptions{workers});
    if (!summary.completed) {
      err << "error: output aborted after " << summary.delivered << " records: "
          << summary.error << "\n";
      return kExitInvalid;
    }
    count = summary.delivered;
  }
  emit_count(count, format, out);
  return kExitOk;
}

int cmd_count(int genus, Method method, int workers, std::ostream& out, std::ostream& err) {
  check_genus_arg(genus, method == Method::kOracle ? kOracleMaxGenus : kTreeCountMaxGenus,
                  method == Method::kOracle ? "oracle" : "tree counting", err);
  out << count_gap_sequences(genus, method, EnumerationOptions{workers}) << "\n";
  return kExitOk;
}

int cmd_validate(const SequenceInput& input, const std::string& format, std::ostream& out,
                 std::ostream& err) {
  const GapSequence candidate = input.resolve(err);
  const ValidationReport report = validate_gap_sequence(candidate);
  if (format == "json") {
    out << to_json(report).dump() << "\n";
  } else {
    out << (report.valid ? "valid" : "invalid") << "\n";
    for (const Violation& v : report.violations) out << describe(v) << "\n";
  }
  return report.valid ? kExitOk : kExitInvalid;
}

int cmd_analyze(const SequenceInput& input, const std::string& format, bool include_ledger,
                std::ostream& out, std::ostream& err) {
  const GapSequence seq = input.resolve_validated(err);
  if (format == "csv") out << csv_header(include_ledger) << "\n";
  emit_record(make_record(seq, include_ledger), format, true, out);
  return kExitOk;
}

int cmd_ledger(const SequenceInput& input, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const GapSequence seq = input.resolve_validated(err);
  const DimensionLedger ledger = dimension_ledger(seq);
  const ValidationReport report = verify_riemann_roch(ledger, seq);
  const int rows = static_cast<int>(ledger.ell.size());
  if (format == "json") {
    nlohmann::json j = to_json(ledger);
    j["gaps"] = seq.gaps();
    j["verification"] = to_json(report);
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "n,ell,i,gap\n";
    for (int n = 0; n < rows; ++n) {
      out << n << ',' << ledger.ell[n] << ',' << ledger.omega[n] << ','
          << (seq.contains(n) ? 1 : 0) << "\n";
    }
    out << "verification=" << (report.valid ? "valid" : "invalid") << "\n";
  } else {
    out << "genus=" << ledger.genus << " canonical_degree=" << ledger.canonical_degree << "\n";
    out << "   n  ell    i  gap\n";
    for (int n = 0; n < rows; ++n) {
      char line[64];
      std::snprintf(line, sizeof line, "%4d %4d %4d%s\n", n, ledger.ell[n], ledger.omega[n],
                    seq.contains(n) ? "    *" : "");
      out << line;
    }
    out << "verification: " << (report.valid ? "valid" : "invalid") << "\n";
    for (const Violation& v : report.violations) out << describe(v) << "\n";
  }
  return report.valid ? kExitOk : kExitInvalid;
}

}  // namespace

std::optional<std::vector<int>> parse_gap_list(std::string_view text) {
  std::vector<int> values;
  if (trim(text).empty()) return values;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      return std::nullopt;
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerate, validate and analyze Weierstrass gap sequences", "gapseq"};
  app.require_subcommand(1);

  int genus = 0;
  std::string method_name_arg = "tree";
  std::string format = "plain";
  bool include_ledger = false;
  int workers = 1;
  const auto methods = CLI::IsMember({"oracle", "tree"});
  const auto formats = CLI::IsMember({"plain", "json", "csv"});

  auto* enumerate = app.add_subcommand("enumerate", "List every gap sequence of a genus");
  enumerate->add_option("--genus", genus, "Genus")->required();
  enumerate->add_option("--method", method_name_arg, "oracle | tree")->check(methods);
  enumerate->add_option("--format", format, "plain | json | csv")->check(formats);
  enumerate->add_flag("--include-ledger", include_ledger, "Attach the dimension ledger");
  enumerate->add_option("--workers", workers, "Tree worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);

  auto* count = app.add_subcommand("count", "Count the gap sequences of a genus");
  count->add_option("--genus", genus, "Genus")->required();
  count->add_option("--method", method_name_arg, "oracle | tree")->check(methods);
  count->add_option("--workers", workers, "Tree worker threads (0 = auto)")
      ->check(CLI::NonNegativeNumber);

  SequenceInput validate_in;
  auto* validate = app.add_subcommand("validate", "Check a candidate gap sequence");
  validate_in.attach(validate);
  validate->add_option("--format", format, "plain | json")
      ->check(CLI::IsMember({"plain", "json"}));

  SequenceInput analyze_in;
  auto* analyze = app.add_subcommand("analyze", "Multiplicity, classification and runs");
  analyze_in.attach(analyze);
  analyze->add_option("--format", format, "plain | json | csv")->check(formats);
  analyze->add_flag("--include-ledger", include_ledger, "Attach the dimension ledger");

  SequenceInput ledger_in;
  auto* ledger = app.add_subcommand("ledger", "Dimension staircase l(n), i(n) for n = 0..2g");
  ledger_in.attach(ledger);
  ledger->add_option("--format", format, "plain | json | csv")->check(formats);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("gapseq");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Method method = parse_method(method_name_arg).value_or(Method::kTree);
  try {
    if (enumerate->parsed()) {
      return cmd_enumerate(genus, method, format, include_ledger, workers, out, err);
    }
    if (count->parsed()) return cmd_count(genus, method, workers, out, err);
    if (validate->parsed()) return cmd_validate(validate_in, format, out, err);
    if (analyze->parsed()) return cmd_analyze(analyze_in, format, include_ledger, out, err);
    if (ledger->parsed()) return cmd_ledger(ledger_in, format, out, err);
  } catch (const Exit& e) {
    return e.code;
  } catch (const LimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gapseq::cli
