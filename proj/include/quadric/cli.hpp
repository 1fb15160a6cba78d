#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "quadric/reduce.hpp"
#include "quadric/report.hpp"

namespace quadric::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2, kInconclusive = 3 };

struct Command {
  std::string verb;
  /// Raw expression texts; parsed by run().
  std::vector<std::string> inputs;
  SearchBudget budget;
  bool json = false;
  /// Add timing_ms to the JSON report.
  bool timing = false;
  /// nf: reduce modulo q instead of q - 1.
  bool graded = false;
  /// pjac: compute j_k(f1, f2) instead of j(f1, f2, f3).
  std::optional<int> k;
  /// decompose / wild-check: use sigma_n instead of an input.
  std::optional<unsigned> sigma;
};

struct Report {
  std::string verb;
  Json inputs = Json::array();
  /// Result payload, or an {"error": ...} object.
  Json result = Json::object();
  int exit_code = kOk;
  double timing_ms = 0.0;

  /// Full report; the timing field is included on request only so that
  /// payloads of repeated runs can be compared byte for byte.
  Json to_json(const SearchBudget& budget, bool with_timing) const;
};

const std::vector<std::string>& verbs();

/// Dispatches one command. Library errors are caught and turned into
/// structured error payloads with the matching exit code.
Report run(const Command& command);

/// Plain-text rendering of a report, one `key: value` line per field.
std::string render_text(const Report& report);

/// Full command-line entry: argument parsing, dispatch, printing.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadric::cli
