#ifndef YKIT_SUITES_HPP
#define YKIT_SUITES_HPP

// Named verification suites.  Each suite bundles a family of exact checks
// (identity proofs, module constructions, classification comparisons) into
// a deterministic report: same inputs, byte-identical output.  The CLI
// exposes them via `yangian-kit suite <name>`; the individual subcommands
// reuse the same records for their focused runs.

#include <string>
#include <vector>

namespace ykit {

// One verified statement.  `name` is a stable slash-separated identifier
// (suitable for grepping logs), `statement` says what was checked in plain
// words, `witness` carries the failure detail (empty on success).
// `runtime_ms` is always measured but only serialized on request, so that
// default reports stay byte-identical across runs.
struct CheckRecord {
  std::string name;
  std::string statement;
  bool passed = false;
  std::string witness;
  long runtime_ms = -1;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions {
  // Largest family rank n used when a suite iterates over kinds
  // (B1..Bn, C1..Cn, D2..Dn).  The hard ceiling is 4: tensor-square
  // constructions beyond that are out of the supported budget.
  int max_rank = 3;
};

inline constexpr int kMaxRankCeiling = 4;

// The recognized suite names, in canonical order; "all" runs every suite.
const std::vector<std::string>& suite_names();

// Runs one suite.  Throws std::invalid_argument for an unknown name or an
// out-of-range option.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

// Serializations.  JSON is pretty-printed with sorted keys and a trailing
// newline; timings are included only when asked for.
std::string report_to_json(const SuiteReport& report, bool include_timings);
std::string report_to_text(const SuiteReport& report, bool include_timings);

}  // namespace ykit

#endif  // YKIT_SUITES_HPP
