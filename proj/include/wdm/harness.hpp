#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wdm {

enum class Mode { count, aux, twisted, monomials, modp, verify };
enum class Format { csv, json };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);
std::string to_string(Format format);
Format parse_format(const std::string& text);

struct ExperimentConfig {
  Mode mode = Mode::count;
  std::string polynomial;
  std::uint32_t e = 1;
  std::size_t n = 2;
  /// Height bounds; the degree M in monomials mode and the prime p in modp mode.
  std::vector<std::int64_t> B_values;
  /// Fibers per row; 0 for no limit.
  std::uint64_t budget_nodes = 0;
  /// Seconds per row; 0 for no limit.
  double budget_seconds = 0;
  std::uint64_t seed = 0;
  Format format = Format::csv;
  std::string output;
  unsigned threads = 1;
  /// Lowers the 27 d^4 prime threshold of the b(f) estimate.
  std::optional<std::uint64_t> sigma_threshold;
  /// Weights for monomials mode; (e, 1, ..., 1) when empty.
  std::vector<std::uint32_t> weights;
  std::uint64_t M_max = 64;
  /// Off by default so reports are byte-stable.
  bool record_timings = false;

  /// Throws std::invalid_argument unless B_values is nonempty, strictly
  /// increasing and >= 2, and the counts make sense for the mode.
  void validate() const;

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

struct ReportRow {
  std::int64_t B = 0;
  double observed = 0;
  double bound = 0;
  double ratio = 0;
  double runtime_ms = 0;
  bool budget_exhausted = false;
  std::map<std::string, std::string> extras;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct SweepReport {
  ExperimentConfig config;
  std::vector<ReportRow> rows;
  std::optional<double> fitted_exponent;
  std::optional<double> claimed_exponent;
  /// Mode-level facts: hypothesis checks, b(f) estimate, constants.
  std::map<std::string, std::string> summary;

  friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Runs one row per B, smallest first. Throws HypothesisError when the
/// polynomial falls outside the mode's hypotheses; a row that exhausts its
/// budget is marked and the sweep continues.
SweepReport run_experiment(const ExperimentConfig& cfg);

/// Least-squares slope of log N against log B. Needs two distinct B and N > 0.
double fit_exponent(const std::vector<std::pair<double, double>>& series);

/// "a:b:step" (additive), "a:b:xK" (multiplicative) or a single integer.
std::vector<std::int64_t> parse_B_values(const std::string& text);

/// CSV columns B,observed,bound,ratio,runtime_ms; JSON carries everything.
std::string render_report(const SweepReport& report, Format format);
void emit_report(const SweepReport& report, Format format, std::ostream& out);
/// Writes to `path`; throws std::runtime_error on I/O failure.
void emit_report(const SweepReport& report, Format format, const std::string& path);
SweepReport parse_report_json(const std::string& text);

/// 0 success, 1 hypothesis failure, 2 every row out of budget, 3 usage error.
enum ExitCode : int { exit_ok = 0, exit_hypothesis = 1, exit_budget = 2, exit_usage = 3 };

}  // namespace wdm
