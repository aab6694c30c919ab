#include "wdm/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "wdm/cover.hpp"
#include "wdm/detmethod.hpp"
#include "wdm/enumeration.hpp"
#include "wdm/irreducibility.hpp"
#include "wdm/text.hpp"
#include "wdm/twisted.hpp"

namespace wdm {

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

CoverPolynomial parse_cover(const ExperimentConfig& cfg) {
  const IntPolynomial F = parse_poly(cfg.polynomial, cfg.n + 1);
  return split_cover_form(F, cfg.n, cfg.e, true);
}

/// Records the absolute irreducibility of F_top and rejects inputs outside
/// the counting theorems.
void require_irreducible_top(const CoverPolynomial& F, const ExperimentConfig& cfg, SweepReport& report) {
  const IrreducibilityResult top = absolutely_irreducible(F.top, 0, cfg.seed);
  report.summary["F_top_absolutely_irreducible"] = yes_no(top.absolutely_irreducible);
  report.summary["F_top_test"] = top.randomized ? "randomized plane sections" : "exact";
  if (!top.absolutely_irreducible)
    throw HypothesisError(
        "F_top is not absolutely irreducible; the point-count bounds do not apply to such covers");
}

CountOptions count_options(const ExperimentConfig& cfg, bool retain) {
  CountOptions opts;
  opts.retain = retain;
  opts.threads = cfg.threads;
  opts.node_budget = cfg.budget_nodes;
  opts.time_budget = cfg.budget_seconds;
  return opts;
}

void finish_ratio(ReportRow& row) { row.ratio = row.bound > 0 ? row.observed / row.bound : 0; }

struct ClaimedShape {
  double exponent;
  int log_power;
};

ClaimedShape claimed_shape(std::uint32_t d, std::size_t n) {
  const double nn = static_cast<double>(n);
  if (d >= 5) return {nn - 1, 0};
  if (d == 4) return {nn - 1, 1};
  return {nn - 2 + 2 / std::sqrt(static_cast<double>(d)), 1};
}

void run_count(const ExperimentConfig& cfg, SweepReport& report) {
  const CoverPolynomial F = parse_cover(cfg);
  require_irreducible_top(F, cfg, report);
  const ClaimedShape shape = claimed_shape(F.d, F.n);
  report.claimed_exponent = shape.exponent;
  report.summary["log_power"] = std::to_string(shape.log_power);
  for (std::int64_t B : cfg.B_values) {
    ReportRow row;
    row.B = B;
    const auto start = Clock::now();
    const double b = static_cast<double>(B);
    row.bound = std::pow(b, shape.exponent) * std::pow(std::log(b), shape.log_power);
    try {
      const CountResult res = count_affine(F, WBox{F.e, B, F.n}, count_options(cfg, false));
      row.observed = static_cast<double>(res.n_aff);
      row.extras["n_cover"] = std::to_string(res.n_cover);
      const SchwarzZippel sz =
          schwarz_zippel_check(static_cast<std::uint64_t>(F.d) * F.e, F.n, B, Integer(static_cast<unsigned long>(res.n_aff)));
      row.extras["schwarz_zippel_bound"] = sz.bound.get_str();
      row.extras["schwarz_zippel_holds"] = yes_no(sz.holds);
      finish_ratio(row);
    } catch (const BudgetExceeded& err) {
      row.budget_exhausted = true;
      row.extras["budget"] = err.what();
    }
    if (cfg.record_timings) row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(std::move(row));
  }
}

void run_aux(const ExperimentConfig& cfg, SweepReport& report) {
  const CoverPolynomial F = parse_cover(cfg);
  require_irreducible_top(F, cfg, report);
  const IntPolynomial f = F.full();
  const std::uint64_t weighted_d = static_cast<std::uint64_t>(F.d) * F.e;
  const std::uint64_t threshold = cfg.sigma_threshold.value_or(27 * weighted_d * weighted_d * weighted_d * weighted_d);
  const BfEstimate bf = b_f_estimate(f, weighted_d, threshold + 1, threshold + 200, threshold, cfg.seed);
  report.summary["b_f_threshold"] = std::to_string(bf.threshold);
  report.summary["b_f_tested_primes"] = std::to_string(bf.tested_primes.size());
  report.summary["b_f_failing_primes"] = std::to_string(bf.failing_primes.size());
  report.summary["b_f_skipped_primes"] = std::to_string(bf.skipped_primes.size());
  report.summary["log_b_estimate"] = fmt(bf.log_b);
  report.summary["log_b_upper_bound"] = fmt(bf.upper_bound);
  report.summary["b_f_partial"] = yes_no(bf.partial);

  BoundKind kind = BoundKind::general_affine;
  if (F.n == 1) kind = BoundKind::curve;
  if (F.n == 2) kind = BoundKind::surface;
  report.summary["bound_kind"] = to_string(kind);
  const WeightVector w = F.weights();
  for (std::int64_t B : cfg.B_values) {
    ReportRow row;
    row.B = B;
    const auto start = Clock::now();
    BoundParams params;
    params.d = kind == BoundKind::general_affine ? static_cast<double>(weighted_d) : F.d;
    params.e = F.e;
    params.n = static_cast<double>(F.n + 1);
    params.B = static_cast<double>(B);
    params.norm_f = F.top.norm().get_d();
    params.b_f = std::exp(bf.log_b);
    row.bound = theoretical_bounds(kind, params);
    try {
      const CountResult pts = count_affine(F, WBox{F.e, B, F.n}, count_options(cfg, true));
      AuxOptions opts;
      opts.mode = AuxMode::affine;
      opts.M_max = cfg.M_max;
      opts.theoretical_M = row.bound;
      const AuxSearchResult aux = find_aux_poly(f, w, pts.points, opts);
      row.observed = static_cast<double>(aux.M_found);
      row.extras["points"] = std::to_string(aux.points_caught);
      row.extras["kernel_dim"] = std::to_string(aux.kernel_dim);
      row.extras["g"] = to_string(aux.g, VarNames::cover(F.n));
      row.extras["f_divides_g"] = yes_no(divides(f, aux.g));
      finish_ratio(row);
    } catch (const BudgetExceeded& err) {
      row.budget_exhausted = true;
      row.extras["budget"] = err.what();
    }
    if (cfg.record_timings) row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(std::move(row));
  }
}

void run_twisted(const ExperimentConfig& cfg, SweepReport& report) {
  if (cfg.n != 2) throw std::invalid_argument("twisted mode needs n = 2");
  const CoverPolynomial F = parse_cover(cfg);
  require_irreducible_top(F, cfg, report);
  report.claimed_exponent = 1;
  for (std::int64_t B : cfg.B_values) {
    ReportRow row;
    row.B = B;
    const auto start = Clock::now();
    try {
      const std::vector<TwistedLine> lines = discover_twisted_lines(F, B);
      const TwistedAggregate agg = aggregate_twisted(F, B, lines);
      std::size_t violations = 0;
      for (const TwistedLine& line : lines) {
        const LineCount c = count_on_twisted_line(line, F.e, B);
        if (static_cast<double>(c.exact) > c.bound) ++violations;
      }
      const std::size_t directions = enumerate_directions(F.top, F.e, B, cfg.threads).size();
      row.observed = static_cast<double>(agg.total);
      row.bound = agg.bound;
      row.extras["lines"] = std::to_string(agg.distinct_lines);
      row.extras["directions"] = std::to_string(directions);
      row.extras["direction_envelope"] = fmt(direction_envelope(F.e, F.d, static_cast<double>(B)));
      row.extras["per_direction_ok"] = yes_no(agg.per_direction_ok);
      row.extras["line_bound_violations"] = std::to_string(violations);
      finish_ratio(row);
    } catch (const BudgetExceeded& err) {
      row.budget_exhausted = true;
      row.extras["budget"] = err.what();
    }
    if (cfg.record_timings) row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(std::move(row));
  }
}

void run_monomials(const ExperimentConfig& cfg, SweepReport& report) {
  const WeightVector w = cfg.weights.empty() ? WeightVector::cover(cfg.e, cfg.n) : WeightVector(cfg.weights);
  const double n = static_cast<double>(w.size() - 1);
  report.claimed_exponent = n;
  std::string ws;
  for (std::uint32_t x : w.values()) ws += (ws.empty() ? "" : ",") + std::to_string(x);
  report.summary["weights"] = ws;
  for (std::int64_t M : cfg.B_values) {
    ReportRow row;
    row.B = M;
    const auto start = Clock::now();
    const MonomialCount c = count_monomials(w, static_cast<std::uint64_t>(M), true);
    row.observed = c.exact.get_d();
    row.bound = c.leading_term.get_d();
    finish_ratio(row);
    row.extras["basis_match"] = yes_no(c.basis->monomials.size() == c.exact);
    row.extras["relative_deviation"] = fmt(c.relative_deviation);
    row.extras["envelope"] = fmt(2 * n * static_cast<double>(w.product()) / static_cast<double>(M));
    row.extras["second_order_ratio"] = fmt(c.second_order_ratio);
    row.extras["lcm_divides_M"] = yes_no(static_cast<std::uint64_t>(M) % w.lcm() == 0);
    if (cfg.record_timings) row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(std::move(row));
  }
}

void run_modp(const ExperimentConfig& cfg, SweepReport& report) {
  const IntPolynomial f = parse_poly(cfg.polynomial, cfg.n + 1);
  if (f.is_zero() || f.is_constant()) throw HypothesisError("mod-p counts need a nonconstant polynomial");
  const double d = static_cast<double>(f.total_degree());
  const std::uint64_t budget = cfg.budget_nodes == 0 ? 100'000'000 : cfg.budget_nodes;
  for (std::int64_t B : cfg.B_values) {
    ReportRow row;
    row.B = B;
    const auto start = Clock::now();
    const std::uint64_t p = static_cast<std::uint64_t>(B);
    try {
      const ModPCount c = count_points_mod_p(f, p, CountMode::affine_cone, budget, cfg.threads);
      const double k = static_cast<double>(c.dimension);
      const double pd = static_cast<double>(p);
      row.observed = static_cast<double>(c.count);
      row.bound = std::pow(pd, k - 1);
      finish_ratio(row);
      const double deviation = std::fabs(row.observed - row.bound);
      row.extras["deviation"] = fmt(deviation);
      row.extras["band_constant"] = fmt(deviation / (d * d * std::pow(pd, k - 1.5)));
      report.claimed_exponent = k - 1;
    } catch (const BudgetExceeded& err) {
      row.budget_exhausted = true;
      row.extras["budget"] = err.what();
    }
    if (cfg.record_timings) row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(std::move(row));
  }
}

void run_verify(const ExperimentConfig& cfg, SweepReport& report) {
  const CoverPolynomial F = parse_cover(cfg);
  require_irreducible_top(F, cfg, report);
  report.claimed_exponent = static_cast<double>(F.n);
  bool monotone = true;
  std::optional<CountResult> previous;
  for (std::int64_t B : cfg.B_values) {
    ReportRow row;
    row.B = B;
    const auto start = Clock::now();
    try {
      const CountResult res = count_affine(F, WBox{F.e, B, F.n}, count_options(cfg, false));
      const SchwarzZippel sz =
          schwarz_zippel_check(static_cast<std::uint64_t>(F.d) * F.e, F.n, B, Integer(static_cast<unsigned long>(res.n_aff)));
      row.observed = static_cast<double>(res.n_aff);
      row.bound = sz.bound.get_d();
      finish_ratio(row);
      row.extras["n_cover"] = std::to_string(res.n_cover);
      row.extras["schwarz_zippel_holds"] = yes_no(sz.holds);
      if (previous) monotone = monotone && previous->n_aff <= res.n_aff && previous->n_cover <= res.n_cover;
      previous = res;
    } catch (const BudgetExceeded& err) {
      row.budget_exhausted = true;
      row.extras["budget"] = err.what();
    }
    if (cfg.record_timings) row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(std::move(row));
  }
  report.summary["monotone_in_B"] = yes_no(monotone);
}

}  // namespace

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::count: return "count";
    case Mode::aux: return "aux";
    case Mode::twisted: return "twisted";
    case Mode::monomials: return "monomials";
    case Mode::modp: return "modp";
    case Mode::verify: return "verify";
  }
  return "?";
}

Mode parse_mode(const std::string& text) {
  for (Mode m : {Mode::count, Mode::aux, Mode::twisted, Mode::monomials, Mode::modp, Mode::verify})
    if (to_string(m) == text) return m;
  throw std::invalid_argument("unknown mode '" + text + "'");
}

std::string to_string(Format format) { return format == Format::csv ? "csv" : "json"; }

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

void ExperimentConfig::validate() const {
  if (B_values.empty()) throw std::invalid_argument("no B values given");
  for (std::size_t i = 0; i < B_values.size(); ++i) {
    if (B_values[i] < 2) throw std::invalid_argument("every B must be at least 2");
    if (i > 0 && B_values[i] <= B_values[i - 1]) throw std::invalid_argument("B values must be strictly increasing");
  }
  if (e < 1) throw std::invalid_argument("e must be at least 1");
  if (mode != Mode::monomials) {
    if (polynomial.empty()) throw std::invalid_argument("--poly is required for this mode");
    if (n < 1) throw std::invalid_argument("n must be at least 1");
  }
  if (mode == Mode::modp) {
    for (std::int64_t p : B_values)
      if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("modp mode needs prime B values");
  }
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (budget_seconds < 0) throw std::invalid_argument("time budget must be non-negative");
}

SweepReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  SweepReport report;
  report.config = cfg;
  switch (cfg.mode) {
    case Mode::count: run_count(cfg, report); break;
    case Mode::aux: run_aux(cfg, report); break;
    case Mode::twisted: run_twisted(cfg, report); break;
    case Mode::monomials: run_monomials(cfg, report); break;
    case Mode::modp: run_modp(cfg, report); break;
    case Mode::verify: run_verify(cfg, report); break;
  }
  std::vector<std::pair<double, double>> series;
  for (const ReportRow& row : report.rows)
    if (!row.budget_exhausted && row.observed > 0) series.emplace_back(static_cast<double>(row.B), row.observed);
  if (series.size() >= 2) report.fitted_exponent = fit_exponent(series);
  if (cfg.mode == Mode::verify && report.fitted_exponent)
    report.summary["trivial_bound_sanity"] = yes_no(*report.fitted_exponent <= static_cast<double>(cfg.n) + 0.1);
  return report;
}

double fit_exponent(const std::vector<std::pair<double, double>>& series) {
  if (series.size() < 2) throw std::invalid_argument("exponent fit needs at least two points");
  double sx = 0, sy = 0;
  for (const auto& [B, N] : series) {
    if (B <= 0 || N <= 0) throw std::invalid_argument("exponent fit needs positive B and N");
    sx += std::log(B);
    sy += std::log(N);
  }
  const double k = static_cast<double>(series.size());
  const double mx = sx / k, my = sy / k;
  double sxx = 0, sxy = 0;
  for (const auto& [B, N] : series) {
    sxx += (std::log(B) - mx) * (std::log(B) - mx);
    sxy += (std::log(B) - mx) * (std::log(N) - my);
  }
  if (sxx == 0) throw std::invalid_argument("exponent fit needs two distinct B values");
  return sxy / sxx;
}

std::vector<std::int64_t> parse_B_values(const std::string& text) {
  auto to_int = [&](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != s.size()) throw std::invalid_argument("bad number '" + s + "' in B range '" + text + "'");
    return v;
  };
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() == 1) return {to_int(parts[0])};
  if (parts.size() != 3) throw std::invalid_argument("B range must be a:b:step or a:b:xK");
  const std::int64_t a = to_int(parts[0]);
  const std::int64_t b = to_int(parts[1]);
  std::vector<std::int64_t> out;
  if (!parts[2].empty() && parts[2][0] == 'x') {
    const std::int64_t k = to_int(parts[2].substr(1));
    if (k < 2 || a < 1) throw std::invalid_argument("multiplicative B range needs a >= 1 and factor >= 2");
    for (std::int64_t v = a; v <= b; v *= k) out.push_back(v);
  } else {
    const std::int64_t step = to_int(parts[2]);
    if (step < 1) throw std::invalid_argument("B step must be positive");
    for (std::int64_t v = a; v <= b; v += step) out.push_back(v);
  }
  return out;
}

namespace {

nlohmann::json optional_json(const std::optional<double>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); }

std::optional<double> optional_double(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["mode"] = to_string(c.mode);
  j["polynomial"] = c.polynomial;
  j["e"] = c.e;
  j["n"] = c.n;
  j["B_values"] = c.B_values;
  j["budget_nodes"] = c.budget_nodes;
  j["budget_seconds"] = c.budget_seconds;
  j["seed"] = c.seed;
  j["format"] = to_string(c.format);
  j["output"] = c.output;
  j["threads"] = c.threads;
  j["sigma_threshold"] = c.sigma_threshold ? nlohmann::json(*c.sigma_threshold) : nlohmann::json(nullptr);
  j["weights"] = c.weights;
  j["M_max"] = c.M_max;
  j["record_timings"] = c.record_timings;
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.mode = parse_mode(j.at("mode").get<std::string>());
  c.polynomial = j.at("polynomial").get<std::string>();
  c.e = j.at("e").get<std::uint32_t>();
  c.n = j.at("n").get<std::size_t>();
  c.B_values = j.at("B_values").get<std::vector<std::int64_t>>();
  c.budget_nodes = j.at("budget_nodes").get<std::uint64_t>();
  c.budget_seconds = j.at("budget_seconds").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.format = parse_format(j.at("format").get<std::string>());
  c.output = j.at("output").get<std::string>();
  c.threads = j.at("threads").get<unsigned>();
  if (!j.at("sigma_threshold").is_null()) c.sigma_threshold = j.at("sigma_threshold").get<std::uint64_t>();
  c.weights = j.at("weights").get<std::vector<std::uint32_t>>();
  c.M_max = j.at("M_max").get<std::uint64_t>();
  c.record_timings = j.at("record_timings").get<bool>();
  return c;
}

}  // namespace

std::string render_report(const SweepReport& report, Format format) {
  if (format == Format::csv) {
    std::string out = "B,observed,bound,ratio,runtime_ms\n";
    for (const ReportRow& row : report.rows) {
      out += std::to_string(row.B) + ",";
      out += row.budget_exhausted ? "" : fmt(row.observed);
      out += "," + fmt(row.bound) + ",";
      out += row.budget_exhausted ? "" : fmt(row.ratio);
      out += "," + fmt(row.runtime_ms) + "\n";
    }
    return out;
  }
  nlohmann::json j;
  j["config"] = config_json(report.config);
  j["seed"] = report.config.seed;
  j["rows"] = nlohmann::json::array();
  for (const ReportRow& row : report.rows) {
    j["rows"].push_back({{"B", row.B},
                         {"observed", row.observed},
                         {"bound", row.bound},
                         {"ratio", row.ratio},
                         {"runtime_ms", row.runtime_ms},
                         {"budget_exhausted", row.budget_exhausted},
                         {"extras", row.extras}});
  }
  j["fitted_exponent"] = optional_json(report.fitted_exponent);
  j["claimed_exponent"] = optional_json(report.claimed_exponent);
  j["summary"] = report.summary;
  return j.dump(2) + "\n";
}

void emit_report(const SweepReport& report, Format format, std::ostream& out) {
  out << render_report(report, format);
  if (!out) throw std::runtime_error("failed to write report");
}

void emit_report(const SweepReport& report, Format format, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  emit_report(report, format, file);
}

SweepReport parse_report_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SweepReport report;
  report.config = config_from_json(j.at("config"));
  for (const auto& r : j.at("rows")) {
    ReportRow row;
    row.B = r.at("B").get<std::int64_t>();
    row.observed = r.at("observed").get<double>();
    row.bound = r.at("bound").get<double>();
    row.ratio = r.at("ratio").get<double>();
    row.runtime_ms = r.at("runtime_ms").get<double>();
    row.budget_exhausted = r.at("budget_exhausted").get<bool>();
    row.extras = r.at("extras").get<std::map<std::string, std::string>>();
    report.rows.push_back(std::move(row));
  }
  report.fitted_exponent = optional_double(j.at("fitted_exponent"));
  report.claimed_exponent = optional_double(j.at("claimed_exponent"));
  report.summary = j.at("summary").get<std::map<std::string, std::string>>();
  return report;
}

}  // namespace wdm
