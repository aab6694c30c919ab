#include <doctest.h>

#include <cmath>
#include <sstream>

#include "wdm/errors.hpp"
#include "wdm/harness.hpp"

using namespace wdm;

namespace {

ExperimentConfig config(Mode mode, const std::string& poly, std::vector<std::int64_t> B, std::size_t n = 2,
                        std::uint32_t e = 1) {
  ExperimentConfig cfg;
  cfg.mode = mode;
  cfg.polynomial = poly;
  cfg.n = n;
  cfg.e = e;
  cfg.B_values = std::move(B);
  return cfg;
}

}  // namespace

TEST_CASE("fit_exponent") {
  CHECK(fit_exponent({{10, 100}, {100, 10000}}) == doctest::Approx(2.0));
  CHECK(fit_exponent({{10, 7}, {100, 7}}) == doctest::Approx(0.0));
  CHECK(fit_exponent({{2, 4}, {4, 16}, {8, 64}}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(fit_exponent({{2, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_exponent({{2, 4}, {4, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_exponent({{2, 4}, {2, 5}}), std::invalid_argument);
}

TEST_CASE("parse_B_values") {
  CHECK(parse_B_values("2:8:2") == std::vector<std::int64_t>{2, 4, 6, 8});
  CHECK(parse_B_values("4:256:x2") == std::vector<std::int64_t>{4, 8, 16, 32, 64, 128, 256});
  CHECK(parse_B_values("17") == std::vector<std::int64_t>{17});
  CHECK_THROWS(parse_B_values("2:8"));
  CHECK_THROWS(parse_B_values("a:8:1"));
  CHECK_THROWS(parse_B_values("2:8:0"));
  CHECK_THROWS(parse_B_values("2:8:x1"));
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(config(Mode::count, "Y^2 - X1*X2", {2, 4}).validate());
  CHECK_THROWS_AS(config(Mode::count, "Y^2 - X1*X2", {}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(Mode::count, "Y^2 - X1*X2", {4, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(Mode::count, "Y^2 - X1*X2", {1, 2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(Mode::count, "", {2}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(config(Mode::modp, "Y^2 - X1*X2", {5, 9}).validate(), std::invalid_argument);
  CHECK_NOTHROW(config(Mode::monomials, "", {10}).validate());
}

TEST_CASE("CSV emission") {
  SweepReport empty;
  CHECK(render_report(empty, Format::csv) == "B,observed,bound,ratio,runtime_ms\n");
  SweepReport one;
  one.rows.push_back(ReportRow{8, 9, 177, 0.0508, 12, false, {}});
  CHECK(render_report(one, Format::csv) == "B,observed,bound,ratio,runtime_ms\n8,9,177,0.0508,12\n");
  one.rows.push_back(ReportRow{16, 0, 300, 0, 0, true, {}});
  CHECK(render_report(one, Format::csv).ends_with("16,,300,,0\n"));
  std::ostringstream out;
  emit_report(one, Format::csv, out);
  CHECK(out.str() == render_report(one, Format::csv));
  CHECK_THROWS_AS(emit_report(one, Format::csv, std::string("/nonexistent-dir/report.csv")), std::runtime_error);
}

TEST_CASE("JSON round trip") {
  SweepReport r = run_experiment(config(Mode::count, "Y^2 - X1*X2 + X1", {2, 3, 5}));
  r.config.seed = 42;
  r.config.sigma_threshold = 11;
  r.config.weights = {2, 1, 1};
  r.rows[1].budget_exhausted = true;
  r.rows[1].runtime_ms = 1.25;
  const std::string text = render_report(r, Format::json);
  const SweepReport back = parse_report_json(text);
  CHECK(back == r);
  CHECK(render_report(back, Format::json) == text);
  CHECK(text.find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("count mode sweep") {
  const SweepReport r = run_experiment(config(Mode::count, "Y^2 - X1*X2", {4, 8, 16, 32, 64}));
  REQUIRE(r.rows.size() == 5);
  REQUIRE(r.fitted_exponent);
  CHECK(*r.fitted_exponent <= 2 / std::sqrt(2.0) + 0.25);
  CHECK(*r.claimed_exponent == doctest::Approx(std::sqrt(2.0)));
  for (const auto& row : r.rows) {
    CHECK(row.extras.at("schwarz_zippel_holds") == "true");
    CHECK(row.ratio == doctest::Approx(row.observed / row.bound));
    CHECK(std::isfinite(row.ratio));
    CHECK(row.ratio >= 0);
  }
  CHECK(r.summary.at("F_top_absolutely_irreducible") == "true");
  CHECK(r.rows[0].observed == 41);
}

TEST_CASE("hypothesis failures and budgets") {
  CHECK_THROWS_AS(run_experiment(config(Mode::count, "Y^2 - X1^2", {2, 4})), HypothesisError);
  CHECK_THROWS_AS(run_experiment(config(Mode::count, "2*Y^2 - X1*X2", {2, 4})), HypothesisError);
  auto cfg = config(Mode::count, "Y^2 - X1*X2", {2, 4, 100});
  cfg.budget_nodes = 100;
  const SweepReport r = run_experiment(cfg);
  REQUIRE(r.rows.size() == 3);
  CHECK_FALSE(r.rows[0].budget_exhausted);
  CHECK_FALSE(r.rows[1].budget_exhausted);
  CHECK(r.rows[2].budget_exhausted);
}

TEST_CASE("aux mode stays under the surface bound") {
  const SweepReport r = run_experiment(config(Mode::aux, "Y^2 - X1*X2", {8}));
  REQUIRE(r.rows.size() == 1);
  CHECK(r.rows[0].observed <= r.rows[0].bound);
  CHECK(r.rows[0].extras.at("f_divides_g") == "false");
  CHECK(r.summary.at("bound_kind") == "surface");
  CHECK(r.summary.count("log_b_estimate") == 1);
}

TEST_CASE("monomials mode") {
  auto cfg = config(Mode::monomials, "", {});
  cfg.weights = {2, 1, 1};
  for (std::int64_t M = 2; M <= 60; ++M) cfg.B_values.push_back(M);
  const SweepReport r = run_experiment(cfg);
  for (const auto& row : r.rows) {
    CHECK(row.extras.at("basis_match") == "true");
    if (row.B >= 8 && row.B % 2 == 0)
      CHECK(std::stod(row.extras.at("relative_deviation")) <= std::stod(row.extras.at("envelope")));
  }
}

TEST_CASE("modp, twisted and verify modes") {
  const SweepReport m = run_experiment(config(Mode::modp, "Y^2 - X1*X2", {5, 7, 11, 13}));
  CHECK(m.rows[0].observed == 25);
  for (const auto& row : m.rows) CHECK(std::fabs(row.observed - row.bound) <= 4 * std::pow(row.B, 1.5));

  const SweepReport t = run_experiment(config(Mode::twisted, "Y^2 - X1*X2", {4, 8}));
  for (const auto& row : t.rows) {
    CHECK(row.observed <= row.bound);
    CHECK(row.extras.at("line_bound_violations") == "0");
  }
  CHECK_THROWS(run_experiment(config(Mode::twisted, "Y^3 - X1*X2*X3", {4}, 3)));

  const SweepReport v = run_experiment(config(Mode::verify, "Y^3 - X1*X2*X3", {2, 3, 4, 5}, 3));
  CHECK(v.summary.at("monotone_in_B") == "true");
  CHECK(v.summary.at("trivial_bound_sanity") == "true");
  for (const auto& row : v.rows) CHECK(row.observed <= row.bound);
}

TEST_CASE("reports are reproducible") {
  for (Mode mode : {Mode::count, Mode::twisted, Mode::verify}) {
    auto cfg = config(mode, "Y^2 - X1*X2 + X2", {3, 6});
    cfg.seed = 9;
    CHECK(render_report(run_experiment(cfg), Format::csv) == render_report(run_experiment(cfg), Format::csv));
    CHECK(render_report(run_experiment(cfg), Format::json) == render_report(run_experiment(cfg), Format::json));
  }
}
