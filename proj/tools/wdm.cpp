#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wdm/errors.hpp"
#include "wdm/harness.hpp"
#include "wdm/text.hpp"

namespace {

struct Options {
  std::string poly;
  std::uint32_t e = 1;
  std::size_t n = 2;
  std::vector<std::string> B;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  unsigned threads = 1;
  std::int64_t sigma_threshold = -1;
  std::vector<std::uint32_t> weights;
  std::uint64_t M_max = 64;
  bool timings = false;
};

void add_common(CLI::App& sub, Options& o) {
  sub.add_option("--poly", o.poly, "polynomial in Y, X1..Xn (or x0..xn)");
  sub.add_option("--e", o.e, "weight of Y");
  sub.add_option("--n", o.n, "number of X variables");
  sub.add_option("--B", o.B, "height bound: integer, a:b:step or a:b:xK; repeatable")->required();
  sub.add_option("--budget-nodes", o.budget_nodes, "fiber budget per row, 0 for none");
  sub.add_option("--budget-seconds", o.budget_seconds, "time budget per row, 0 for none");
  sub.add_option("--seed", o.seed, "seed for randomized steps");
  sub.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub.add_option("--out", o.out, "output file, stdout when omitted");
  sub.add_option("--threads", o.threads, "worker threads");
  sub.add_option("--sigma-threshold", o.sigma_threshold, "prime threshold for the b(f) estimate");
  sub.add_option("--weights", o.weights, "weights for monomials mode")->delimiter(',');
  sub.add_option("--M-max", o.M_max, "largest degree tried by the auxiliary search");
  sub.add_flag("--timings", o.timings, "record wall-clock time per row");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counting experiments for integral points on weighted covers"};
  app.require_subcommand(1);
  Options o;
  std::vector<CLI::App*> subs;
  for (const char* name : {"count", "aux", "twisted", "monomials", "modp", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(*sub, o);
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? wdm::exit_ok : wdm::exit_usage;
  }

  wdm::ExperimentConfig cfg;
  try {
    for (CLI::App* sub : subs)
      if (sub->parsed()) cfg.mode = wdm::parse_mode(sub->get_name());
    cfg.polynomial = o.poly;
    cfg.e = o.e;
    cfg.n = o.n;
    for (const std::string& range : o.B)
      for (std::int64_t b : wdm::parse_B_values(range)) cfg.B_values.push_back(b);
    cfg.budget_nodes = o.budget_nodes;
    cfg.budget_seconds = o.budget_seconds;
    cfg.seed = o.seed;
    cfg.format = wdm::parse_format(o.format);
    cfg.output = o.out;
    cfg.threads = o.threads;
    if (o.sigma_threshold >= 0) cfg.sigma_threshold = static_cast<std::uint64_t>(o.sigma_threshold);
    cfg.weights = o.weights;
    cfg.M_max = o.M_max;
    cfg.record_timings = o.timings;
    cfg.validate();
  } catch (const std::exception& err) {
    std::cerr << "wdm: " << err.what() << "\n";
    return wdm::exit_usage;
  }

  try {
    const wdm::SweepReport report = wdm::run_experiment(cfg);
    if (cfg.output.empty())
      wdm::emit_report(report, cfg.format, std::cout);
    else
      wdm::emit_report(report, cfg.format, cfg.output);
    bool all_exhausted = !report.rows.empty();
    for (const wdm::ReportRow& row : report.rows) all_exhausted = all_exhausted && row.budget_exhausted;
    return all_exhausted ? wdm::exit_budget : wdm::exit_ok;
  } catch (const wdm::HypothesisError& err) {
    std::cerr << "wdm: hypothesis failure: " << err.what() << "\n";
    return wdm::exit_hypothesis;
  } catch (const std::exception& err) {
    std::cerr << "wdm: " << err.what() << "\n";
    return wdm::exit_usage;
  }
}
