// Batch front door: simulate, estimate, diagnose and emit reports/plot data
// over CSV inputs. Exit codes: 0 success, 2 config error, 3 data error,
// 4 numeric failure.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "heavytail/app/runner.hpp"
#include "heavytail/error.hpp"

namespace {

int exit_class(heavytail::Error::Code code) {
  using Code = heavytail::Error::Code;
  switch (code) {
    case Code::InvalidSpec:
    case Code::BadK:
    case Code::BadWeights:
    case Code::BadBlockSize:
    case Code::OutOfRange:
    case Code::Unsupported:
    case Code::MissingBlock:
      return 2;
    case Code::ParseError:
    case Code::RaggedRows:
    case Code::EmptyInput:
    case Code::TooFewExceedances:
      return 3;
    default:
      return 4;
  }
}

void add_common(CLI::App* cmd, heavytail::RunConfig& config, std::string& norm) {
  cmd->add_option("--input", config.input_path, "CSV of observations (rows = points)");
  cmd->add_option("--generate", config.generator,
                  "generator preset, e.g. iid-pareto-pair, gaussian-copula:rho=0.5, "
                  "polar:alpha=1,atoms=1|0@0.3;0|1@0.7");
  cmd->add_option("--n", config.n, "sample count when generating");
  cmd->add_option("--seed", config.seed, "random seed");
  cmd->add_option("--norm", norm, "norm: l1|l2|linf")->check(CLI::IsMember({"l1", "l2", "linf"}));
  cmd->add_option("--k", config.k, "order statistics for tail estimation (default ceil(n^(2/3)))");
  cmd->add_option("--top-fraction", config.top_fraction, "top radius fraction for angular/POT work");
  cmd->add_option("--u", config.u, "tail-dependence level");
  cmd->add_option("--out", config.out_dir, "output directory");
  cmd->add_option("--plot", config.plots, "plot data to emit: hill-plot|angular-histogram|cond-cdf");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heavy-tail simulation and estimation toolkit"};
  app.require_subcommand(1);

  heavytail::RunConfig config;
  std::string norm = "l1";

  auto* simulate = app.add_subcommand("simulate", "draw from a generator preset");
  auto* estimate = app.add_subcommand("estimate", "tail indices and angular measure");
  auto* hrv = app.add_subcommand("hrv", "hidden-regular-variation diagnostic");
  auto* pot = app.add_subcommand("pot", "peaks-over-threshold polar exceedances");
  auto* evt = app.add_subcommand("evt", "block maxima vs max-stable limit");
  auto* condlimit = app.add_subcommand("condlimit", "conditioned limit fits and product-form test");

  for (auto* cmd : {simulate, estimate, hrv, pot, evt, condlimit}) {
    add_common(cmd, config, norm);
  }
  pot->add_option("--threshold", config.pot_threshold, "absolute radius threshold (default: top fraction)");
  evt->add_option("--block", config.block, "block size (>= 2)");
  evt->add_option("--grid", config.grid_levels, "per-axis comparison levels");
  condlimit->add_option("--thresholds", config.thresholds, "Y*-quantile levels");
  condlimit->add_option("--c-grid", config.c_grid, "psi ratio grid");
  condlimit->add_option("--product-tol", config.product_tol, "product-form tolerance");
  condlimit->add_option("--y-map", config.y_map, "Y standardization: identity|log|gaussian");
  condlimit->add_option("--rho", config.oracle_rho, "gaussian oracle correlation for cond-cdf output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    config.norm = heavytail::norm_from_string(norm);
    if (simulate->parsed()) config.subcommand = heavytail::Subcommand::Simulate;
    if (estimate->parsed()) config.subcommand = heavytail::Subcommand::Estimate;
    if (hrv->parsed()) config.subcommand = heavytail::Subcommand::Hrv;
    if (pot->parsed()) config.subcommand = heavytail::Subcommand::Pot;
    if (evt->parsed()) config.subcommand = heavytail::Subcommand::Evt;
    if (condlimit->parsed()) config.subcommand = heavytail::Subcommand::Condlimit;

    const heavytail::Report report = heavytail::run(config);
    if (config.out_dir.empty()) std::cout << report.serialize();
    return 0;
  } catch (const heavytail::Error& e) {
    const nlohmann::json block{{"error", {{"message", e.what()}, {"exit", exit_class(e.code())}}}};
    std::cerr << block.dump(2) << "\n";
    return exit_class(e.code());
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", {{"message", e.what()}, {"exit", 4}}}}.dump(2) << "\n";
    return 4;
  }
}
