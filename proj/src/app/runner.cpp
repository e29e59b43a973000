#include "heavytail/app/runner.hpp"

#include <cmath>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "heavytail/app/io.hpp"
#include "heavytail/condlimit.hpp"
#include "heavytail/error.hpp"
#include "heavytail/estimators.hpp"
#include "heavytail/evt.hpp"
#include "heavytail/gaussian.hpp"
#include "heavytail/pot.hpp"
#include "heavytail/samplers.hpp"

namespace heavytail {

using nlohmann::json;

Subcommand subcommand_from_string(const std::string& s) {
  if (s == "simulate") return Subcommand::Simulate;
  if (s == "estimate") return Subcommand::Estimate;
  if (s == "hrv") return Subcommand::Hrv;
  if (s == "pot") return Subcommand::Pot;
  if (s == "evt") return Subcommand::Evt;
  if (s == "condlimit") return Subcommand::Condlimit;
  fail(Error::Code::InvalidSpec, "unknown subcommand '" + s + "'");
}

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::Simulate:
      return "simulate";
    case Subcommand::Estimate:
      return "estimate";
    case Subcommand::Hrv:
      return "hrv";
    case Subcommand::Pot:
      return "pot";
    case Subcommand::Evt:
      return "evt";
    case Subcommand::Condlimit:
      return "condlimit";
  }
  return "?";
}

namespace {

// ---- generator presets ---------------------------------------------------

struct Generator {
  std::string name;
  std::function<Eigen::VectorXd(RngStream&)> draw;
};

std::map<std::string, std::string> parse_kv(const std::string& args, const std::string& spec) {
  std::map<std::string, std::string> kv;
  std::stringstream stream(args);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      fail(Error::Code::InvalidSpec, "generator '" + spec + "': malformed key=value '" + item + "'");
    }
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

double kv_number(const std::map<std::string, std::string>& kv, const std::string& key,
                 const std::string& spec) {
  const auto it = kv.find(key);
  if (it == kv.end()) {
    fail(Error::Code::InvalidSpec, "generator '" + spec + "' requires " + key + "=<number>");
  }
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(Error::Code::InvalidSpec, "generator '" + spec + "': bad number for " + key);
  }
}

void expect_keys(const std::map<std::string, std::string>& kv,
                 std::initializer_list<const char*> allowed, const std::string& spec) {
  for (const auto& [key, value] : kv) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) fail(Error::Code::InvalidSpec, "generator '" + spec + "': unknown key '" + key + "'");
  }
}

// atoms=d1|d2@w;d1|d2@w...
DiscreteAngularMeasure parse_atoms(const std::string& text, Norm norm, const std::string& spec) {
  std::vector<AngularAtom> atoms;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ';')) {
    const auto at = item.find('@');
    if (at == std::string::npos) {
      fail(Error::Code::InvalidSpec, "generator '" + spec + "': atom '" + item + "' needs direction@weight");
    }
    std::vector<double> coords;
    std::stringstream dir(item.substr(0, at));
    std::string cell;
    while (std::getline(dir, cell, '|')) coords.push_back(std::stod(cell));
    AngularAtom atom;
    atom.direction = Eigen::Map<Eigen::VectorXd>(coords.data(), static_cast<Eigen::Index>(coords.size()));
    atom.weight = std::stod(item.substr(at + 1));
    atoms.push_back(std::move(atom));
  }
  return DiscreteAngularMeasure(std::move(atoms), norm);
}

Generator make_generator(const std::string& spec, Norm norm) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const auto kv = colon == std::string::npos ? std::map<std::string, std::string>{}
                                             : parse_kv(spec.substr(colon + 1), spec);

  if (name == "iid-pareto-pair") {
    expect_keys(kv, {}, spec);
    return {name, [](RngStream& rng) -> Eigen::VectorXd { return iid_pareto_pair(rng); }};
  }
  if (name == "inv-uniform-pair") {
    expect_keys(kv, {}, spec);
    return {name, [](RngStream& rng) -> Eigen::VectorXd { return inv_uniform_pair(rng); }};
  }
  if (name == "gaussian-copula" || name == "gaussian") {
    expect_keys(kv, {"rho"}, spec);
    const double rho = kv_number(kv, "rho", spec);
    return {name, [rho](RngStream& rng) -> Eigen::VectorXd { return gaussian_copula_pair(rho, rng); }};
  }
  if (name == "bivariate-normal") {
    expect_keys(kv, {"rho"}, spec);
    const double rho = kv_number(kv, "rho", spec);
    return {name, [rho](RngStream& rng) -> Eigen::VectorXd { return bivariate_normal_pair(rho, rng); }};
  }
  if (name == "mixture-hrv") {
    expect_keys(kv, {"alpha0"}, spec);
    const auto mixture = MixtureHrvSpec::with_default_direction(kv_number(kv, "alpha0", spec));
    return {name, [mixture](RngStream& rng) -> Eigen::VectorXd { return mixture_hrv_sample(mixture, rng); }};
  }
  if (name == "line-pareto") {
    expect_keys(kv, {"galpha"}, spec);
    const LineConstructionSpec line{TailSpec{ParetoTail{kv_number(kv, "galpha", spec)}}};
    return {name, [line](RngStream& rng) -> Eigen::VectorXd { return line_construction_sample(line, rng); }};
  }
  if (name == "pareto") {
    expect_keys(kv, {"alpha"}, spec);
    const double alpha = kv_number(kv, "alpha", spec);
    return {name, [alpha](RngStream& rng) -> Eigen::VectorXd {
              return Eigen::VectorXd::Constant(1, pareto_sample(alpha, rng));
            }};
  }
  if (name == "polar") {
    expect_keys(kv, {"alpha", "atoms"}, spec);
    const double alpha = kv_number(kv, "alpha", spec);
    const auto it = kv.find("atoms");
    if (it == kv.end()) fail(Error::Code::InvalidSpec, "generator '" + spec + "' requires atoms=");
    const PolarConstructionSpec polar{alpha, parse_atoms(it->second, norm, spec).normalized()};
    return {name, [polar](RngStream& rng) -> Eigen::VectorXd { return polar_construction_sample(polar, rng); }};
  }
  fail(Error::Code::InvalidSpec, "unknown generator '" + name + "'");
}

// ---- validation ----------------------------------------------------------

void validate(const RunConfig& config) {
  std::vector<std::string> problems;
  const auto complain = [&problems](const std::string& p) { problems.push_back(p); };

  if (config.input_path.empty() == config.generator.empty()) {
    complain("exactly one of --input and --generate must be given");
  }
  if (!config.generator.empty() && config.n < 1) complain("--n must be at least 1");
  if (config.k < 0) complain("--k must be nonnegative");
  if (!config.generator.empty() && config.k >= config.n && config.k > 0) {
    complain("--k must be smaller than the sample size");
  }
  if (!(config.top_fraction > 0.0) || !(config.top_fraction < 1.0)) {
    complain("--top-fraction must lie in (0, 1)");
  }
  if (!(config.u > 0.0) || !(config.u < 1.0)) complain("--u must lie in (0, 1)");
  if (config.pot_threshold < 0.0) complain("--threshold must be positive");
  if (config.subcommand == Subcommand::Evt && config.block < 2) {
    complain("--block must be at least 2");
  }
  if (config.subcommand == Subcommand::Evt) {
    for (double g : config.grid_levels) {
      if (!(g > 0.0)) complain("--grid levels must be positive");
    }
    if (config.grid_levels.empty()) complain("--grid must be nonempty");
  }
  if (config.subcommand == Subcommand::Condlimit) {
    for (double q : config.thresholds) {
      if (!(q > 0.0) || !(q < 1.0)) {
        complain("--thresholds must be quantile levels in (0, 1)");
        break;
      }
    }
    if (config.thresholds.empty()) complain("--thresholds must be nonempty");
    if (config.c_grid.empty()) complain("--c-grid must be nonempty");
    if (config.y_map != "identity" && config.y_map != "log" && config.y_map != "gaussian") {
      complain("--y-map must be identity|log|gaussian");
    }
    if (!(config.product_tol > 0.0)) complain("--product-tol must be positive");
    if (std::isfinite(config.oracle_rho)) {
      if (!(std::fabs(config.oracle_rho) < 1.0)) complain("--rho must satisfy |rho| < 1");
      if (config.y_map != "gaussian") {
        complain("--rho (the normal oracle) requires --y-map gaussian");
      }
    }
  }
  if (!config.plots.empty() && config.out_dir.empty()) {
    complain("--plot requires --out");
  }
  for (const auto& p : config.plots) {
    try {
      plot_kind_from_string(p);
    } catch (const Error&) {
      complain("unknown plot kind '" + p + "'");
    }
  }
  if (!config.generator.empty()) {
    try {
      make_generator(config.generator, config.norm);
    } catch (const Error& e) {
      complain(e.what());
    }
  }

  if (!problems.empty()) {
    std::string joined = "invalid configuration:";
    for (const auto& p : problems) joined += "\n  - " + p;
    fail(Error::Code::InvalidSpec, joined);
  }
}

json config_echo(const RunConfig& config) {
  // out_dir is deliberately not echoed: the report is byte-identical for
  // identical logical configs regardless of where it is written.
  json echo{{"subcommand", to_string(config.subcommand)},
            {"seed", config.seed},
            {"norm", to_string(config.norm)},
            {"k", config.k},
            {"top_fraction", config.top_fraction},
            {"u", config.u},
            {"plots", config.plots}};
  if (!config.input_path.empty()) echo["input"] = config.input_path;
  if (!config.generator.empty()) {
    echo["generator"] = config.generator;
    echo["n"] = config.n;
  }
  if (config.subcommand == Subcommand::Pot) echo["threshold"] = config.pot_threshold;
  if (config.subcommand == Subcommand::Evt) {
    echo["block"] = config.block;
    echo["grid_levels"] = config.grid_levels;
  }
  if (config.subcommand == Subcommand::Condlimit) {
    echo["thresholds"] = config.thresholds;
    echo["c_grid"] = config.c_grid;
    echo["product_tol"] = config.product_tol;
    echo["y_map"] = config.y_map;
    if (std::isfinite(config.oracle_rho)) echo["oracle_rho"] = config.oracle_rho;
  }
  return echo;
}

// ---- result blocks -------------------------------------------------------

json index_json(const TailIndexEstimate& e) {
  return json{{"alpha_hat", e.alpha_hat}, {"k", e.k}, {"n", e.n}};
}

json angular_json(const AngularEstimate& est) {
  json atoms = json::array();
  for (const auto& atom : est.angular.atoms()) {
    json dir = json::array();
    for (Eigen::Index i = 0; i < atom.direction.size(); ++i) dir.push_back(atom.direction[i]);
    atoms.push_back(json{{"direction", dir}, {"weight", atom.weight}});
  }
  return json{{"alpha_hat", est.index.alpha_hat},
              {"k", est.index.k},
              {"threshold_radius", est.threshold_radius},
              {"atoms", atoms}};
}

json vector_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

void run_estimate(const RunConfig& config, const Eigen::MatrixXd& sample, Eigen::Index k,
                  Report& report) {
  json block = json::object();
  json per_coordinate = json::array();
  for (Eigen::Index j = 0; j < sample.cols(); ++j) {
    per_coordinate.push_back(index_json(hill(sample.col(j), k)));
  }
  block["per_coordinate"] = per_coordinate;
  if (sample.cols() >= 2) {
    block["max"] = index_json(max_tail_index(sample, k));
    block["min"] = index_json(min_tail_index(sample, k));
  }
  report.doc["results"]["tail_indices"] = block;

  const Eigen::VectorXd radii = [&] {
    Eigen::VectorXd r(sample.rows());
    for (Eigen::Index i = 0; i < sample.rows(); ++i) r[i] = norm_of(sample.row(i).transpose(), config.norm);
    return r;
  }();

  // Hill trace over ten k values up to k, for the hill-plot.
  json trace = json::array();
  for (int step = 1; step <= 10; ++step) {
    const auto kk = static_cast<Eigen::Index>(std::llround(static_cast<double>(k) * step / 10.0));
    if (kk < 1 || kk >= sample.rows()) continue;
    if (!trace.empty() && trace.back()[0] == json(kk)) continue;
    trace.push_back(json::array({kk, hill(radii, kk).alpha_hat}));
  }
  report.doc["results"]["hill_trace"] = trace;

  report.doc["results"]["angular"] = angular_json(angular_estimate(sample, config.top_fraction, config.norm));
}

void run_hrv(const RunConfig& config, const Eigen::MatrixXd& sample, Eigen::Index k, Report& report) {
  const HrvReport hrv = hrv_report(sample, k, config.u);
  report.doc["results"]["hrv"] = json{{"alpha_hat", hrv.alpha.alpha_hat},
                                      {"alpha0_hat", hrv.alpha0.alpha_hat},
                                      {"eta_hat", hrv.eta_hat},
                                      {"lambda_hat", hrv.lambda},
                                      {"u", hrv.u},
                                      {"k", hrv.alpha.k},
                                      {"verdict", to_string(hrv.verdict)}};
}

std::string run_pot(const RunConfig& config, const Eigen::MatrixXd& sample, Report& report) {
  Eigen::VectorXd radii(sample.rows());
  for (Eigen::Index i = 0; i < sample.rows(); ++i) {
    radii[i] = norm_of(sample.row(i).transpose(), config.norm);
  }
  double threshold = config.pot_threshold;
  if (threshold == 0.0) {
    std::vector<double> sorted(radii.data(), radii.data() + radii.size());
    const auto tail = EmpiricalTail::of(std::move(sorted));
    threshold = quantile_b(TailSpec{tail}, 1.0 / config.top_fraction);
  }
  const PolarExceedanceSet set = pot_exceedances(sample, threshold, config.norm);

  Eigen::MatrixXd table(static_cast<Eigen::Index>(set.pairs.size()), sample.cols() + 1);
  for (std::size_t i = 0; i < set.pairs.size(); ++i) {
    table(static_cast<Eigen::Index>(i), 0) = set.pairs[i].radius;
    table.row(static_cast<Eigen::Index>(i)).tail(sample.cols()) = set.pairs[i].direction.transpose();
  }
  std::vector<std::string> header{"r"};
  for (Eigen::Index j = 0; j < sample.cols(); ++j) header.push_back("a_" + std::to_string(j + 1));

  report.doc["results"]["pot"] = json{{"threshold", threshold},
                                      {"count", set.pairs.size()},
                                      {"norm", to_string(config.norm)}};
  if (set.pairs.empty()) {
    report.add_warning("no radius exceeds the threshold " + format_double(threshold));
  }
  return csv_from_matrix(header, table);
}

std::string run_evt(const RunConfig& config, const Eigen::MatrixXd& sample, Eigen::Index k,
                    Report& report) {
  Eigen::VectorXd radii(sample.rows());
  for (Eigen::Index i = 0; i < sample.rows(); ++i) {
    radii[i] = norm_of(sample.row(i).transpose(), config.norm);
  }
  const AngularEstimate angular = angular_estimate(sample, config.top_fraction, config.norm);
  const TailIndexEstimate index = hill(radii, k);
  const LimitMeasureSpec nu(index.alpha_hat, angular.angular);

  if (sample.rows() < config.block) {
    fail(Error::Code::InvalidSpec, "block size exceeds the sample size");
  }
  std::vector<double> sorted(radii.data(), radii.data() + radii.size());
  const auto tail = EmpiricalTail::of(std::move(sorted));
  const double scale = quantile_b(TailSpec{tail}, static_cast<double>(config.block));

  const Eigen::MatrixXd maxima = block_maxima(sample, config.block) / scale;

  // cartesian grid over the per-axis levels
  const Eigen::Index d = sample.cols();
  const auto& levels = config.grid_levels;
  std::vector<std::size_t> ix(static_cast<std::size_t>(d), 0);
  json table = json::array();
  Eigen::MatrixXd csv_rows(static_cast<Eigen::Index>(std::pow(levels.size(), d)), d + 2);
  Eigen::Index row = 0;
  while (true) {
    Eigen::VectorXd corner(d);
    for (Eigen::Index j = 0; j < d; ++j) corner[j] = levels[ix[static_cast<std::size_t>(j)]];
    Eigen::Index below = 0;
    for (Eigen::Index i = 0; i < maxima.rows(); ++i) {
      if ((maxima.row(i).transpose().array() <= corner.array()).all()) ++below;
    }
    const double empirical = static_cast<double>(below) / static_cast<double>(maxima.rows());
    const double model = max_stable_cdf(nu, corner);
    table.push_back(json{{"x", vector_json(corner)}, {"empirical", empirical}, {"model", model}});
    csv_rows.row(row).head(d) = corner.transpose();
    csv_rows(row, d) = empirical;
    csv_rows(row, d + 1) = model;
    ++row;

    Eigen::Index j = 0;
    for (; j < d; ++j) {
      if (++ix[static_cast<std::size_t>(j)] < levels.size()) break;
      ix[static_cast<std::size_t>(j)] = 0;
    }
    if (j == d) break;
  }

  report.doc["results"]["evt"] = json{{"alpha_hat", index.alpha_hat},
                                      {"block", config.block},
                                      {"block_count", maxima.rows()},
                                      {"scale", scale},
                                      {"table", table}};

  std::vector<std::string> header;
  for (Eigen::Index j = 0; j < d; ++j) header.push_back("x_" + std::to_string(j + 1));
  header.push_back("empirical");
  header.push_back("model");
  return csv_from_matrix(header, csv_rows);
}

std::string run_condlimit(const RunConfig& config, const Eigen::MatrixXd& sample, Report& report) {
  if (sample.cols() != 2) {
    fail(Error::Code::InvalidSpec, "condlimit expects two columns (X, Y)");
  }
  const MonotoneMap map = config.y_map == "identity" ? identity_map()
                          : config.y_map == "log"    ? log_map()
                                                     : gaussian_quantile_map();
  Eigen::MatrixXd xy(sample.rows(), 2);
  xy.col(0) = sample.col(0);
  xy.col(1) = standardize_y(sample.col(1), map);

  CondLimitFit fit = fit_location_scale(xy, config.thresholds);
  const PsiTables tables = psi_estimates(fit, config.c_grid);
  fit.c_grid = tables.c;
  fit.psi1 = Eigen::Map<const Eigen::VectorXd>(tables.psi1.data(), static_cast<Eigen::Index>(tables.psi1.size()));
  fit.psi2 = Eigen::Map<const Eigen::VectorXd>(tables.psi2.data(), static_cast<Eigen::Index>(tables.psi2.size()));
  fit.product_verdict = product_form_test(tables, config.product_tol);

  json block{{"thresholds", vector_json(fit.thresholds)},
             {"beta_hat", vector_json(fit.beta_hat)},
             {"alpha_scale_hat", vector_json(fit.alpha_scale_hat)},
             {"psi", json{{"c", tables.c}, {"psi1", tables.psi1}, {"psi2", tables.psi2}}},
             {"product_form", fit.product_verdict}};

  std::string csv;
  if (std::isfinite(config.oracle_rho)) {
    // Conditional CDF of X - rho*b(t) above the highest threshold, against
    // the closed-form limit.
    const GaussianCondOracle oracle{config.oracle_rho};
    const double t = fit.thresholds[fit.thresholds.size() - 1];
    const double center = config.oracle_rho * gaussian_norming(t).location;
    Eigen::MatrixXd shifted(xy.rows(), 2);
    shifted.col(0) = xy.col(0).array() - center;
    shifted.col(1) = xy.col(1);
    Eigen::VectorXd grid(25);
    for (Eigen::Index i = 0; i < grid.size(); ++i) grid[i] = -3.0 + 0.25 * static_cast<double>(i);
    const Eigen::VectorXd empirical = conditional_cdf_empirical(shifted, t, grid);
    Eigen::VectorXd oracle_values(grid.size());
    for (Eigen::Index i = 0; i < grid.size(); ++i) {
      oracle_values[i] = gaussian_oracle_mu(oracle, grid[i], 1.0);
    }
    block["cond_cdf"] = json{{"t", t},
                             {"x", vector_json(grid)},
                             {"empirical", vector_json(empirical)},
                             {"oracle", vector_json(oracle_values)}};
    Eigen::MatrixXd rows(grid.size(), 3);
    rows.col(0) = grid;
    rows.col(1) = empirical;
    rows.col(2) = oracle_values;
    csv = csv_from_matrix({"x", "empirical", "oracle"}, rows);
  }

  report.doc["results"]["condlimit"] = block;
  return csv;
}

}  // namespace

Report run(const RunConfig& config) {
  validate(config);

  Report report = Report::fresh();
  report.doc["config"] = config_echo(config);

  RngStream rng(config.seed);
  Eigen::MatrixXd sample;
  if (!config.input_path.empty()) {
    sample = ingest_csv(config.input_path);
  } else {
    const Generator gen = make_generator(config.generator, config.norm);
    sample = draw_matrix(config.n, gen.draw, rng);
  }

  const Eigen::Index n = sample.rows();
  Eigen::Index k = config.k > 0 ? config.k : default_k(n);
  if (k >= n) {
    fail(Error::Code::InvalidSpec, "invalid configuration:\n  - k (" + std::to_string(k) +
                                       ") must be smaller than the sample size (" + std::to_string(n) + ")");
  }

  // Buffer all file contents; nothing is written until the run succeeded.
  std::vector<std::pair<std::string, std::string>> files;

  switch (config.subcommand) {
    case Subcommand::Simulate: {
      report.doc["results"]["simulate"] = json{{"n", n}, {"dim", sample.cols()}};
      std::vector<std::string> header;
      for (Eigen::Index j = 0; j < sample.cols(); ++j) header.push_back("z_" + std::to_string(j + 1));
      files.emplace_back("sample.csv", csv_from_matrix(header, sample));
      break;
    }
    case Subcommand::Estimate:
      run_estimate(config, sample, k, report);
      break;
    case Subcommand::Hrv:
      run_hrv(config, sample, k, report);
      break;
    case Subcommand::Pot:
      files.emplace_back("exceedances.csv", run_pot(config, sample, report));
      break;
    case Subcommand::Evt:
      files.emplace_back("evt_table.csv", run_evt(config, sample, k, report));
      break;
    case Subcommand::Condlimit: {
      const std::string csv = run_condlimit(config, sample, report);
      if (!csv.empty()) files.emplace_back("cond_cdf.csv", csv);
      break;
    }
  }

  for (const auto& name : config.plots) {
    files.emplace_back(name + ".csv", emit_plot_data(report, plot_kind_from_string(name)));
  }

  report.validate();
  if (!config.out_dir.empty()) {
    std::filesystem::create_directories(config.out_dir);
    for (const auto& [name, content] : files) {
      write_text_file((std::filesystem::path(config.out_dir) / name).string(), content);
    }
    write_text_file((std::filesystem::path(config.out_dir) / "report.json").string(),
                    report.serialize());
  }
  return report;
}

}  // namespace heavytail
