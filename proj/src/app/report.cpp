#include "heavytail/app/report.hpp"

#include "heavytail/app/io.hpp"
#include "heavytail/error.hpp"

namespace heavytail {

using nlohmann::json;

Report Report::fresh() {
  Report report;
  report.doc = json{{"schema_version", 1},
                    {"tool", {{"name", "heavytail"}, {"version", "0.1.0"}}},
                    {"config", json::object()},
                    {"results", json::object()},
                    {"warnings", json::array()}};
  return report;
}

std::string Report::serialize() const { return doc.dump(2) + "\n"; }

Report Report::deserialize(const std::string& text) {
  Report report;
  report.doc = json::parse(text);
  report.validate();
  return report;
}

void Report::validate() const {
  const auto expect = [this](const char* key, json::value_t type) {
    if (!doc.contains(key) || doc.at(key).type() != type) {
      fail(Error::Code::ParseError, std::string("report schema violation at '") + key + "'");
    }
  };
  if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer()) {
    fail(Error::Code::ParseError, "report schema violation at 'schema_version'");
  }
  if (doc["schema_version"].get<int>() != 1) {
    fail(Error::Code::ParseError, "unknown report schema_version");
  }
  expect("tool", json::value_t::object);
  expect("config", json::value_t::object);
  expect("results", json::value_t::object);
  expect("warnings", json::value_t::array);
  if (!doc["tool"].contains("name") || !doc["tool"].contains("version")) {
    fail(Error::Code::ParseError, "report schema violation at 'tool'");
  }
}

bool Report::has_block(const std::string& name) const {
  return doc.contains("results") && doc["results"].contains(name);
}

void Report::add_warning(const std::string& message) { doc["warnings"].push_back(message); }

PlotKind plot_kind_from_string(const std::string& s) {
  if (s == "hill-plot") return PlotKind::HillPlot;
  if (s == "angular-histogram") return PlotKind::AngularHistogram;
  if (s == "cond-cdf") return PlotKind::CondCdf;
  fail(Error::Code::InvalidSpec, "unknown plot kind '" + s + "'");
}

const char* to_string(PlotKind kind) {
  switch (kind) {
    case PlotKind::HillPlot:
      return "hill-plot";
    case PlotKind::AngularHistogram:
      return "angular-histogram";
    case PlotKind::CondCdf:
      return "cond-cdf";
  }
  return "?";
}

std::string emit_plot_data(const Report& report, PlotKind kind) {
  const auto& results = report.doc.at("results");
  switch (kind) {
    case PlotKind::HillPlot: {
      if (!results.contains("hill_trace")) {
        fail(Error::Code::MissingBlock, "report has no hill_trace block");
      }
      std::string out = "k,alpha_hat\n";
      for (const auto& row : results["hill_trace"]) {
        out += std::to_string(row[0].get<long long>()) + "," +
               format_double(row[1].get<double>()) + "\n";
      }
      return out;
    }
    case PlotKind::AngularHistogram: {
      if (!results.contains("angular")) {
        fail(Error::Code::MissingBlock, "report has no angular block");
      }
      std::string out = "direction,mass\n";
      for (const auto& atom : results["angular"]["atoms"]) {
        std::string dir;
        for (const auto& c : atom["direction"]) {
          if (!dir.empty()) dir += '|';
          dir += format_double(c.get<double>());
        }
        out += dir + "," + format_double(atom["weight"].get<double>()) + "\n";
      }
      return out;
    }
    case PlotKind::CondCdf: {
      if (!results.contains("condlimit") || !results["condlimit"].contains("cond_cdf")) {
        fail(Error::Code::MissingBlock, "report has no conditional-CDF block");
      }
      const auto& block = results["condlimit"]["cond_cdf"];
      std::string out = "x,empirical,oracle\n";
      const auto& xs = block["x"];
      const auto& emp = block["empirical"];
      const auto& ora = block["oracle"];
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += format_double(xs[i].get<double>()) + "," + format_double(emp[i].get<double>()) +
               "," + format_double(ora[i].get<double>()) + "\n";
      }
      return out;
    }
  }
  fail(Error::Code::InvalidSpec, "unknown plot kind");
}

}  // namespace heavytail
