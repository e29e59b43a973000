#pragma once

#include <json.hpp>
#include <string>

namespace heavytail {

// Structured run report: versioned schema, config echo, result blocks,
// warnings. Serializes to JSON with sorted keys, so identical runs produce
// byte-identical documents; parses back losslessly.
struct Report {
  nlohmann::json doc;

  static Report fresh();

  std::string serialize() const;          // pretty, trailing newline
  static Report deserialize(const std::string& text);

  // Structural schema check: required top-level keys with the right shapes
  // and a known schema_version. Throws ParseError on violation.
  void validate() const;

  bool has_block(const std::string& name) const;
  void add_warning(const std::string& message);
};

enum class PlotKind { HillPlot, AngularHistogram, CondCdf };

PlotKind plot_kind_from_string(const std::string& s);
const char* to_string(PlotKind kind);

// Renders plot data from the corresponding result block as CSV text;
// MissingBlock when the run did not produce that block.
std::string emit_plot_data(const Report& report, PlotKind kind);

}  // namespace heavytail
