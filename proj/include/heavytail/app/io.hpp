#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace heavytail {

// Reads a rectangular numeric CSV into a row-per-observation matrix. A
// single leading header row is skipped when any of its cells is
// non-numeric. Errors carry 1-based row/column locations.
Eigen::MatrixXd ingest_csv(const std::string& path);

Eigen::MatrixXd parse_csv_text(const std::string& text, const std::string& origin = "<string>");

// Shortest round-trip decimal form (std::to_chars), locale-independent.
std::string format_double(double value);

std::string csv_from_matrix(const std::vector<std::string>& header, const Eigen::MatrixXd& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace heavytail
