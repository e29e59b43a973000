#include "heavytail/app/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "heavytail/error.hpp"

namespace heavytail {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_cell(std::string_view cell, double& out) {
  cell = trim(cell);
  if (cell.empty()) return false;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      cells.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return cells;
}

}  // namespace

Eigen::MatrixXd parse_csv_text(const std::string& text, const std::string& origin) {
  std::vector<std::vector<double>> rows;
  Eigen::Index cols = -1;

  std::istringstream stream(text);
  std::string line;
  std::size_t lineno = 0;
  bool first_content_row = true;
  while (std::getline(stream, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split_row(line);

    std::vector<double> parsed(cells.size());
    bool all_numeric = true;
    std::size_t bad_col = 0;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (!parse_cell(cells[c], parsed[c])) {
        all_numeric = false;
        bad_col = c + 1;
        break;
      }
    }

    if (!all_numeric) {
      if (first_content_row) {  // header row
        first_content_row = false;
        continue;
      }
      fail(Error::Code::ParseError, origin + ": non-numeric cell at row " + std::to_string(lineno) +
                                        ", column " + std::to_string(bad_col));
    }
    first_content_row = false;

    if (cols < 0) {
      cols = static_cast<Eigen::Index>(parsed.size());
    } else if (static_cast<Eigen::Index>(parsed.size()) != cols) {
      fail(Error::Code::RaggedRows, origin + ": row " + std::to_string(lineno) + " has " +
                                        std::to_string(parsed.size()) + " columns, expected " +
                                        std::to_string(cols));
    }
    rows.push_back(std::move(parsed));
  }

  if (rows.empty()) fail(Error::Code::EmptyInput, origin + ": no data rows");

  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      out(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
    }
  }
  return out;
}

Eigen::MatrixXd ingest_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Error::Code::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv_text(buffer.str(), path);
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) fail(Error::Code::NonFinite, "unformattable double");
  return std::string(buf, ptr);
}

std::string csv_from_matrix(const std::vector<std::string>& header, const Eigen::MatrixXd& rows) {
  std::string out;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j > 0) out += ',';
    out += header[j];
  }
  out += '\n';
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    for (Eigen::Index j = 0; j < rows.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(rows(i, j));
    }
    out += '\n';
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Error::Code::ParseError, "cannot write '" + path + "'");
  out << content;
}

}  // namespace heavytail
