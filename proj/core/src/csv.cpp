#include "rsparse/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "rsparse/error.hpp"

namespace rsparse {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

Matrix read_samples_csv(std::istream& in, bool skip_header) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_header && line_no == 1) continue;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = body.find(',', start);
      const std::string_view field = trim(body.substr(start, comma == std::string_view::npos ? body.npos : comma - start));
      double value = 0.0;
      const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw Error(ErrorCode::Io, "line " + std::to_string(line_no) + ": bad number '" + std::string(field) + "'");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (width == 0) width = row.size();
    if (row.size() != width) {
      throw Error(ErrorCode::Io, "line " + std::to_string(line_no) + ": expected " + std::to_string(width) +
                                     " columns, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorCode::Io, "no samples in input");
  Matrix x(static_cast<Index>(width), static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < width; ++j) x(static_cast<Index>(j), static_cast<Index>(i)) = rows[i][j];
  }
  return x;
}

Matrix read_samples_csv(const std::string& path, bool skip_header) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_samples_csv(in, skip_header);
}

void write_vector_csv(std::ostream& out, const Vector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(v[i]);
  }
  out << '\n';
}

}  // namespace rsparse
