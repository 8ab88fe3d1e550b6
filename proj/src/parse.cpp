#include "gdet/parse.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iterator>
#include <vector>

#include "gdet/error.hpp"

namespace gdet {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_blank(s.back())) s.remove_suffix(1);
  return s;
}

double parse_field(std::string_view field, std::size_t line, std::size_t column) {
  std::string_view digits = field;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  // from_chars accepts "nan"/"inf"; only plain decimal literals are allowed.
  bool has_digit = false;
  for (char c : digits) {
    const bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '+' ||
                    c == 'e' || c == 'E';
    if (!ok) {
      throw ParseError("line " + std::to_string(line) + ", field " + std::to_string(column) +
                           ": not a decimal real: '" + std::string(field) + "'",
                       line, column);
    }
    has_digit = has_digit || (c >= '0' && c <= '9');
  }
  double value = 0.0;
  const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (!has_digit || ec != std::errc() || end != digits.data() + digits.size() ||
      !std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line) + ", field " + std::to_string(column) +
                         ": not a finite decimal real: '" + std::string(field) + "'",
                     line, column);
  }
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line, TextFormat format) {
  std::vector<std::string_view> fields;
  if (format == TextFormat::csv) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return fields;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

}  // namespace

Matrix parse_matrix(std::string_view text, TextFormat format) {
  std::vector<double> entries;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line, format);
    if (rows == 0) {
      cols = fields.size();
    } else if (fields.size() != cols) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                           std::to_string(cols) + " fields, found " +
                           std::to_string(fields.size()),
                       line_no);
    }
    for (std::size_t k = 0; k < fields.size(); ++k) {
      if (fields[k].empty()) {
        throw ParseError("line " + std::to_string(line_no) + ", field " +
                             std::to_string(k + 1) + ": empty field",
                         line_no, k + 1);
      }
      entries.push_back(parse_field(fields[k], line_no, k + 1));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError("no matrix rows in input", line_no);
  return Matrix(rows, cols, std::move(entries));
}

Matrix parse_matrix(std::istream& in, TextFormat format) {
  const std::string text(std::istreambuf_iterator<char>(in), {});
  return parse_matrix(text, format);
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string render_matrix(const Matrix& a, TextFormat format) {
  const char* sep = format == TextFormat::csv ? "," : " ";
  std::string out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j > 0) out += sep;
      out += format_real(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace gdet
