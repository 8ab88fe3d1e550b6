#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "gdet/matrix.hpp"

namespace gdet {

enum class TextFormat { whitespace, csv };

/// Reads one matrix, one row per line.
///
/// Fields are separated by runs of spaces/tabs (whitespace) or by single
/// commas (csv). Blank lines and lines whose first non-blank character is
/// '#' are skipped. NaN and infinity literals are rejected. Errors carry the
/// 1-based line and field column.
Matrix parse_matrix(std::string_view text, TextFormat format = TextFormat::whitespace);
Matrix parse_matrix(std::istream& in, TextFormat format = TextFormat::whitespace);

/// Inverse of parse_matrix; entries are printed with 17 significant digits so
/// that parsing the result reproduces the matrix bit for bit.
std::string render_matrix(const Matrix& a, TextFormat format = TextFormat::whitespace);

/// %.17g formatting.
std::string format_real(double x);

}  // namespace gdet
