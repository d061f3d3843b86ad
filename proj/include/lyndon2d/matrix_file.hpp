#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "lyndon2d/dictmatch.hpp"
#include "lyndon2d/error.hpp"

namespace lyndon2d {

/// Malformed matrix file. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public InvalidInput {
public:
  ParseError(std::size_t line, std::string detail, std::string source = {})
      : InvalidInput(render(line, detail, source)), line_(line), detail_(std::move(detail)) {}

  std::size_t line() const noexcept { return line_; }

  ParseError with_source(const std::string& source) const {
    return ParseError(line_, detail_, source);
  }

private:
  static std::string render(std::size_t line, const std::string& detail,
                            const std::string& source) {
    std::string msg = source.empty() ? "" : source + ": ";
    if (line)
      msg += "line " + std::to_string(line) + ": ";
    return msg + detail;
  }

  std::size_t line_;
  std::string detail_;
};

/// One row per line of printable non-whitespace bytes, all the same width.
/// Blank lines and lines starting with '#' are skipped. LF line endings,
/// trailing newline optional.
Matrix parse_matrix(std::string_view content);

Matrix read_matrix_file(const std::filesystem::path& path);

/// Rows joined by LF, with a trailing LF.
std::string format_matrix(const Matrix& rows);

} // namespace lyndon2d
