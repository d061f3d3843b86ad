#include "lyndon2d/matrix_file.hpp"

#include <fstream>
#include <sstream>

namespace lyndon2d {

Matrix parse_matrix(std::string_view content) {
  Matrix rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  while (!content.empty()) {
    const auto nl = content.find('\n');
    const std::string_view line = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
    ++line_no;

    if (line.empty() || line.front() == '#')
      continue;
    for (std::size_t k = 0; k < line.size(); ++k) {
      const auto c = static_cast<unsigned char>(line[k]);
      if (c <= 0x20 || c == 0x7f)
        throw ParseError(line_no, "column " + std::to_string(k + 1) +
                                      ": whitespace or control byte in row");
    }
    if (!rows.empty() && line.size() != rows.front().size())
      throw ParseError(line_no, "row width " + std::to_string(line.size()) +
                                    " differs from width " +
                                    std::to_string(rows.front().size()) + " on line " +
                                    std::to_string(first_row_line));
    if (rows.empty())
      first_row_line = line_no;
    rows.emplace_back(line);
  }
  if (rows.empty())
    throw ParseError(0, "matrix file has no rows");
  return rows;
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError(0, "cannot open file", path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw e.with_source(path.string());
  }
}

std::string format_matrix(const Matrix& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

} // namespace lyndon2d
