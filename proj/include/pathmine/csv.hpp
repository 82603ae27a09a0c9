#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pathmine::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180 with lenient line endings (\n or \r\n) and blank lines skipped.
// Throws Error{malformed_csv} on unbalanced quoting or junk after a closing quote.
Table parse(std::string_view bytes);

std::string escape_field(std::string_view field);
std::string join_row(const std::vector<std::string>& fields);

}  // namespace pathmine::csv
