#include "pathmine/csv.hpp"

#include <algorithm>

#include "pathmine/errors.hpp"

namespace pathmine::csv {

Table parse(std::string_view in) {
  Table table;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool after_quote = false;  // just closed a quoted field, expect , or EOL
  bool record_open = false;  // current record has at least a pending field

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    after_quote = false;
  };
  auto end_record = [&] {
    end_field();
    bool blank = record.size() == 1 && record[0].empty();
    if (!blank) {
      if (table.header.empty() && table.rows.empty() && record_open) {
        table.header = std::move(record);
      } else {
        table.rows.push_back(std::move(record));
      }
    }
    record.clear();
    record_open = false;
  };

  std::size_t i = 0;
  const std::size_t n = in.size();
  while (i < n) {
    char c = in[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < n && in[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        in_quotes = false;
        after_quote = true;
        ++i;
        continue;
      }
      field += c;
      ++i;
      continue;
    }
    if (after_quote && c != ',' && c != '\r' && c != '\n') {
      throw Error(errc::malformed_csv,
                  "unexpected character after closing quote at byte " +
                      std::to_string(i));
    }
    switch (c) {
      case '"':
        if (field.empty()) {
          in_quotes = true;
          record_open = true;
        } else {
          field += c;  // literal quote inside an unquoted field
        }
        ++i;
        break;
      case ',':
        record_open = true;
        end_field();
        ++i;
        break;
      case '\r':
        if (i + 1 < n && in[i + 1] == '\n') ++i;
        [[fallthrough]];
      case '\n':
        end_record();
        ++i;
        break;
      default:
        field += c;
        record_open = true;
        ++i;
        break;
    }
  }
  if (in_quotes) {
    throw Error(errc::malformed_csv, "unterminated quoted field at end of input");
  }
  if (record_open || !field.empty() || !record.empty()) {
    end_record();
  }
  return table;
}

std::string escape_field(std::string_view field) {
  bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string join_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += escape_field(fields[i]);
  }
  out += '\n';
  return out;
}

}  // namespace pathmine::csv
