#pragma once

// Minimal RFC-4180 reader used to check the exporter from the outside.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace testing {

using CsvRecord = std::vector<std::string>;

/// Parses a whole document. Returns nullopt on an unterminated quote or a
/// stray character after a closing quote.
inline std::optional<std::vector<CsvRecord>> parse_csv(std::string_view doc) {
  std::vector<CsvRecord> rows;
  CsvRecord row;
  std::string field;
  std::size_t i = 0;
  bool pending = false;  // a record has started
  while (i < doc.size()) {
    pending = true;
    if (doc[i] == '"' && field.empty()) {
      ++i;
      for (;;) {
        if (i >= doc.size()) return std::nullopt;
        if (doc[i] == '"') {
          if (i + 1 < doc.size() && doc[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          break;
        }
        field += doc[i++];
      }
      if (i < doc.size() && doc[i] != ',' && doc[i] != '\r' && doc[i] != '\n') return std::nullopt;
      continue;
    }
    if (doc[i] == ',') {
      row.push_back(std::move(field));
      field.clear();
      ++i;
    } else if (doc[i] == '\r' || doc[i] == '\n') {
      if (doc[i] == '\r' && i + 1 < doc.size() && doc[i + 1] == '\n') ++i;
      ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      pending = false;
    } else {
      field += doc[i++];
    }
  }
  if (pending) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace testing
