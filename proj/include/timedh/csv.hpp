// Copyright 2026 The timedh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TIMEDH_CSV_HPP
#define TIMEDH_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

#include "timedh/error.hpp"

namespace timedh::csv {

struct Record {
  std::size_t line = 0;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separated, double-quoted fields with "" escapes,
/// LF or CRLF line ends. Blank lines are skipped.
inline std::vector<Record> parse(std::string_view text, const std::string& source = {}) {
  std::vector<Record> records;
  std::size_t line = 1;
  std::size_t i = 0;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;

  auto locate = [&](std::size_t at) { return source.empty() ? "line " + std::to_string(at) : source + ":" + std::to_string(at); };

  while (i < text.size()) {
    Record rec;
    rec.line = line;
    std::string field;
    bool quoted_field = false;
    bool end_of_record = false;
    while (!end_of_record) {
      if (i >= text.size()) {
        end_of_record = true;
        break;
      }
      char ch = text[i];
      if (ch == '"' && field.empty() && !quoted_field) {
        quoted_field = true;
        ++i;
        bool closed = false;
        while (i < text.size()) {
          char q = text[i];
          if (q == '"') {
            if (i + 1 < text.size() && text[i + 1] == '"') {
              field += '"';
              i += 2;
              continue;
            }
            ++i;
            closed = true;
            break;
          }
          if (q == '\n') ++line;
          field += q;
          ++i;
        }
        if (!closed) throw Error(ErrorKind::ParseError, "unterminated quoted field", locate(rec.line));
        if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          throw Error(ErrorKind::ParseError, "unexpected character after closing quote", locate(line));
        }
        continue;
      }
      if (ch == '"') throw Error(ErrorKind::ParseError, "stray quote in unquoted field", locate(line));
      if (ch == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        ++i;
        continue;
      }
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      if (ch == '\n' || ch == '\r') {
        ++i;
        ++line;
        end_of_record = true;
        break;
      }
      field += ch;
      ++i;
    }
    bool blank = rec.fields.empty() && field.empty() && !quoted_field;
    rec.fields.push_back(std::move(field));
    if (!blank) records.push_back(std::move(rec));
  }
  return records;
}

inline std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline std::string join(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += escape(fields[i]);
  }
  return out;
}

}  // namespace timedh::csv

#endif  // TIMEDH_CSV_HPP
