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

#ifndef TIMEDH_TABLE_HPP
#define TIMEDH_TABLE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "timedh/csv.hpp"
#include "timedh/rational.hpp"

namespace timedh {

/// Exact value rendered with a fixed number of decimals.
struct Decimal {
  Rational value;
  int places = 4;
};

using Cell = std::variant<std::monostate, Count, Decimal, std::string>;

struct OutputTable {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row) {
    if (row.size() != header.size()) {
      throw std::logic_error("row has " + std::to_string(row.size()) + " cells, header has " +
                             std::to_string(header.size()));
    }
    rows.push_back(std::move(row));
  }
};

inline std::string render_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(Count v) const { return std::to_string(v); }
    std::string operator()(const Decimal& d) const { return to_fixed(d.value, d.places); }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, cell);
}

inline std::string render_csv(const OutputTable& table) {
  std::string out = csv::join(table.header) + "\n";
  for (const auto& row : table.rows) {
    std::vector<std::string> fields;
    fields.reserve(row.size());
    for (const auto& cell : row) fields.push_back(render_cell(cell));
    out += csv::join(fields) + "\n";
  }
  return out;
}

/// Array of row objects in header order. Decimals become numbers carrying at
/// most the rendered precision; empty cells become null.
inline nlohmann::ordered_json to_json(const OutputTable& table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell& cell = row[i];
      auto& slot = obj[table.header[i]];
      if (std::holds_alternative<Count>(cell)) {
        slot = std::get<Count>(cell);
      } else if (const auto* d = std::get_if<Decimal>(&cell)) {
        slot = std::stod(to_fixed(d->value, d->places));
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        slot = *s;
      } else {
        slot = nullptr;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows;
}

}  // namespace timedh

#endif  // TIMEDH_TABLE_HPP
