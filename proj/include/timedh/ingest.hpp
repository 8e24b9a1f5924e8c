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

#ifndef TIMEDH_INGEST_HPP
#define TIMEDH_INGEST_HPP

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "timedh/csv.hpp"
#include "timedh/error.hpp"
#include "timedh/model.hpp"

namespace timedh {

struct IngestOptions {
  /// Move citations dated before the publication year onto the publication
  /// year instead of rejecting them.
  bool lenient_clamp = false;
};

inline constexpr std::string_view kPapersHeader = "paper_id,pub_year,title";
inline constexpr std::string_view kCitationsHeader = "paper_id,year,count";

namespace detail {

inline std::string at_line(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line);
}

inline Year parse_year_field(const std::string& text, const std::string& locator) {
  auto value = parse_int(text);
  if (!value || *value < -100000 || *value > 100000) {
    throw Error(ErrorKind::ParseError, "invalid year '" + text + "'", locator);
  }
  return static_cast<Year>(*value);
}

/// Adds a citation row, applying the clamp policy. Raw years must be unique
/// per paper; clamped counts accumulate on the publication year.
inline void add_citation(PaperRecord& paper, Year year, Count count, const IngestOptions& opts,
                         const std::string& locator) {
  if (year < paper.pub_year) {
    if (!opts.lenient_clamp) {
      throw Error(ErrorKind::CitationBeforePublication,
                  paper.id + " cited in " + std::to_string(year) + ", published " + std::to_string(paper.pub_year),
                  locator);
    }
    year = paper.pub_year;
  }
  paper.citations[year] += count;
}

}  // namespace detail

/// Reads the two-file long format: papers (`paper_id,pub_year,title`, the
/// title column may be left out entirely) and citations
/// (`paper_id,year,count`, one row per cited year, count >= 1).
inline Corpus parse_corpus_csv(std::string_view papers_text, std::string_view citations_text,
                               const IngestOptions& opts = {}, const std::string& papers_source = "papers.csv",
                               const std::string& citations_source = "citations.csv") {
  const auto paper_rows = csv::parse(papers_text, papers_source);
  if (paper_rows.empty() || paper_rows.front().line != 1) {
    throw Error(ErrorKind::MalformedHeader, "expected '" + std::string(kPapersHeader) + "'",
                detail::at_line(papers_source, 1));
  }
  const auto& header = paper_rows.front().fields;
  const bool has_title = header.size() == 3;
  if (!(header == std::vector<std::string>{"paper_id", "pub_year", "title"} ||
        header == std::vector<std::string>{"paper_id", "pub_year"})) {
    throw Error(ErrorKind::MalformedHeader, "expected '" + std::string(kPapersHeader) + "'",
                detail::at_line(papers_source, 1));
  }

  std::vector<PaperRecord> papers;
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t r = 1; r < paper_rows.size(); ++r) {
    const auto& row = paper_rows[r];
    const std::string where = detail::at_line(papers_source, row.line);
    if (row.fields.size() != header.size()) {
      throw Error(ErrorKind::ParseError,
                  "expected " + std::to_string(header.size()) + " fields, got " + std::to_string(row.fields.size()),
                  where);
    }
    PaperRecord paper;
    paper.id = row.fields[0];
    if (paper.id.empty()) throw Error(ErrorKind::ParseError, "empty paper_id", where);
    paper.pub_year = detail::parse_year_field(row.fields[1], where);
    if (has_title && !row.fields[2].empty()) paper.title = row.fields[2];
    if (!index.emplace(paper.id, papers.size()).second) throw Error(ErrorKind::DuplicateId, paper.id, where);
    papers.push_back(std::move(paper));
  }

  const auto cite_rows = csv::parse(citations_text, citations_source);
  if (cite_rows.empty() || cite_rows.front().line != 1 ||
      cite_rows.front().fields != std::vector<std::string>{"paper_id", "year", "count"}) {
    throw Error(ErrorKind::MalformedHeader, "expected '" + std::string(kCitationsHeader) + "'",
                detail::at_line(citations_source, 1));
  }
  std::set<std::pair<std::string, Year>> seen;
  for (std::size_t r = 1; r < cite_rows.size(); ++r) {
    const auto& row = cite_rows[r];
    const std::string where = detail::at_line(citations_source, row.line);
    if (row.fields.size() != 3) {
      throw Error(ErrorKind::ParseError, "expected 3 fields, got " + std::to_string(row.fields.size()), where);
    }
    auto it = index.find(row.fields[0]);
    if (it == index.end()) throw Error(ErrorKind::UnknownPaperId, row.fields[0], where);
    const Year year = detail::parse_year_field(row.fields[1], where);
    auto count = parse_int(row.fields[2]);
    if (!count) throw Error(ErrorKind::ParseError, "invalid count '" + row.fields[2] + "'", where);
    if (*count < 0) throw Error(ErrorKind::NegativeCount, row.fields[0] + " in " + row.fields[1], where);
    if (*count == 0) throw Error(ErrorKind::ParseError, "zero counts must be omitted", where);
    if (!seen.emplace(row.fields[0], year).second) {
      throw Error(ErrorKind::DuplicateYearRow, row.fields[0] + " in " + row.fields[1], where);
    }
    detail::add_citation(papers[it->second], year, *count, opts, where);
  }
  return validate_corpus(std::move(papers));
}

/// Reads a JSON array of {"id", "pub_year", "title"?, "citations"?} objects,
/// where "citations" maps year strings to positive counts.
inline Corpus parse_corpus_json(std::string_view text, const IngestOptions& opts = {}) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_array()) throw Error(ErrorKind::SchemaError, "top level must be an array", "/");

  std::vector<PaperRecord> papers;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& obj = doc[i];
    const std::string path = "/" + std::to_string(i);
    if (!obj.is_object()) throw Error(ErrorKind::SchemaError, "paper must be an object", path);
    for (const auto& [key, _] : obj.items()) {
      if (key != "id" && key != "pub_year" && key != "title" && key != "citations") {
        throw Error(ErrorKind::SchemaError, "unknown key '" + key + "'", path + "/" + key);
      }
    }
    PaperRecord paper;
    auto id = obj.find("id");
    if (id == obj.end() || !id->is_string() || id->get_ref<const std::string&>().empty()) {
      throw Error(ErrorKind::SchemaError, "id must be a non-empty string", path + "/id");
    }
    paper.id = id->get<std::string>();
    auto pub = obj.find("pub_year");
    if (pub == obj.end() || !pub->is_number_integer()) {
      throw Error(ErrorKind::SchemaError, "pub_year must be an integer", path + "/pub_year");
    }
    paper.pub_year = detail::parse_year_field(pub->dump(), path + "/pub_year");
    if (auto title = obj.find("title"); title != obj.end()) {
      if (!title->is_string()) throw Error(ErrorKind::SchemaError, "title must be a string", path + "/title");
      if (!title->get_ref<const std::string&>().empty()) paper.title = title->get<std::string>();
    }
    if (!ids.insert(paper.id).second) throw Error(ErrorKind::DuplicateId, paper.id, path + "/id");

    if (auto cites = obj.find("citations"); cites != obj.end()) {
      if (!cites->is_object()) throw Error(ErrorKind::SchemaError, "citations must be an object", path + "/citations");
      for (const auto& [key, value] : cites->items()) {
        const std::string where = path + "/citations/" + key;
        auto year = parse_int(key);
        if (!year || std::to_string(*year) != key) {
          throw Error(ErrorKind::SchemaError, "citation keys must be canonical integer years", where);
        }
        if (!value.is_number_integer() || value.get<long long>() < 1) {
          throw Error(ErrorKind::SchemaError, "citation counts must be positive integers", where);
        }
        const Year y = detail::parse_year_field(key, where);
        detail::add_citation(paper, y, value.get<Count>(), opts, where);
      }
    }
    papers.push_back(std::move(paper));
  }
  return validate_corpus(std::move(papers));
}

struct CsvExport {
  std::string papers;
  std::string citations;
};

inline CsvExport export_corpus_csv(const Corpus& corpus) {
  CsvExport out;
  out.papers = std::string(kPapersHeader) + "\n";
  out.citations = std::string(kCitationsHeader) + "\n";
  for (const auto& paper : corpus.papers()) {
    out.papers += csv::join({paper.id, std::to_string(paper.pub_year), paper.title.value_or("")}) + "\n";
    for (const auto& [year, count] : paper.citations) {
      out.citations += csv::join({paper.id, std::to_string(year), std::to_string(count)}) + "\n";
    }
  }
  return out;
}

inline std::string export_corpus_json(const Corpus& corpus) {
  using nlohmann::json;
  json doc = json::array();
  for (const auto& paper : corpus.papers()) {
    json obj = json::object();
    obj["id"] = paper.id;
    obj["pub_year"] = paper.pub_year;
    if (paper.title) obj["title"] = *paper.title;
    json cites = json::object();
    for (const auto& [year, count] : paper.citations) cites[std::to_string(year)] = count;
    obj["citations"] = std::move(cites);
    doc.push_back(std::move(obj));
  }
  return doc.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

}  // namespace timedh

#endif  // TIMEDH_INGEST_HPP
