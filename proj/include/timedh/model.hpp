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

#ifndef TIMEDH_MODEL_HPP
#define TIMEDH_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "timedh/error.hpp"
#include "timedh/rational.hpp"

namespace timedh {

using Year = int;

/// Sparse per-year citation counts. An absent year means zero citations.
using YearlyCitations = std::map<Year, Count>;

struct PaperRecord {
  std::string id;
  Year pub_year = 0;
  std::optional<std::string> title;
  YearlyCitations citations;

  /// Citations received up to and including `ref_year`.
  Count total_citations(Year ref_year) const {
    Count sum = 0;
    for (auto it = citations.begin(); it != citations.end() && it->first <= ref_year; ++it) {
      sum += it->second;
    }
    return sum;
  }

  /// Latest year with a recorded citation, if any.
  std::optional<Year> last_cited_year() const {
    if (citations.empty()) return std::nullopt;
    return citations.rbegin()->first;
  }

  friend bool operator==(const PaperRecord&, const PaperRecord&) = default;
};

/// Inclusive year interval; `start` may be unbounded.
struct YearWindow {
  std::optional<Year> start;
  Year end = 0;

  static YearWindow closed(Year start, Year end) { return YearWindow{start, end}; }
  static YearWindow up_to(Year end) { return YearWindow{std::nullopt, end}; }

  bool contains(Year year) const { return (!start || *start <= year) && year <= end; }
  bool is_valid() const { return !start || *start <= end; }

  friend bool operator==(const YearWindow&, const YearWindow&) = default;
};

class Corpus;
inline Corpus validate_corpus(std::vector<PaperRecord> papers);

/// Validated, immutable set of papers, ordered by id.
class Corpus {
 public:
  Corpus() = default;

  std::span<const PaperRecord> papers() const { return papers_; }
  std::size_t size() const { return papers_.size(); }
  bool empty() const { return papers_.empty(); }

  const PaperRecord* find(std::string_view id) const {
    auto it = std::lower_bound(papers_.begin(), papers_.end(), id,
                               [](const PaperRecord& p, std::string_view key) { return p.id < key; });
    return (it != papers_.end() && it->id == id) ? &*it : nullptr;
  }

  /// First publication year. Throws EmptyCorpus for an empty corpus.
  Year y0() const {
    require_non_empty();
    return y0_;
  }

  /// Last year with any activity (publication or citation).
  Year y_end() const {
    require_non_empty();
    return y_end_;
  }

  Count total_citations() const { return empty() ? 0 : total_citations(y_end_); }

  Count total_citations(Year ref_year) const {
    Count sum = 0;
    for (const auto& p : papers_) sum += p.total_citations(ref_year);
    return sum;
  }

  void require_non_empty() const {
    if (papers_.empty()) throw Error(ErrorKind::EmptyCorpus, "analysis requires at least one paper");
  }

  friend bool operator==(const Corpus&, const Corpus&) = default;

 private:
  friend Corpus validate_corpus(std::vector<PaperRecord> papers);

  std::vector<PaperRecord> papers_;
  Year y0_ = 0;
  Year y_end_ = 0;
};

/// Checks every record and builds a corpus. Zero-count years are dropped and
/// empty titles become absent, so equal data always yields equal corpora.
inline Corpus validate_corpus(std::vector<PaperRecord> papers) {
  std::sort(papers.begin(), papers.end(),
            [](const PaperRecord& a, const PaperRecord& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < papers.size(); ++i) {
    PaperRecord& p = papers[i];
    if (p.id.empty()) throw Error(ErrorKind::ParseError, "paper id must not be empty");
    if (i > 0 && papers[i - 1].id == p.id) throw Error(ErrorKind::DuplicateId, p.id);
    if (p.title && p.title->empty()) p.title.reset();
    for (auto it = p.citations.begin(); it != p.citations.end();) {
      if (it->first < p.pub_year) {
        throw Error(ErrorKind::CitationBeforePublication,
                    p.id + " cited in " + std::to_string(it->first) + ", published " +
                        std::to_string(p.pub_year));
      }
      if (it->second < 0) {
        throw Error(ErrorKind::NegativeCount, p.id + " in " + std::to_string(it->first));
      }
      it = it->second == 0 ? p.citations.erase(it) : std::next(it);
    }
  }

  Corpus corpus;
  if (!papers.empty()) {
    corpus.y0_ = papers.front().pub_year;
    corpus.y_end_ = papers.front().pub_year;
    for (const auto& p : papers) {
      corpus.y0_ = std::min(corpus.y0_, p.pub_year);
      corpus.y_end_ = std::max(corpus.y_end_, p.last_cited_year().value_or(p.pub_year));
      corpus.y_end_ = std::max(corpus.y_end_, p.pub_year);
    }
  }
  corpus.papers_ = std::move(papers);
  return corpus;
}

inline Count citations_in_window(const PaperRecord& paper, const YearWindow& window) {
  auto first = window.start ? paper.citations.lower_bound(*window.start) : paper.citations.begin();
  Count sum = 0;
  for (auto it = first; it != paper.citations.end() && it->first <= window.end; ++it) {
    sum += it->second;
  }
  return sum;
}

/// Running citation totals s(t) for t = 0 .. ref_year - pub_year, where s(t)
/// counts citations from the publication year through pub_year + t.
inline std::vector<Count> cumulative_series(const PaperRecord& paper, Year ref_year) {
  if (ref_year < paper.pub_year) {
    throw Error(ErrorKind::RefYearBeforePublication,
                paper.id + ": ref year " + std::to_string(ref_year) + " before publication " +
                    std::to_string(paper.pub_year));
  }
  std::vector<Count> series(static_cast<std::size_t>(ref_year - paper.pub_year) + 1, 0);
  for (const auto& [year, count] : paper.citations) {
    if (year > ref_year) break;
    series[static_cast<std::size_t>(year - paper.pub_year)] += count;
  }
  for (std::size_t t = 1; t < series.size(); ++t) series[t] += series[t - 1];
  return series;
}

}  // namespace timedh

#endif  // TIMEDH_MODEL_HPP
