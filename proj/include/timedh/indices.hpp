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

#ifndef TIMEDH_INDICES_HPP
#define TIMEDH_INDICES_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "timedh/error.hpp"
#include "timedh/model.hpp"
#include "timedh/rational.hpp"

namespace timedh {

/// Integer h plus, when requested, its interpolated refinement.
struct IndexValue {
  Count h = 0;
  std::optional<Rational> h_interp;

  friend bool operator==(const IndexValue&, const IndexValue&) = default;
};

/// Per-paper values sorted non-increasing, ties by ascending id. Rank r is
/// 1-based and c(r) = 0 beyond the end.
template <typename T>
struct RankedVector {
  std::vector<std::string> ids;
  std::vector<T> values;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  T at_rank(std::size_t rank) const { return rank >= 1 && rank <= values.size() ? values[rank - 1] : T(0); }
};

using RankedCitationVector = RankedVector<Count>;

namespace detail {

template <typename T>
RankedVector<T> sort_ranked(std::vector<std::pair<std::string, T>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return b.second < a.second;
    return a.first < b.first;
  });
  RankedVector<T> out;
  out.ids.reserve(entries.size());
  out.values.reserve(entries.size());
  for (auto& [id, value] : entries) {
    out.ids.push_back(std::move(id));
    out.values.push_back(value);
  }
  return out;
}

inline void require_non_negative(long long value, const char* what) {
  if (value < 0) throw Error(ErrorKind::InvalidRange, std::string(what) + " must be >= 0");
}

}  // namespace detail

/// Citation vector of the papers published in `pub_window`, each counting
/// only citations received in `cite_window`.
inline RankedCitationVector rank_citations(const Corpus& corpus, const YearWindow& pub_window,
                                           const YearWindow& cite_window) {
  std::vector<std::pair<std::string, Count>> entries;
  for (const auto& paper : corpus.papers()) {
    if (!pub_window.contains(paper.pub_year)) continue;
    entries.emplace_back(paper.id, citations_in_window(paper, cite_window));
  }
  return detail::sort_ranked(std::move(entries));
}

/// Largest rank r with c(r) >= r; 0 for an empty or uncited vector.
template <typename T>
Count h_from_ranked(std::span<const T> c) {
  Count h = 0;
  while (static_cast<std::size_t>(h) < c.size() && !(c[static_cast<std::size_t>(h)] < T(h + 1))) ++h;
  return h;
}

template <typename T>
Count h_from_ranked(const std::vector<T>& c) {
  return h_from_ranked(std::span<const T>(c));
}

/// Interpolated index: the crossing of the line through (h, c(h)) and
/// (h + 1, c(h + 1)) with the diagonal. Equals h when c(h) = h, and 0 when
/// h = 0.
template <typename T>
Rational interpolate_h(std::span<const T> c, Count h) {
  if (h <= 0) return Rational(0);
  auto value_at = [&](Count rank) {
    return rank >= 1 && static_cast<std::size_t>(rank) <= c.size() ? Rational(c[static_cast<std::size_t>(rank - 1)])
                                                                    : Rational(0);
  };
  const Rational at_h = value_at(h);
  const Rational drop = at_h - value_at(h + 1);
  return (at_h + Rational(h) * drop) / (Rational(1) + drop);
}

template <typename T>
Rational interpolate_h(const std::vector<T>& c, Count h) {
  return interpolate_h(std::span<const T>(c), h);
}

template <typename T>
IndexValue index_of(std::span<const T> c, bool interpolated) {
  IndexValue out;
  out.h = h_from_ranked(c);
  if (interpolated) out.h_interp = interpolate_h(c, out.h);
  return out;
}

inline IndexValue windowed_h(const Corpus& corpus, const YearWindow& pub_window,
                             const YearWindow& cite_window, bool interpolated = false) {
  auto ranked = rank_citations(corpus, pub_window, cite_window);
  return index_of(std::span<const Count>(ranked.values), interpolated);
}

/// h-index of the papers published in [y - t, y], counting their citations
/// in the same window.
inline IndexValue timed_h(const Corpus& corpus, Year y, int t, bool interpolated = false) {
  detail::require_non_negative(t, "window length t");
  const auto window = YearWindow::closed(y - t, y);
  return windowed_h(corpus, window, window, interpolated);
}

/// Column selector of an evolution table: a fixed window length, or the whole
/// career up to each year.
struct WindowLength {
  std::optional<int> years;

  static WindowLength fixed(int t) { return WindowLength{t}; }
  static WindowLength all() { return WindowLength{std::nullopt}; }
  bool is_all() const { return !years.has_value(); }

  std::string label() const { return is_all() ? "all" : std::to_string(*years); }

  friend bool operator==(const WindowLength&, const WindowLength&) = default;
};

struct EvolutionTable {
  std::vector<WindowLength> t_values;
  Year y_from = 0;
  Year y_to = 0;
  /// rows[y - y_from][column]
  std::vector<std::vector<IndexValue>> rows;

  const IndexValue& at(Year y, std::size_t column) const {
    return rows.at(static_cast<std::size_t>(y - y_from)).at(column);
  }
};

inline EvolutionTable evolution_table(const Corpus& corpus, std::vector<WindowLength> t_values,
                                      Year y_from, Year y_to, bool interpolated = false) {
  corpus.require_non_empty();
  if (y_from > y_to) {
    throw Error(ErrorKind::InvalidRange,
                "year range " + std::to_string(y_from) + ".." + std::to_string(y_to) + " is empty");
  }
  if (t_values.empty()) throw Error(ErrorKind::InvalidRange, "no window lengths given");
  for (const auto& t : t_values) {
    if (t.years) detail::require_non_negative(*t.years, "window length t");
  }

  EvolutionTable table;
  table.t_values = std::move(t_values);
  table.y_from = y_from;
  table.y_to = y_to;
  const Year y0 = corpus.y0();
  for (Year y = y_from; y <= y_to; ++y) {
    auto& row = table.rows.emplace_back();
    row.reserve(table.t_values.size());
    for (const auto& t : table.t_values) {
      const int length = t.years.value_or(std::max(0, y - y0));
      row.push_back(timed_h(corpus, y, length, interpolated));
    }
  }
  return table;
}

/// All publications, citations from [y - span, y] only.
inline IndexValue h5_index(const Corpus& corpus, Year y, int span = 5, bool interpolated = false) {
  detail::require_non_negative(span, "span");
  return windowed_h(corpus, YearWindow::up_to(y), YearWindow::closed(y - span, y), interpolated);
}

struct AifValue {
  Rational value;
  Count numerator = 0;
  Count denominator = 0;

  friend bool operator==(const AifValue&, const AifValue&) = default;
};

/// Citations received in year `y` by the papers published in
/// [y - delta_t, y - 1], per paper.
inline AifValue author_impact_factor(const Corpus& corpus, Year y, int delta_t = 5) {
  if (delta_t < 1) throw Error(ErrorKind::InvalidRange, "publication window must span at least one year");
  const auto pub_window = YearWindow::closed(y - delta_t, y - 1);
  const auto focal_year = YearWindow::closed(y, y);
  AifValue out;
  for (const auto& paper : corpus.papers()) {
    if (!pub_window.contains(paper.pub_year)) continue;
    out.numerator += citations_in_window(paper, focal_year);
    ++out.denominator;
  }
  if (out.denominator == 0) {
    throw Error(ErrorKind::NoPapersInWindow,
                "no papers published in " + std::to_string(y - delta_t) + ".." + std::to_string(y - 1));
  }
  out.value = Rational(out.numerator, out.denominator);
  return out;
}

/// Age-discounted scores gamma * (y - pub_year + 1)^(-delta) * citations up
/// to y, for papers published up to y.
inline RankedVector<Rational> contemporary_scores(const Corpus& corpus, Year y, Rational gamma,
                                                  int delta) {
  if (gamma <= 0) throw Error(ErrorKind::InvalidRange, "gamma must be > 0");
  if (delta < 0 || delta > 6) throw Error(ErrorKind::InvalidRange, "delta must be an integer in 0..6");
  std::vector<std::pair<std::string, Rational>> entries;
  for (const auto& paper : corpus.papers()) {
    if (paper.pub_year > y) continue;
    Count discount = 1;
    for (int i = 0; i < delta; ++i) discount *= (y - paper.pub_year + 1);
    const Count cites = citations_in_window(paper, YearWindow::up_to(y));
    entries.emplace_back(paper.id, gamma * Rational(cites, discount));
  }
  return detail::sort_ranked(std::move(entries));
}

inline IndexValue contemporary_h(const Corpus& corpus, Year y, Rational gamma = Rational(4), int delta = 1,
                                 bool interpolated = false) {
  auto ranked = contemporary_scores(corpus, y, gamma, delta);
  return index_of(std::span<const Rational>(ranked.values), interpolated);
}

}  // namespace timedh

#endif  // TIMEDH_INDICES_HPP
