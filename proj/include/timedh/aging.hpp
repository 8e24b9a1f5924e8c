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

#ifndef TIMEDH_AGING_HPP
#define TIMEDH_AGING_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "timedh/error.hpp"
#include "timedh/indices.hpp"
#include "timedh/model.hpp"
#include "timedh/rational.hpp"

namespace timedh {

/// Window lengths after which a paper had collected given fractions of its
/// citations.
struct QuantileWindows {
  std::string paper_id;
  int age = 0;
  Count total = 0;
  std::map<Rational, int> t_q;
};

/// t_q is the smallest t with cumulative_series(t) >= q * total.
inline QuantileWindows quantile_windows(const PaperRecord& paper, std::span<const Rational> quantiles,
                                        Year ref_year) {
  const auto series = cumulative_series(paper, ref_year);
  QuantileWindows out;
  out.paper_id = paper.id;
  out.age = ref_year - paper.pub_year;
  out.total = series.back();
  if (out.total == 0) {
    throw Error(ErrorKind::ZeroCitations, paper.id + " has no citations up to " + std::to_string(ref_year));
  }
  for (const auto& q : quantiles) {
    if (q <= 0 || q > 1) throw Error(ErrorKind::InvalidRange, "quantiles must lie in (0, 1]");
    const Rational threshold = q * out.total;
    auto it = std::find_if(series.begin(), series.end(), [&](Count s) { return Rational(s) >= threshold; });
    out.t_q[q] = static_cast<int>(it - series.begin());
  }
  return out;
}

inline QuantileWindows quantile_windows(const PaperRecord& paper, const std::vector<Rational>& quantiles,
                                        Year ref_year) {
  return quantile_windows(paper, std::span<const Rational>(quantiles), ref_year);
}

struct RecencyCount {
  std::size_t count = 0;
  std::size_t eligible = 0;

  friend bool operator==(const RecencyCount&, const RecencyCount&) = default;
};

/// Papers with at least `min_citations` up to the reference year that were
/// also cited in its last `k` years. The reference year defaults to y_end.
inline bool cited_recently(const PaperRecord& paper, int k, Year ref_year) {
  return citations_in_window(paper, YearWindow::closed(ref_year - k + 1, ref_year)) > 0;
}

inline RecencyCount recently_cited_count(const Corpus& corpus, int k, Count min_citations,
                                         std::optional<Year> ref_year = std::nullopt) {
  if (k < 1) throw Error(ErrorKind::InvalidRange, "recency window k must be >= 1");
  const Year ref = ref_year.value_or(corpus.y_end());
  RecencyCount out;
  for (const auto& paper : corpus.papers()) {
    if (paper.pub_year > ref || paper.total_citations(ref) < min_citations) continue;
    ++out.eligible;
    if (cited_recently(paper, k, ref)) ++out.count;
  }
  return out;
}

struct MassGroup {
  std::size_t rank_from = 0;  // 1-based, inclusive
  std::size_t rank_to = 0;
  std::vector<std::string> paper_ids;
  Count mass = 0;
};

struct GroupPartition {
  std::vector<MassGroup> groups;
  Rational target_fraction;
  Year ref_year = 0;
  Count total = 0;
};

/// Greedy split of the citation-ranked papers into consecutive groups that
/// each reach `target_fraction` of all citations up to `ref_year`. The last
/// group holds the remainder and may be lighter. Uncited papers trailing a
/// completed group join it instead of forming an empty group.
inline GroupPartition partition_by_mass(const Corpus& corpus, Rational target_fraction = Rational(3, 20),
                                        std::optional<Year> ref_year = std::nullopt) {
  corpus.require_non_empty();
  if (target_fraction <= 0 || target_fraction > 1) {
    throw Error(ErrorKind::InvalidRange, "mass fraction must lie in (0, 1]");
  }
  GroupPartition out;
  out.target_fraction = target_fraction;
  out.ref_year = ref_year.value_or(corpus.y_end());
  auto ranked = rank_citations(corpus, YearWindow::up_to(corpus.y_end()), YearWindow::up_to(out.ref_year));
  for (Count c : ranked.values) out.total += c;
  if (out.total == 0) {
    throw Error(ErrorKind::ZeroCitations, "no citations up to " + std::to_string(out.ref_year));
  }

  const Rational threshold = target_fraction * out.total;
  Count assigned = 0;
  MassGroup current;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (current.paper_ids.empty()) current.rank_from = i + 1;
    current.rank_to = i + 1;
    current.paper_ids.push_back(ranked.ids[i]);
    current.mass += ranked.values[i];
    assigned += ranked.values[i];
    if (Rational(current.mass) >= threshold && assigned < out.total) {
      out.groups.push_back(std::move(current));
      current = MassGroup{};
    }
  }
  if (!current.paper_ids.empty()) out.groups.push_back(std::move(current));
  return out;
}

namespace detail {

/// Years since publication covered by a group's curves: up to the latest
/// cited offset of any member, clipped at the reference year.
inline int curve_span(const Corpus& corpus, const MassGroup& group, Year ref_year) {
  int span = 0;
  for (const auto& id : group.paper_ids) {
    const PaperRecord* paper = corpus.find(id);
    if (paper == nullptr) throw Error(ErrorKind::UnknownPaperId, id);
    if (paper->pub_year > ref_year) continue;
    auto it = paper->citations.upper_bound(ref_year);
    if (it == paper->citations.begin()) continue;
    span = std::max(span, std::prev(it)->first - paper->pub_year);
  }
  return span;
}

}  // namespace detail

/// N_g(t): citations received in year pub_year + t, summed over the group,
/// for t = 0 .. span. Year 0 is the (partial) publication year.
inline std::vector<std::vector<Count>> group_yearly_counts(const Corpus& corpus, const GroupPartition& partition) {
  std::vector<std::vector<Count>> out;
  out.reserve(partition.groups.size());
  for (const auto& group : partition.groups) {
    auto& counts = out.emplace_back(static_cast<std::size_t>(detail::curve_span(corpus, group, partition.ref_year)) + 1, 0);
    for (const auto& id : group.paper_ids) {
      const PaperRecord& paper = *corpus.find(id);
      for (const auto& [year, count] : paper.citations) {
        if (year > partition.ref_year) break;
        counts[static_cast<std::size_t>(year - paper.pub_year)] += count;
      }
    }
  }
  return out;
}

/// P_g(t): percentage of the group's mass received within t years of each
/// paper's own publication. Saturates at exactly 100 at the end of the span.
inline std::vector<std::vector<Rational>> group_cumulative_curves(const Corpus& corpus,
                                                                  const GroupPartition& partition) {
  const auto yearly = group_yearly_counts(corpus, partition);
  std::vector<std::vector<Rational>> out;
  out.reserve(yearly.size());
  for (std::size_t g = 0; g < yearly.size(); ++g) {
    const Count mass = partition.groups[g].mass;
    auto& curve = out.emplace_back();
    curve.reserve(yearly[g].size());
    Count running = 0;
    for (Count n : yearly[g]) {
      running += n;
      curve.push_back(mass == 0 ? Rational(0) : Rational(100 * running, mass));
    }
  }
  return out;
}

/// P_g(t) for any t >= 0, saturating past the stored span.
inline Rational percent_at(std::span<const Rational> curve, int t) {
  if (curve.empty()) return Rational(0);
  return static_cast<std::size_t>(t) < curve.size() ? curve[static_cast<std::size_t>(t)] : curve.back();
}

}  // namespace timedh

#endif  // TIMEDH_AGING_HPP
