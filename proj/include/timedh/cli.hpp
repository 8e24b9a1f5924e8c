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

#ifndef TIMEDH_CLI_HPP
#define TIMEDH_CLI_HPP

#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "timedh/aging.hpp"
#include "timedh/error.hpp"
#include "timedh/indices.hpp"
#include "timedh/ingest.hpp"
#include "timedh/model.hpp"
#include "timedh/table.hpp"

namespace timedh::cli {

enum class Format { csv, json };

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open file", path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

/// One path: JSON corpus. Two paths: papers CSV then citations CSV.
inline Corpus load_corpus(const std::vector<std::string>& paths, bool lenient) {
  IngestOptions opts;
  opts.lenient_clamp = lenient;
  if (paths.size() == 1) return parse_corpus_json(read_file(paths[0]), opts);
  if (paths.size() == 2) return parse_corpus_csv(read_file(paths[0]), read_file(paths[1]), opts, paths[0], paths[1]);
  throw Error(ErrorKind::ConflictingSelectors, "expected a JSON corpus or a papers.csv/citations.csv pair");
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

/// "2,3,5,10,all"
inline std::vector<WindowLength> parse_t_list(const std::string& text) {
  std::vector<WindowLength> out;
  for (const auto& item : split(text, ',')) {
    if (item == "all") {
      out.push_back(WindowLength::all());
      continue;
    }
    auto t = parse_int(item);
    if (!t || *t < 0 || *t > 10000) throw Error(ErrorKind::InvalidRange, "bad window length '" + item + "' in --t-list");
    out.push_back(WindowLength::fixed(static_cast<int>(*t)));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidRange, "--t-list is empty");
  return out;
}

/// "a:b" with a = "*" for an unbounded start.
inline YearWindow parse_window(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::InvalidRange, "window '" + text + "' must look like a:b");
  const std::string a = text.substr(0, colon);
  auto b = parse_int(text.substr(colon + 1));
  if (!b) throw Error(ErrorKind::InvalidRange, "bad window end in '" + text + "'");
  YearWindow window = YearWindow::up_to(static_cast<Year>(*b));
  if (a != "*") {
    auto start = parse_int(a);
    if (!start) throw Error(ErrorKind::InvalidRange, "bad window start in '" + text + "'");
    window.start = static_cast<Year>(*start);
  }
  if (!window.is_valid()) throw Error(ErrorKind::InvalidRange, "window '" + text + "' ends before it starts");
  return window;
}

inline std::string validate_summary(const Corpus& corpus) {
  if (corpus.empty()) return "0 papers, 0 citations";
  return std::to_string(corpus.size()) + (corpus.size() == 1 ? " paper, " : " papers, ") +
         std::to_string(corpus.y0()) + "–" + std::to_string(corpus.y_end()) + ", " +
         std::to_string(corpus.total_citations()) + (corpus.total_citations() == 1 ? " citation" : " citations");
}

struct EvolutionOptions {
  std::vector<WindowLength> t_list{WindowLength::fixed(2), WindowLength::fixed(3), WindowLength::fixed(5),
                                   WindowLength::fixed(10), WindowLength::all()};
  std::optional<Year> from;
  std::optional<Year> to;
  bool interpolated = false;
};

/// `year,t=2,...,t=all`, one row per year.
inline OutputTable evolution_output(const Corpus& corpus, const EvolutionOptions& opts) {
  corpus.require_non_empty();
  const auto table = evolution_table(corpus, opts.t_list, opts.from.value_or(corpus.y0()),
                                     opts.to.value_or(corpus.y_end()), opts.interpolated);
  OutputTable out;
  out.header.push_back("year");
  for (const auto& t : table.t_values) out.header.push_back("t=" + t.label());
  for (Year y = table.y_from; y <= table.y_to; ++y) {
    std::vector<Cell> row{Count{y}};
    for (std::size_t c = 0; c < table.t_values.size(); ++c) {
      const IndexValue& v = table.at(y, c);
      if (v.h_interp) {
        row.emplace_back(Decimal{*v.h_interp, 4});
      } else {
        row.emplace_back(v.h);
      }
    }
    out.add_row(std::move(row));
  }
  return out;
}

struct AgingOptions {
  Count min_citations = 20;
  /// Percentages as typed by the user; they name the output columns.
  std::vector<std::string> quantiles{"25", "50", "75", "90"};
  std::optional<Year> ref_year;
  int recent_years = 2;
};

/// One row per paper with at least max(1, min_citations) citations up to the
/// reference year, ranked by decreasing total.
inline OutputTable aging_output(const Corpus& corpus, const AgingOptions& opts) {
  corpus.require_non_empty();
  if (opts.recent_years < 1) throw Error(ErrorKind::InvalidRange, "--recent-years must be >= 1");
  const Year ref = opts.ref_year.value_or(corpus.y_end());
  std::vector<Rational> qs;
  for (const auto& label : opts.quantiles) {
    auto pct = parse_rational(label);
    if (!pct || *pct <= 0 || *pct > 100) throw Error(ErrorKind::InvalidRange, "bad quantile '" + label + "'");
    qs.push_back(*pct / 100);
  }

  OutputTable out;
  out.header = {"rank", "paper_id", "pub_year", "age", "total"};
  for (const auto& label : opts.quantiles) out.header.push_back("t" + label);
  out.header.push_back("recently_cited");

  std::vector<std::pair<std::string, Count>> eligible;
  for (const auto& paper : corpus.papers()) {
    if (paper.pub_year > ref) continue;
    const Count total = paper.total_citations(ref);
    if (total >= std::max<Count>(1, opts.min_citations)) eligible.emplace_back(paper.id, total);
  }
  auto ranked = timedh::detail::sort_ranked(std::move(eligible));
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const PaperRecord& paper = *corpus.find(ranked.ids[i]);
    const auto windows = quantile_windows(paper, qs, ref);
    std::vector<Cell> row{Count(i + 1), paper.id, Count{paper.pub_year}, Count{windows.age}, windows.total};
    for (const auto& q : qs) row.emplace_back(Count{windows.t_q.at(q)});
    row.emplace_back(Count{cited_recently(paper, opts.recent_years, ref) ? 1 : 0});
    out.add_row(std::move(row));
  }
  return out;
}

enum class GroupMode { cumulative, yearly };

struct GroupsOptions {
  Rational mass_fraction{3, 20};
  GroupMode mode = GroupMode::cumulative;
  std::optional<Year> ref_year;
};

struct GroupsOutput {
  OutputTable manifest;  // group,rank_from,rank_to,mass
  OutputTable curves;    // group,t,value
};

inline GroupsOutput groups_output(const Corpus& corpus, const GroupsOptions& opts) {
  const auto partition = partition_by_mass(corpus, opts.mass_fraction, opts.ref_year);
  GroupsOutput out;
  out.manifest.header = {"group", "rank_from", "rank_to", "mass"};
  for (std::size_t g = 0; g < partition.groups.size(); ++g) {
    const auto& group = partition.groups[g];
    out.manifest.add_row({Count(g + 1), Count(group.rank_from), Count(group.rank_to), group.mass});
  }
  out.curves.header = {"group", "t", "value"};
  if (opts.mode == GroupMode::yearly) {
    const auto curves = group_yearly_counts(corpus, partition);
    for (std::size_t g = 0; g < curves.size(); ++g) {
      for (std::size_t t = 0; t < curves[g].size(); ++t) out.curves.add_row({Count(g + 1), Count(t), curves[g][t]});
    }
  } else {
    const auto curves = group_cumulative_curves(corpus, partition);
    for (std::size_t g = 0; g < curves.size(); ++g) {
      for (std::size_t t = 0; t < curves[g].size(); ++t) {
        out.curves.add_row({Count(g + 1), Count(t), Decimal{curves[g][t], 2}});
      }
    }
  }
  return out;
}

struct IndexRequest {
  std::optional<Year> year;
  std::optional<int> t;
  std::optional<std::string> pub_window;
  std::optional<std::string> cite_window;
  std::optional<std::string> preset;
  bool interpolated = false;
  std::optional<int> span;
  std::optional<int> delta_t;
  std::optional<std::string> gamma;
  std::optional<int> delta;
};

inline std::string render_index(const IndexValue& v) {
  std::string out = std::to_string(v.h);
  if (v.h_interp) out += " / " + to_fixed(*v.h_interp, 4);
  return out;
}

/// Exactly one selection style: --year with --t, a window pair, or a preset.
inline std::string index_output(const Corpus& corpus, const IndexRequest& req) {
  const bool windows = req.pub_window || req.cite_window;
  const int styles = (req.preset ? 1 : 0) + (windows ? 1 : 0) + (req.t ? 1 : 0);
  if (styles != 1) {
    throw Error(ErrorKind::ConflictingSelectors,
                "use exactly one of --year/--t, --pub-window/--cite-window, --preset");
  }
  const bool preset_h5 = req.preset && *req.preset == "h5";
  const bool preset_aif = req.preset && *req.preset == "aif";
  const bool preset_cont = req.preset && *req.preset == "contemporary";
  if ((req.span && !preset_h5) || (req.delta_t && !preset_aif) || ((req.gamma || req.delta) && !preset_cont)) {
    throw Error(ErrorKind::ConflictingSelectors, "preset parameter given without its preset");
  }

  if (windows) {
    if (!req.pub_window || !req.cite_window) {
      throw Error(ErrorKind::ConflictingSelectors, "--pub-window and --cite-window go together");
    }
    if (req.year) throw Error(ErrorKind::ConflictingSelectors, "--year does not combine with explicit windows");
    return render_index(windowed_h(corpus, parse_window(*req.pub_window), parse_window(*req.cite_window),
                                   req.interpolated));
  }
  if (req.t) {
    if (!req.year) throw Error(ErrorKind::ConflictingSelectors, "--t needs --year");
    return render_index(timed_h(corpus, *req.year, *req.t, req.interpolated));
  }

  corpus.require_non_empty();
  const Year y = req.year.value_or(corpus.y_end());
  if (preset_h5) return render_index(h5_index(corpus, y, req.span.value_or(5), req.interpolated));
  if (preset_aif) {
    if (req.interpolated) throw Error(ErrorKind::ConflictingSelectors, "--interpolated does not apply to aif");
    return to_fixed(author_impact_factor(corpus, y, req.delta_t.value_or(5)).value, 4);
  }
  if (preset_cont) {
    Rational gamma(4);
    if (req.gamma) {
      auto parsed = parse_rational(*req.gamma);
      if (!parsed) throw Error(ErrorKind::InvalidRange, "bad --gamma '" + *req.gamma + "'");
      gamma = *parsed;
    }
    return render_index(contemporary_h(corpus, y, gamma, req.delta.value_or(1), req.interpolated));
  }
  throw Error(ErrorKind::ConflictingSelectors, "unknown preset '" + *req.preset + "'");
}

namespace detail {

inline void emit(const std::string& data, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << data;
    return;
  }
  std::ofstream file(output, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot write file", output);
  file << data;
}

inline std::string render(const OutputTable& table, Format format) {
  return format == Format::json ? to_json(table).dump(2) + "\n" : render_csv(table);
}

inline bool is_usage_error(ErrorKind kind) {
  return kind == ErrorKind::ConflictingSelectors || kind == ErrorKind::InvalidRange;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Exit codes: 0 success,
/// 1 validation or parse failure, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Timed h-index and citation aging analytics", "timedh"};
  app.require_subcommand(1);

  std::vector<std::string> inputs;
  bool lenient = false;
  std::string output;
  Format format = Format::csv;
  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}};

  auto add_common = [&](CLI::App* cmd, bool tabular) {
    cmd->add_option("inputs", inputs, "corpus.json, or papers.csv citations.csv")->required()->expected(1, 2);
    cmd->add_flag("--lenient", lenient, "clamp citations dated before publication onto the publication year");
    if (tabular) {
      cmd->add_option("--format", format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
      cmd->add_option("--output", output, "write to this file instead of standard output");
    }
  };

  auto* validate_cmd = app.add_subcommand("validate", "parse, validate and summarize a corpus");
  add_common(validate_cmd, false);

  EvolutionOptions evo;
  std::string t_list = "2,3,5,10,all";
  auto* evolution_cmd = app.add_subcommand("evolution", "timed h-index h_t(y) per year and window length");
  add_common(evolution_cmd, true);
  evolution_cmd->add_option("--t-list", t_list, "window lengths, 'all' for the whole career");
  evolution_cmd->add_option("--from", evo.from, "first year (default: first publication)");
  evolution_cmd->add_option("--to", evo.to, "last year (default: last activity)");
  evolution_cmd->add_flag("--interpolated", evo.interpolated, "interpolated index values");

  AgingOptions aging;
  std::string quantiles = "25,50,75,90";
  auto* aging_cmd = app.add_subcommand("aging", "per-paper citation windows for given percentages");
  add_common(aging_cmd, true);
  aging_cmd->add_option("--min-citations", aging.min_citations, "minimum total citations")->capture_default_str();
  aging_cmd->add_option("--quantiles", quantiles, "percentages of the total")->capture_default_str();
  aging_cmd->add_option("--ref-year", aging.ref_year, "count citations up to this year");
  aging_cmd->add_option("--recent-years", aging.recent_years, "recency window in years")->capture_default_str();

  GroupsOptions groups;
  std::string mass_fraction = "0.15";
  const std::map<std::string, GroupMode> modes{{"cumulative", GroupMode::cumulative}, {"yearly", GroupMode::yearly}};
  auto* groups_cmd = app.add_subcommand("groups", "citation-mass groups and their aging curves");
  add_common(groups_cmd, true);
  groups_cmd->add_option("--mass-fraction", mass_fraction, "target share of all citations per group")
      ->capture_default_str();
  groups_cmd->add_option("--mode", groups.mode, "cumulative or yearly")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  groups_cmd->add_option("--ref-year", groups.ref_year, "count citations up to this year");

  IndexRequest req;
  auto* index_cmd = app.add_subcommand("index", "a single index value");
  add_common(index_cmd, false);
  index_cmd->add_option("--year", req.year, "evaluation year");
  index_cmd->add_option("--t", req.t, "window length for the timed index");
  index_cmd->add_option("--pub-window", req.pub_window, "publication window a:b, a may be *");
  index_cmd->add_option("--cite-window", req.cite_window, "citation window a:b, a may be *");
  index_cmd->add_option("--preset", req.preset, "h5, aif or contemporary")
      ->check(CLI::IsMember({"h5", "aif", "contemporary"}));
  index_cmd->add_flag("--interpolated", req.interpolated, "also print the interpolated value");
  index_cmd->add_option("--span", req.span, "h5: citation years before --year (default 5)");
  index_cmd->add_option("--delta-t", req.delta_t, "aif: publication window length (default 5)");
  index_cmd->add_option("--gamma", req.gamma, "contemporary: scale factor (default 4)");
  index_cmd->add_option("--delta", req.delta, "contemporary: integer age exponent (default 1)");

  auto* export_cmd = app.add_subcommand("export", "write the corpus in canonical form");
  add_common(export_cmd, false);
  std::string export_format;
  std::string out_dir;
  export_cmd->add_option("--format", export_format, "csv or json")->required()->check(CLI::IsMember({"csv", "json"}));
  export_cmd->add_option("--output", output, "json: output file");
  export_cmd->add_option("--output-dir", out_dir, "csv: directory for papers.csv and citations.csv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Corpus corpus = load_corpus(inputs, lenient);
    if (validate_cmd->parsed()) {
      out << validate_summary(corpus) << "\n";
    } else if (evolution_cmd->parsed()) {
      evo.t_list = parse_t_list(t_list);
      detail::emit(detail::render(evolution_output(corpus, evo), format), output, out);
    } else if (aging_cmd->parsed()) {
      aging.quantiles = split(quantiles, ',');
      detail::emit(detail::render(aging_output(corpus, aging), format), output, out);
    } else if (groups_cmd->parsed()) {
      auto fraction = parse_rational(mass_fraction);
      if (!fraction) throw Error(ErrorKind::InvalidRange, "bad --mass-fraction '" + mass_fraction + "'");
      groups.mass_fraction = *fraction;
      const auto tables = groups_output(corpus, groups);
      std::string data;
      if (format == Format::json) {
        nlohmann::ordered_json doc;
        doc["groups"] = to_json(tables.manifest);
        doc["curves"] = to_json(tables.curves);
        data = doc.dump(2) + "\n";
      } else {
        data = render_csv(tables.manifest) + "\n" + render_csv(tables.curves);
      }
      detail::emit(data, output, out);
    } else if (index_cmd->parsed()) {
      out << index_output(corpus, req) << "\n";
    } else if (export_cmd->parsed()) {
      if (export_format == "json") {
        detail::emit(export_corpus_json(corpus), output, out);
      } else {
        if (out_dir.empty()) throw Error(ErrorKind::ConflictingSelectors, "csv export needs --output-dir");
        const auto files = export_corpus_csv(corpus);
        detail::emit(files.papers, out_dir + "/papers.csv", out);
        detail::emit(files.citations, out_dir + "/citations.csv", out);
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return detail::is_usage_error(e.kind()) ? 2 : 1;
  }
  return 0;
}

inline int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace timedh::cli

#endif  // TIMEDH_CLI_HPP
