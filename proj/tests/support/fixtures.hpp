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

#ifndef TIMEDH_TESTS_FIXTURES_HPP
#define TIMEDH_TESTS_FIXTURES_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "timedh/model.hpp"

namespace timedh::testing {

// P1(2000, {2000:1, 2001:3, 2003:2}), P2(2001, {2001:2, 2002:1}),
// P3(2004, {2004:1, 2005:1}).
inline PaperRecord toy_p1() { return {"P1", 2000, std::nullopt, {{2000, 1}, {2001, 3}, {2003, 2}}}; }
inline PaperRecord toy_p2() { return {"P2", 2001, std::nullopt, {{2001, 2}, {2002, 1}}}; }
inline PaperRecord toy_p3() { return {"P3", 2004, std::nullopt, {{2004, 1}, {2005, 1}}}; }

inline Corpus toy_corpus() { return validate_corpus({toy_p1(), toy_p2(), toy_p3()}); }

struct RandomCorpusParams {
  int max_papers = 200;
  int max_career = 40;
  Count max_count = 50;
};

/// Synthetic career: papers spread over up to `max_career` years, each cited
/// in a random subset of the years from publication to the end of the career.
inline Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusParams& params = {}) {
  std::uniform_int_distribution<int> n_dist(1, params.max_papers);
  std::uniform_int_distribution<int> career_dist(0, params.max_career);
  std::uniform_int_distribution<int> start_dist(1950, 2000);
  std::uniform_real_distribution<double> density_dist(0.05, 0.9);
  std::uniform_int_distribution<Count> count_dist(1, params.max_count);

  const int n = n_dist(rng);
  const int career = career_dist(rng);
  const int y0 = start_dist(rng);
  const double density = density_dist(rng);
  std::uniform_int_distribution<int> pub_dist(y0, y0 + career);
  std::bernoulli_distribution cited(density);

  std::vector<PaperRecord> papers;
  papers.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    PaperRecord p;
    p.id = "W" + std::to_string(i);
    p.pub_year = pub_dist(rng);
    for (int y = p.pub_year; y <= y0 + career; ++y) {
      if (cited(rng)) p.citations[y] = count_dist(rng);
    }
    if (i % 7 == 3) p.title = "Title, \"quoted\" " + std::to_string(i);
    papers.push_back(std::move(p));
  }
  return validate_corpus(std::move(papers));
}

/// Random year window around the corpus span; sometimes unbounded, sometimes
/// entirely outside the data.
inline YearWindow random_window(std::mt19937_64& rng, const Corpus& corpus) {
  std::uniform_int_distribution<int> year_dist(corpus.y0() - 3, corpus.y_end() + 3);
  int a = year_dist(rng);
  int b = year_dist(rng);
  if (a > b) std::swap(a, b);
  if (std::bernoulli_distribution(0.2)(rng)) return YearWindow::up_to(b);
  return YearWindow::closed(a, b);
}

}  // namespace timedh::testing

#endif  // TIMEDH_TESTS_FIXTURES_HPP
