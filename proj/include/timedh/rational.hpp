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

#ifndef TIMEDH_RATIONAL_HPP
#define TIMEDH_RATIONAL_HPP

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace timedh {

using Count = std::int64_t;
using Rational = boost::rational<std::int64_t>;

/// Largest integer not above `value`.
inline std::int64_t floor(const Rational& value) {
  std::int64_t q = value.numerator() / value.denominator();
  if (value.numerator() % value.denominator() != 0 && value.numerator() < 0) --q;
  return q;
}

/// Decimal rendering with exactly `places` fractional digits, rounding half
/// away from zero.
inline std::string to_fixed(const Rational& value, int places) {
  __int128 scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const bool negative = value.numerator() < 0;
  __int128 num = value.numerator();
  if (negative) num = -num;
  const __int128 den = value.denominator();
  __int128 scaled = num * scale;
  __int128 q = scaled / den;
  if (2 * (scaled % den) >= den) ++q;

  auto digits = [](__int128 v) {
    if (v == 0) return std::string("0");
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  };

  std::string whole = digits(q / scale);
  std::string out = (negative && q != 0) ? "-" + whole : whole;
  if (places > 0) {
    std::string frac = digits(q % scale);
    frac.insert(frac.begin(), static_cast<std::size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

inline std::optional<std::int64_t> parse_int(std::string_view text) {
  std::int64_t value = 0;
  if (text.empty()) return std::nullopt;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
  return value;
}

/// Accepts "4", "0.15", "-2.5" and "3/2".
inline std::optional<Rational> parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (!num || !den || *den == 0) return std::nullopt;
    return Rational(*num, *den);
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rational(*v);
  }
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  if (frac.empty() || frac.size() > 12) return std::nullopt;
  for (char ch : frac) {
    if (ch < '0' || ch > '9') return std::nullopt;
  }
  bool negative = !whole.empty() && whole.front() == '-';
  std::string_view whole_digits = negative ? whole.substr(1) : whole;
  std::int64_t w = 0;
  if (!whole_digits.empty()) {
    if (whole_digits.front() == '-' || whole_digits.front() == '+') return std::nullopt;
    auto parsed = parse_int(whole_digits);
    if (!parsed) return std::nullopt;
    w = *parsed;
  }
  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  auto f = parse_int(frac);
  if (!f) return std::nullopt;
  Rational magnitude = Rational(w) + Rational(*f, scale);
  return negative ? -magnitude : magnitude;
}

}  // namespace timedh

#endif  // TIMEDH_RATIONAL_HPP
