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

#ifndef TIMEDH_ERROR_HPP
#define TIMEDH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace timedh {

enum class ErrorKind {
  DuplicateId,
  CitationBeforePublication,
  NegativeCount,
  RefYearBeforePublication,
  InvalidRange,
  NoPapersInWindow,
  ZeroCitations,
  EmptyCorpus,
  MalformedHeader,
  UnknownPaperId,
  DuplicateYearRow,
  ParseError,
  SchemaError,
  ConflictingSelectors,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::CitationBeforePublication: return "CitationBeforePublication";
    case ErrorKind::NegativeCount: return "NegativeCount";
    case ErrorKind::RefYearBeforePublication: return "RefYearBeforePublication";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::NoPapersInWindow: return "NoPapersInWindow";
    case ErrorKind::ZeroCitations: return "ZeroCitations";
    case ErrorKind::EmptyCorpus: return "EmptyCorpus";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::UnknownPaperId: return "UnknownPaperId";
    case ErrorKind::DuplicateYearRow: return "DuplicateYearRow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::ConflictingSelectors: return "ConflictingSelectors";
  }
  return "Unknown";
}

/// Every failure raised by the library. `locator` names where in the input
/// the problem was found ("papers.csv:3", "/0/citations/2004"), or is empty
/// for errors that are not tied to a file position.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail, std::string locator = {})
      : std::runtime_error(compose(kind, detail, locator)),
        kind_(kind),
        detail_(std::move(detail)),
        locator_(std::move(locator)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::string& locator() const noexcept { return locator_; }

  /// Copy of this error with a locator attached (keeps an existing one).
  Error located(std::string locator) const {
    return Error(kind_, detail_, locator_.empty() ? std::move(locator) : locator_);
  }

 private:
  static std::string compose(ErrorKind kind, const std::string& detail,
                             const std::string& locator) {
    std::string out(to_string(kind));
    if (!locator.empty()) out += " at " + locator;
    if (!detail.empty()) out += ": " + detail;
    return out;
  }

  ErrorKind kind_;
  std::string detail_;
  std::string locator_;
};

}  // namespace timedh

#endif  // TIMEDH_ERROR_HPP
