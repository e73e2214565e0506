// Copyright 2026 The holim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLIM_DIAGNOSTIC_HPP
#define HOLIM_DIAGNOSTIC_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace holim {

/// A half-open region of a source file. Lines and columns are 1-based.
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  bool operator==(const SourceSpan &) const = default;
};

/// Merges two spans of the same file into the smallest span covering both.
SourceSpan cover(const SourceSpan &a, const SourceSpan &b);

enum class ErrorCode {
  kLex,         // E-LEX
  kParse,       // E-PARSE
  kType,        // E-TYPE
  kNotFunction, // E-NOTFN
  kUniverse,    // E-UNIVERSE
  kDuplicate,   // E-DUPLICATE
  kUnresolved,  // E-UNRESOLVED
  kUnify,       // E-UNIFY
  kOccurs,      // E-OCCURS
  kUnsolved,    // E-UNSOLVED
  kMissing,     // E-MISSING
  kStuck,       // E-STUCK
  kIo,          // E-IO
};

std::string_view code_name(ErrorCode code);

struct Diagnostic {
  ErrorCode code;
  std::string message;
  SourceSpan span;

  /// Renders as `file:line:col: error[CODE]: message`.
  std::string render() const;
};

/// The single exception type thrown by every checking stage.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, SourceSpan span = {});
  explicit Error(Diagnostic diagnostic);

  const Diagnostic &diagnostic() const { return diagnostic_; }
  ErrorCode code() const { return diagnostic_.code; }

  /// Returns a copy whose span is `span` unless one was already set.
  Error with_span(const SourceSpan &span) const;

 private:
  Diagnostic diagnostic_;
};

}  // namespace holim

#endif  // HOLIM_DIAGNOSTIC_HPP
