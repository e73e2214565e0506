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

#include "holim/diagnostic.hpp"

#include <fmt/format.h>

#include <utility>

namespace holim {

SourceSpan cover(const SourceSpan &a, const SourceSpan &b) {
  SourceSpan out = a;
  if (b.start_line < out.start_line ||
      (b.start_line == out.start_line && b.start_col < out.start_col)) {
    out.start_line = b.start_line;
    out.start_col = b.start_col;
  }
  if (b.end_line > out.end_line ||
      (b.end_line == out.end_line && b.end_col > out.end_col)) {
    out.end_line = b.end_line;
    out.end_col = b.end_col;
  }
  return out;
}

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLex: return "E-LEX";
    case ErrorCode::kParse: return "E-PARSE";
    case ErrorCode::kType: return "E-TYPE";
    case ErrorCode::kNotFunction: return "E-NOTFN";
    case ErrorCode::kUniverse: return "E-UNIVERSE";
    case ErrorCode::kDuplicate: return "E-DUPLICATE";
    case ErrorCode::kUnresolved: return "E-UNRESOLVED";
    case ErrorCode::kUnify: return "E-UNIFY";
    case ErrorCode::kOccurs: return "E-OCCURS";
    case ErrorCode::kUnsolved: return "E-UNSOLVED";
    case ErrorCode::kMissing: return "E-MISSING";
    case ErrorCode::kStuck: return "E-STUCK";
    case ErrorCode::kIo: return "E-IO";
  }
  return "E-?";
}

std::string Diagnostic::render() const {
  std::string_view file = span.file;
  if (file.empty()) file = "<input>";
  return fmt::format("{}:{}:{}: error[{}]: {}", file, span.start_line,
                     span.start_col, code_name(code), message);
}

Error::Error(ErrorCode code, std::string message, SourceSpan span)
    : Error(Diagnostic{code, std::move(message), std::move(span)}) {}

Error::Error(Diagnostic diagnostic)
    : std::runtime_error(diagnostic.render()),
      diagnostic_(std::move(diagnostic)) {}

Error Error::with_span(const SourceSpan &span) const {
  if (!diagnostic_.span.file.empty()) return *this;
  Diagnostic d = diagnostic_;
  d.span = span;
  return Error(std::move(d));
}

}  // namespace holim
