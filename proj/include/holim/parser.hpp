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

#ifndef HOLIM_PARSER_HPP
#define HOLIM_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "holim/surface.hpp"

namespace holim {

/// Splits `source` into tokens. The result always ends with a kEnd token.
/// Throws E-LEX on characters outside the grammar.
std::vector<Token> tokenize(std::string_view source, const std::string &file);

/// Parses a sequence of `def` / `axiom` declarations. Throws E-LEX or
/// E-PARSE; the latter lists the tokens that would have been accepted.
std::vector<SurfaceDecl> parse_file(std::string_view source,
                                    const std::string &file);

/// Parses a single term that must span the whole input.
SurfaceTerm parse_term(std::string_view source, const std::string &file = "<term>");

}  // namespace holim

#endif  // HOLIM_PARSER_HPP
