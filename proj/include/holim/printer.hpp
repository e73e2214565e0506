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

#ifndef HOLIM_PRINTER_HPP
#define HOLIM_PRINTER_HPP

#include <string>
#include <vector>

#include "holim/surface.hpp"
#include "holim/term.hpp"

namespace holim {

/// Prints surface syntax with the minimum parentheses needed for the parser
/// to rebuild the same tree.
std::string print_term(const SurfaceTerm &t);
std::string print_decl(const SurfaceDecl &d);
std::string print_file(const std::vector<SurfaceDecl> &decls);

/// Converts a core term to surface syntax. `names` lists the enclosing
/// binders, outermost first. Binder names are renamed where they would
/// capture.
SurfaceTerm to_surface(const Term &t, const std::vector<std::string> &names = {});

/// print_term(to_surface(t, names)).
std::string show_term(const Term &t, const std::vector<std::string> &names = {});

}  // namespace holim

#endif  // HOLIM_PRINTER_HPP
