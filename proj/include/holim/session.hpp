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

#ifndef HOLIM_SESSION_HPP
#define HOLIM_SESSION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holim/diagnostic.hpp"
#include "holim/global_env.hpp"
#include "holim/kernel.hpp"
#include "holim/surface.hpp"
#include "holim/term.hpp"

namespace holim {

struct DeclResult {
  std::string name;  // empty for file-level failures (I/O, parsing)
  std::string file;
  std::optional<Diagnostic> error;

  bool ok() const { return !error.has_value(); }
};

/// Reads a whole file. Throws E-IO.
std::string read_file(const std::string &path);

/// Accumulates checked declarations across files: parse, elaborate, then
/// re-check in the kernel.
class Session {
 public:
  explicit Session(KernelOptions options = {}) : options_(options) {}

  /// Checks declarations in order. A declaration that fails is reported and,
  /// when its type is still well formed, kept as an opaque constant so that
  /// later declarations are checked against it.
  std::vector<DeclResult> check_decls(const std::vector<SurfaceDecl> &decls,
                                      const std::string &file);
  std::vector<DeclResult> check_source(std::string_view source,
                                       const std::string &file);
  std::vector<DeclResult> check_file(const std::string &path);

  const GlobalEnv &env() const { return env_; }
  const KernelOptions &options() const { return options_; }

  /// The full normal form of a checked global's value; axioms and failed
  /// declarations give their own neutral name. Throws E-MISSING.
  Term normal_form(const std::string &name) const;
  /// The declared type of a checked global. Throws E-MISSING.
  Term type_of(const std::string &name) const;

 private:
  GlobalEnv env_;
  KernelOptions options_;
};

}  // namespace holim

#endif  // HOLIM_SESSION_HPP
