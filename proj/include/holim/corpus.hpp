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

#ifndef HOLIM_CORPUS_HPP
#define HOLIM_CORPUS_HPP

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "holim/kernel.hpp"
#include "holim/session.hpp"
#include "holim/surface.hpp"

namespace holim {

enum class LemmaKind { kDefinition, kTheorem, kAxiom };

struct LemmaSpec {
  std::string name;
  std::string file;  // relative to the corpus root
  LemmaKind kind;
};

/// `MANIFEST.tsv`: one `name<TAB>file<TAB>kind` line per required
/// declaration. Files are checked in order of first mention.
struct CorpusManifest {
  std::vector<LemmaSpec> lemmas;
  std::vector<std::string> files;

  /// Throws E-IO if unreadable, E-PARSE on malformed lines.
  static CorpusManifest load(const std::filesystem::path &root);
  static CorpusManifest parse(std::string_view text, const std::string &origin);
};

/// The corpus root: $HOLIM_CORPUS if set, else `corpus`.
std::filesystem::path default_corpus_root();

struct FileReport {
  std::string file;
  std::size_t declarations = 0;
  std::size_t failures = 0;
  double elapsed_ms = 0;
};

struct CheckReport {
  std::vector<DeclResult> results;  // in checking order
  std::vector<FileReport> files;
  std::vector<Diagnostic> failures;  // includes E-MISSING entries
  double elapsed_ms = 0;

  std::size_t declarations() const;
  bool ok() const { return failures.empty(); }
};

/// Called with each file's parsed declarations before checking; lets tests
/// inject faults.
using DeclRewrite =
    std::function<void(const std::string &file, std::vector<SurfaceDecl> &decls)>;

/// Checks every manifest file in order into `session`, then verifies that
/// each LemmaSpec was declared, checked, and has the declared kind.
CheckReport check_corpus(const CorpusManifest &manifest,
                         const std::filesystem::path &root, Session &session,
                         const DeclRewrite &rewrite = {});

}  // namespace holim

#endif  // HOLIM_CORPUS_HPP
