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

#include "holim/corpus.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

#include "holim/parser.hpp"

namespace holim {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<std::string> split_tabs(const std::string &line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

}  // namespace

CorpusManifest CorpusManifest::parse(std::string_view text,
                                     const std::string &origin) {
  CorpusManifest m;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split_tabs(line);
    SourceSpan span{origin, lineno, 1, lineno, static_cast<int>(line.size()) + 1};
    if (cols.size() != 3) {
      throw Error(ErrorCode::kParse,
                  "manifest lines have the form name<TAB>file<TAB>kind", span);
    }
    LemmaKind kind;
    if (cols[2] == "definition") {
      kind = LemmaKind::kDefinition;
    } else if (cols[2] == "theorem") {
      kind = LemmaKind::kTheorem;
    } else if (cols[2] == "axiom") {
      kind = LemmaKind::kAxiom;
    } else {
      throw Error(ErrorCode::kParse, "unknown kind '" + cols[2] + "'", span);
    }
    if (std::find(m.files.begin(), m.files.end(), cols[1]) == m.files.end()) {
      m.files.push_back(cols[1]);
    }
    m.lemmas.push_back(LemmaSpec{cols[0], cols[1], kind});
  }
  return m;
}

CorpusManifest CorpusManifest::load(const std::filesystem::path &root) {
  std::filesystem::path path = root / "MANIFEST.tsv";
  return parse(read_file(path.string()), path.string());
}

std::filesystem::path default_corpus_root() {
  if (const char *env = std::getenv("HOLIM_CORPUS"); env != nullptr && *env) {
    return env;
  }
  return "corpus";
}

std::size_t CheckReport::declarations() const {
  std::size_t n = 0;
  for (const FileReport &f : files) n += f.declarations;
  return n;
}

CheckReport check_corpus(const CorpusManifest &manifest,
                         const std::filesystem::path &root, Session &session,
                         const DeclRewrite &rewrite) {
  CheckReport report;
  auto start = Clock::now();
  std::map<std::string, const DeclResult *> seen;
  std::map<std::string, bool> is_axiom;
  for (const std::string &rel : manifest.files) {
    auto file_start = Clock::now();
    std::string path = (root / rel).string();
    FileReport fr{path, 0, 0, 0};
    std::vector<DeclResult> results;
    try {
      std::vector<SurfaceDecl> decls = parse_file(read_file(path), path);
      if (rewrite) rewrite(rel, decls);
      for (const SurfaceDecl &d : decls) is_axiom[d.name] = d.is_axiom;
      results = session.check_decls(decls, path);
    } catch (const Error &e) {
      results.push_back(DeclResult{"", path, e.diagnostic()});
    }
    for (DeclResult &r : results) {
      if (!r.name.empty()) ++fr.declarations;
      if (!r.ok()) {
        ++fr.failures;
        report.failures.push_back(*r.error);
      }
      report.results.push_back(std::move(r));
    }
    fr.elapsed_ms = ms_since(file_start);
    report.files.push_back(std::move(fr));
  }
  for (const DeclResult &r : report.results) {
    if (!r.name.empty()) seen[r.name] = &r;
  }
  for (const LemmaSpec &spec : manifest.lemmas) {
    auto it = seen.find(spec.name);
    std::string path = (root / spec.file).string();
    if (it == seen.end() || it->second->file != path) {
      report.failures.push_back(Diagnostic{
          ErrorCode::kMissing,
          fmt::format("manifest entry '{}' is not declared in {}", spec.name, spec.file),
          SourceSpan{path, 1, 1, 1, 1}});
      continue;
    }
    bool axiom = is_axiom[spec.name];
    if (axiom != (spec.kind == LemmaKind::kAxiom)) {
      report.failures.push_back(Diagnostic{
          ErrorCode::kMissing,
          fmt::format("manifest entry '{}' is declared as {} but listed as {}",
                      spec.name, axiom ? "an axiom" : "a definition",
                      axiom ? "a definition" : "an axiom"),
          SourceSpan{path, 1, 1, 1, 1}});
    }
  }
  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace holim
