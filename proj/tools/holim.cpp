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

// Command-line driver: check files, check the corpus, print normal forms
// and types.

#include <fmt/format.h>

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <set>
#include <string>
#include <vector>

#include "holim/corpus.hpp"
#include "holim/printer.hpp"
#include "holim/session.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Summary {
  std::vector<std::string> files;
  std::size_t declarations = 0;
  std::vector<holim::Diagnostic> failures;
  bool io_error = false;

  void add(const std::vector<holim::DeclResult> &results) {
    for (const auto &r : results) {
      if (!r.name.empty()) ++declarations;
      if (r.ok()) continue;
      failures.push_back(*r.error);
      if (r.error->code == holim::ErrorCode::kIo) io_error = true;
    }
  }
};

std::string key(const fs::path &p) {
  std::error_code ec;
  fs::path c = fs::weakly_canonical(p, ec);
  return ec ? p.lexically_normal().string() : c.string();
}

// Corpus files listed before `file` in the manifest, when `file` is one of
// them; they supply its dependencies.
std::vector<std::string> prerequisites(const std::string &file) {
  fs::path root = holim::default_corpus_root();
  std::error_code ec;
  if (!fs::exists(root / "MANIFEST.tsv", ec)) return {};
  holim::CorpusManifest manifest;
  try {
    manifest = holim::CorpusManifest::load(root);
  } catch (const holim::Error &) {
    return {};
  }
  std::vector<std::string> before;
  for (const std::string &rel : manifest.files) {
    fs::path p = root / rel;
    if (key(p) == key(file)) return before;
    before.push_back(p.string());
  }
  return {};
}

// Checks `files` in order, loading corpus prerequisites first. Files are
// never checked twice.
Summary load(holim::Session &session, const std::vector<std::string> &files) {
  Summary summary;
  std::set<std::string> done;
  auto check = [&](const std::string &f) {
    if (!done.insert(key(f)).second) return;
    summary.files.push_back(f);
    summary.add(session.check_file(f));
  };
  for (const std::string &f : files) {
    for (const std::string &dep : prerequisites(f)) check(dep);
    check(f);
  }
  return summary;
}

void print_failures(const std::vector<holim::Diagnostic> &failures) {
  for (const auto &d : failures) std::cerr << d.render() << '\n';
}

json to_json(const Summary &s, double elapsed_ms) {
  json failures = json::array();
  for (const auto &d : s.failures) {
    failures.push_back({{"code", std::string(holim::code_name(d.code))},
                        {"message", d.message},
                        {"file", d.span.file},
                        {"line", d.span.start_line},
                        {"column", d.span.start_col}});
  }
  return {{"files", s.files},
          {"declarations", s.declarations},
          {"failures", failures},
          {"elapsed_ms", elapsed_ms}};
}

int finish(const Summary &s, double elapsed_ms, bool as_json, bool timing) {
  print_failures(s.failures);
  if (as_json) std::cout << to_json(s, elapsed_ms).dump(2) << '\n';
  if (timing && !as_json) {
    std::cout << fmt::format("{} declarations in {} files, {:.1f} ms\n",
                             s.declarations, s.files.size(), elapsed_ms);
  }
  if (s.io_error) return kUsage;
  return s.failures.empty() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"holim: a proof checker for homotopy type theory developments"};
  app.require_subcommand(1);

  bool timing = false;
  bool as_json = false;
  std::uint32_t max_universe = 3;
  app.add_flag("--timing", timing, "Report elapsed time");
  app.add_flag("--json", as_json, "Print a JSON summary on standard output");
  app.add_option("--max-universe", max_universe, "Highest usable universe level")
      ->check(CLI::Range(1u, 64u));

  std::vector<std::string> check_files;
  auto *check = app.add_subcommand("check", "Check files in order");
  check->add_option("files", check_files, "Source files")->required();

  std::string file, name;
  auto *nf = app.add_subcommand("nf", "Print the normal form of a declaration");
  nf->add_option("file", file)->required();
  nf->add_option("name", name)->required();
  auto *type = app.add_subcommand("type", "Print the type of a declaration");
  type->add_option("file", file)->required();
  type->add_option("name", name)->required();

  auto *corpus = app.add_subcommand("corpus", "Check the corpus manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  holim::KernelOptions options;
  options.max_universe = max_universe;
  holim::Session session(options);
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  };

  if (*check) {
    Summary s = load(session, check_files);
    return finish(s, elapsed(), as_json, timing);
  }

  if (*nf || *type) {
    Summary s = load(session, {file});
    if (!s.failures.empty()) return finish(s, elapsed(), as_json, timing);
    try {
      holim::Term t = *nf ? session.normal_form(name) : session.type_of(name);
      std::cout << holim::show_term(t) << '\n';
    } catch (const holim::Error &e) {
      std::cerr << e.diagnostic().render() << '\n';
      return kFailed;
    }
    if (timing) std::cerr << fmt::format("{:.1f} ms\n", elapsed());
    return kOk;
  }

  if (*corpus) {
    fs::path root = holim::default_corpus_root();
    holim::CorpusManifest manifest;
    try {
      manifest = holim::CorpusManifest::load(root);
    } catch (const holim::Error &e) {
      std::cerr << e.diagnostic().render() << '\n';
      return kUsage;
    }
    holim::CheckReport report = holim::check_corpus(manifest, root, session);
    Summary s;
    for (const auto &f : report.files) s.files.push_back(f.file);
    s.declarations = report.declarations();
    s.failures = report.failures;
    if (timing && !as_json) {
      for (const auto &f : report.files) {
        std::cout << fmt::format("{:<48} {:>4} decls {:>9.1f} ms\n", f.file,
                                 f.declarations, f.elapsed_ms);
      }
    }
    return finish(s, report.elapsed_ms, as_json, timing);
  }
  return kUsage;
}
