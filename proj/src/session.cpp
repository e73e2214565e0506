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

#include "holim/session.hpp"

#include <fstream>
#include <sstream>

#include "holim/elaborator.hpp"
#include "holim/evaluator.hpp"
#include "holim/parser.hpp"

namespace holim {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open '" + path + "'",
                SourceSpan{path, 1, 1, 1, 1});
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<DeclResult> Session::check_decls(const std::vector<SurfaceDecl> &decls,
                                             const std::string &file) {
  std::vector<DeclResult> out;
  for (const SurfaceDecl &d : decls) {
    DeclResult r{d.name, file, std::nullopt};
    try {
      Elaborator elab(env_, options_);
      Declaration core = elab.elaborate_decl(d);
      if (d.is_axiom && core.body) {
        throw Error(ErrorCode::kType, "axiom '" + d.name + "' has a body", d.span);
      }
      check_decl_into(env_, core, options_);
    } catch (const Error &e) {
      r.error = e.diagnostic();
      if (r.error->span.file.empty()) r.error->span = d.span;
      // Keep the name resolvable for what follows, if the type allows it.
      if (env_.find(d.name) == nullptr) {
        try {
          Elaborator elab(env_, options_);
          SurfaceDecl opaque = d;
          opaque.body = nullptr;
          check_decl_into(env_, elab.elaborate_decl(opaque), options_);
        } catch (const Error &) {
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<DeclResult> Session::check_source(std::string_view source,
                                              const std::string &file) {
  std::vector<SurfaceDecl> decls;
  try {
    decls = parse_file(source, file);
  } catch (const Error &e) {
    return {DeclResult{"", file, e.diagnostic()}};
  }
  return check_decls(decls, file);
}

std::vector<DeclResult> Session::check_file(const std::string &path) {
  std::string source;
  try {
    source = read_file(path);
  } catch (const Error &e) {
    return {DeclResult{"", path, e.diagnostic()}};
  }
  return check_source(source, path);
}

Term Session::normal_form(const std::string &name) const {
  if (env_.find(name) == nullptr) {
    throw Error(ErrorCode::kMissing, "no declaration named '" + name + "'");
  }
  Evaluator ev(env_);
  return ev.quote(ev.eval(Env{}, Term::global(name)), 0, true);
}

Term Session::type_of(const std::string &name) const {
  const GlobalEntry *e = env_.find(name);
  if (e == nullptr) {
    throw Error(ErrorCode::kMissing, "no declaration named '" + name + "'");
  }
  return e->type_term;
}

}  // namespace holim
