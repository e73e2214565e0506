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

#include "holim/value.hpp"

#include <utility>

#include "holim/global_env.hpp"

namespace holim {

Env Env::extend(Value v) const {
  Env out;
  out.head_ = std::make_shared<const Cell>(Cell{std::move(v), head_});
  out.size_ = size_ + 1;
  return out;
}

const Value &Env::lookup(std::uint32_t index) const {
  const Cell *cell = head_.get();
  for (std::uint32_t i = 0; i < index && cell != nullptr; ++i) {
    cell = cell->next.get();
  }
  if (cell == nullptr) {
    throw Error(ErrorCode::kStuck, "variable index out of range");
  }
  return cell->value;
}

namespace val {
namespace {

Value make(ValueKind kind, std::vector<Value> parts = {}) {
  auto node = std::make_shared<ValueNode>();
  node->kind = kind;
  node->parts = std::move(parts);
  return node;
}

}  // namespace

Value pi(std::string name, Value domain, Closure codomain, bool implicit) {
  auto node = std::make_shared<ValueNode>();
  node->kind = ValueKind::kPi;
  node->name = std::move(name);
  node->implicit = implicit;
  node->parts = {std::move(domain)};
  node->closure = std::move(codomain);
  return node;
}

Value lam(std::string name, Closure body) {
  auto node = std::make_shared<ValueNode>();
  node->kind = ValueKind::kLam;
  node->name = std::move(name);
  node->closure = std::move(body);
  return node;
}

Value sigma(std::string name, Value first, Closure second) {
  auto node = std::make_shared<ValueNode>();
  node->kind = ValueKind::kSigma;
  node->name = std::move(name);
  node->parts = {std::move(first)};
  node->closure = std::move(second);
  return node;
}

Value pair(Value first, Value second) {
  return make(ValueKind::kPair, {std::move(first), std::move(second)});
}

Value universe(std::uint32_t level) {
  auto node = std::make_shared<ValueNode>();
  node->kind = ValueKind::kUniverse;
  node->level = level;
  return node;
}

Value id(Value type, Value lhs, Value rhs) {
  return make(ValueKind::kId, {std::move(type), std::move(lhs), std::move(rhs)});
}
Value refl(Value type, Value point) {
  return make(ValueKind::kRefl, {std::move(type), std::move(point)});
}

Value nat() {
  static const Value v = make(ValueKind::kNat);
  return v;
}
Value zero() {
  static const Value v = make(ValueKind::kZero);
  return v;
}
Value succ(Value n) { return make(ValueKind::kSucc, {std::move(n)}); }
Value unit() {
  static const Value v = make(ValueKind::kUnit);
  return v;
}
Value star() {
  static const Value v = make(ValueKind::kStar);
  return v;
}
Value empty() {
  static const Value v = make(ValueKind::kEmpty);
  return v;
}
Value boolean() {
  static const Value v = make(ValueKind::kBool);
  return v;
}
Value true_() {
  static const Value v = make(ValueKind::kTrue);
  return v;
}
Value false_() {
  static const Value v = make(ValueKind::kFalse);
  return v;
}

Value neutral(Head head, std::vector<Frame> spine) {
  auto node = std::make_shared<ValueNode>();
  node->kind = ValueKind::kNeutral;
  node->head = head;
  node->spine = std::move(spine);
  return node;
}

Value glued(Head head, Value definition, std::vector<Frame> spine) {
  auto node = std::make_shared<ValueNode>();
  node->kind = ValueKind::kNeutral;
  node->head = head;
  node->spine = std::move(spine);
  node->definition = std::move(definition);
  return node;
}

Value local(std::uint32_t level) {
  return neutral(Head{HeadKind::kLocal, level});
}

Closure constant(Value v) {
  return Closure{Env{}.extend(std::move(v)), Term::var(1)};
}

}  // namespace val

void GlobalEnv::add(GlobalEntry entry) {
  if (index_.count(entry.name) != 0) {
    throw Error(ErrorCode::kDuplicate,
                "duplicate declaration '" + entry.name + "'", entry.span);
  }
  index_.emplace(entry.name, entries_.size());
  entries_.push_back(std::move(entry));
}

std::optional<std::size_t> GlobalEnv::slot(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const GlobalEntry *GlobalEnv::find(std::string_view name) const {
  auto s = slot(name);
  return s ? &entries_[*s] : nullptr;
}

}  // namespace holim
