// Copyright 2026 The dlperf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loop_analysis.hpp"

#include <algorithm>
#include <array>

namespace dlperf {
namespace detail {
namespace {

constexpr std::array<std::string_view, 10> kMutators = {"add",    "append", "clear",      "discard", "extend",
                                                          "insert", "pop",    "remove", "setdefault", "update"};

bool is_mutator(std::string_view method) {
  return std::find(kMutators.begin(), kMutators.end(), method) != kMutators.end();
}

class RecordCollector {
 public:
  explicit RecordCollector(BodyFacts& out) : out_(out) {}

  void statements(const std::vector<Node*>& body) {
    for (const Node* s : body) node(*s);
  }

  void node(const Node& n) {
    switch (n.kind) {
      case NodeKind::FunctionDef:
      case NodeKind::ClassDef:
        // Only the header runs here; the name itself is rebound.
        for (const Node* d : n.decorators) node(*d);
        out_.records.push_back({{n.name}, {}, false});
        out_.assigned.insert(n.name);
        return;
      case NodeKind::Lambda:
        return;
      case NodeKind::Assign:
        for (const Node* t : n.targets) store(*t, n.value, false);
        break;
      case NodeKind::AnnAssign:
        if (n.target && n.value) store(*n.target, n.value, false);
        break;
      case NodeKind::AugAssign:
        if (n.target) store(*n.target, n.value, true);
        break;
      case NodeKind::NamedExpr:
        if (n.target) store(*n.target, n.value, false);
        break;
      case NodeKind::For:
        if (n.target) seed(*n.target);
        break;
      case NodeKind::Comprehension:
        if (n.target) seed(*n.target);
        break;
      case NodeKind::WithItem:
        if (n.target) store(*n.target, n.value, false);
        break;
      case NodeKind::ExceptHandler:
        if (!n.name.empty()) {
          out_.seeds.insert(n.name);
          out_.assigned.insert(n.name);
        }
        break;
      case NodeKind::Delete:
        for (const Node* t : n.targets) {
          for (const auto& name : bound_names(*t)) out_.assigned.insert(name);
          for (const auto& name : mutated_bases(*t)) out_.assigned.insert(name);
        }
        break;
      case NodeKind::Call:
        if (n.func && n.func->is(NodeKind::Attribute) && n.func->value && n.func->value->is(NodeKind::Name) &&
            is_mutator(n.func->name)) {
          const std::string& base = n.func->value->name;
          out_.assigned.insert(base);
          std::set<std::string> reads;
          for (const Node* a : n.args) collect_names_read(*a, reads);
          for (const Node* k : n.keywords) collect_names_read(*k, reads);
          out_.records.push_back({{base}, std::move(reads), false});
        }
        break;
      default:
        break;
    }
    for (const Node* c : children(n)) node(*c);
  }

 private:
  void seed(const Node& target) {
    for (const auto& name : bound_names(target)) {
      out_.seeds.insert(name);
      out_.assigned.insert(name);
    }
    for (const auto& name : mutated_bases(target)) out_.assigned.insert(name);
  }

  void store(const Node& target, const Node* value, bool augmented) {
    std::set<std::string> targets = bound_names(target);
    std::set<std::string> bases = mutated_bases(target);
    std::set<std::string> reads;
    if (value) collect_names_read(*value, reads);
    // Index expressions of subscript targets are read as well.
    if (!target.is(NodeKind::Name)) collect_names_read(target, reads);
    for (const auto& b : bases) reads.erase(b);
    targets.insert(bases.begin(), bases.end());
    for (const auto& t : targets) out_.assigned.insert(t);
    // `x = x + 1` is loop-carried even when x is new to the loop.
    bool carried = augmented;
    for (const auto& t : targets) {
      if (reads.count(t)) carried = true;
    }
    out_.records.push_back({std::move(targets), std::move(reads), carried});
  }

  BodyFacts& out_;
};

}  // namespace

BodyFacts collect_body_facts(const std::vector<Node*>& body) {
  BodyFacts facts;
  RecordCollector(facts).statements(body);
  return facts;
}

std::set<std::string> close_changed(const BodyFacts& facts, std::set<std::string> changed) {
  for (const auto& r : facts.records) {
    if (r.loop_carried) changed.insert(r.targets.begin(), r.targets.end());
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& r : facts.records) {
      bool hits = std::any_of(r.reads.begin(), r.reads.end(), [&](const std::string& n) { return changed.count(n) > 0; });
      if (!hits) continue;
      for (const auto& t : r.targets) grew |= changed.insert(t).second;
    }
  }
  return changed;
}

}  // namespace detail

LoopAnalysis changed_vars(const LoopSite& loop, const std::set<std::string>& enclosing_defs) {
  LoopAnalysis out;
  out.loop = loop;
  if (loop.kind == LoopKind::For && loop.node && loop.node->target) {
    out.control_vars = bound_names(*loop.node->target);
  }
  static const std::vector<Node*> kEmpty;
  detail::BodyFacts facts = detail::collect_body_facts(loop.body ? *loop.body : kEmpty);
  for (const auto& name : facts.assigned) {
    if (enclosing_defs.count(name)) out.defined_outside_reassigned.insert(name);
  }
  std::set<std::string> seed = out.control_vars;
  seed.insert(loop.targets.begin(), loop.targets.end());
  seed.insert(facts.seeds.begin(), facts.seeds.end());
  seed.insert(out.defined_outside_reassigned.begin(), out.defined_outside_reassigned.end());
  out.changed = detail::close_changed(facts, std::move(seed));
  return out;
}

}  // namespace dlperf
