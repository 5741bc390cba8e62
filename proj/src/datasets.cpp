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

#include <algorithm>
#include <map>
#include <unordered_map>

#include "dlperf/resolution.hpp"

namespace dlperf {
namespace {

// A dataset value produced by an expression but not yet bound to a name.
struct Lineage {
  int base = -1;  // state the chain started from, -1 for a fresh origin
  CallSite origin;
  std::vector<PipelineStep> steps;
};

class ScopeTracker {
 public:
  ScopeTracker(const ModuleContext& module, const ApiCatalog& catalog, const FunctionTable* functions,
               const Node& scope, std::vector<DatasetState>& out)
      : module_(module), catalog_(catalog), functions_(functions), scope_(scope), out_(out) {}

  bool returns_dataset() const { return returns_dataset_; }

  void run() {
    if (scope_.is(NodeKind::Lambda)) {
      if (scope_.value) expression(*scope_.value);
      flush();
      return;
    }
    block(scope_.body);
  }

 private:
  void block(const std::vector<Node*>& stmts) {
    for (const Node* s : stmts) statement(*s);
  }

  void statement(const Node& s) {
    switch (s.kind) {
      case NodeKind::FunctionDef:
      case NodeKind::ClassDef:
        for (const Node* d : s.decorators) expression(*d);
        flush();
        untrack(s.name);
        return;
      case NodeKind::For:
        if (s.iter) expression(*s.iter);
        flush();
        if (s.target) untrack_target(*s.target);
        block(s.body);
        block(s.orelse);
        return;
      case NodeKind::While:
        if (s.test) expression(*s.test);
        flush();
        block(s.body);
        block(s.orelse);
        return;
      case NodeKind::If:
        if (s.test) expression(*s.test);
        flush();
        block(s.body);
        block(s.orelse);
        return;
      case NodeKind::With:
        for (const Node* item : s.args) {
          if (item->value) expression(*item->value);
          flush();
          if (item->target) untrack_target(*item->target);
        }
        block(s.body);
        return;
      case NodeKind::Try:
        block(s.body);
        for (const Node* h : s.handlers) {
          if (h->target) expression(*h->target);
          flush();
          if (!h->name.empty()) untrack(h->name);
          block(h->body);
        }
        block(s.orelse);
        block(s.finalbody);
        return;
      case NodeKind::Match:
        if (s.value) expression(*s.value);
        flush();
        for (const Node* c : s.handlers) block(c->body);
        return;
      case NodeKind::Assign:
        if (s.value) expression(*s.value);
        for (const Node* t : s.targets) assign(*t, s.value);
        flush();
        return;
      case NodeKind::AnnAssign:
        if (s.value) {
          expression(*s.value);
          if (s.target) assign(*s.target, s.value);
        }
        flush();
        return;
      case NodeKind::AugAssign:
        if (s.value) expression(*s.value);
        flush();
        if (s.target) untrack_target(*s.target);
        return;
      case NodeKind::Return:
        if (s.value) {
          expression(*s.value);
          if (is_dataset_expr(*s.value)) returns_dataset_ = true;
        }
        flush();
        return;
      default:
        expression(s);
        flush();
        return;
    }
  }

  void expression(const Node& e) {
    for (const CallSite& c : iter_calls(module_.unit(), &e, false)) call(c);
  }

  bool is_dataset_expr(const Node& e) const {
    if (e.is(NodeKind::Name)) return vars_.count(e.name) > 0;
    return pending_.count(&e) > 0;
  }

  void call(const CallSite& site) {
    const Node& callee = *site.callee;
    if (callee.is(NodeKind::Attribute) && callee.value) {
      const TransformerInfo* t = catalog_.transformer(callee.name);
      const Node& recv = *callee.value;
      int nargs = static_cast<int>(site.positional.size() + site.keywords.size());
      if (t && nargs >= t->min_args) {
        PipelineStep step{callee.name, site};
        if (recv.is(NodeKind::Name)) {
          auto it = vars_.find(recv.name);
          if (it != vars_.end()) {
            const DatasetState& s = out_[static_cast<std::size_t>(it->second)];
            pending_[site.call] = Lineage{it->second, s.origin, {step}};
            return;
          }
        } else if (auto it = pending_.find(&recv); it != pending_.end()) {
          Lineage l = std::move(it->second);
          pending_.erase(it);
          l.steps.push_back(step);
          pending_[site.call] = std::move(l);
          return;
        }
      }
    }
    auto q = module_.qualify(site);
    if (!q) return;
    if (catalog_.is_dataset_constructor(*q) || returns_project_dataset(*q)) {
      pending_[site.call] = Lineage{-1, site, {}};
    }
  }

  bool returns_project_dataset(const QualifiedName& q) {
    if (!functions_) return false;
    const FunctionInfo* f = functions_->find(q);
    if (!f || !f->module) return false;
    // One level deep: the callee is tracked without the function table.
    std::vector<DatasetState> scratch;
    ScopeTracker inner(*f->module, catalog_, nullptr, *f->def, scratch);
    inner.run();
    return inner.returns_dataset();
  }

  void assign(const Node& target, const Node* value) {
    if (!target.is(NodeKind::Name)) {
      untrack_target(target);
      return;
    }
    auto it = value ? pending_.find(value) : pending_.end();
    if (it == pending_.end()) {
      if (value && value->is(NodeKind::Name) && vars_.count(value->name)) {
        vars_[target.name] = vars_[value->name];
      } else {
        untrack(target.name);
      }
      return;
    }
    commit(it->second, target.name);
    pending_.erase(it);
  }

  // Unassigned pipelines become anonymous states.
  void flush() {
    std::vector<const Node*> keys;
    for (const auto& [node, lineage] : pending_) keys.push_back(node);
    std::sort(keys.begin(), keys.end(), [](const Node* a, const Node* b) { return a->range.begin < b->range.begin; });
    for (const Node* k : keys) commit(pending_.at(k), "");
    pending_.clear();
  }

  void commit(const Lineage& l, const std::string& name) {
    if (l.base >= 0 && !name.empty()) {
      auto it = vars_.find(name);
      if (it != vars_.end() && it->second == l.base) {
        auto& h = out_[static_cast<std::size_t>(l.base)].history;
        h.insert(h.end(), l.steps.begin(), l.steps.end());
        return;
      }
    }
    DatasetState s;
    s.variable = name;
    s.scope = &scope_;
    s.origin = l.origin;
    if (l.base >= 0) s.history = out_[static_cast<std::size_t>(l.base)].history;
    s.history.insert(s.history.end(), l.steps.begin(), l.steps.end());
    out_.push_back(std::move(s));
    if (!name.empty()) vars_[name] = static_cast<int>(out_.size() - 1);
  }

  void untrack(const std::string& name) { vars_.erase(name); }
  void untrack_target(const Node& target) {
    for (const auto& n : bound_names(target)) untrack(n);
  }

  const ModuleContext& module_;
  const ApiCatalog& catalog_;
  const FunctionTable* functions_;
  const Node& scope_;
  std::vector<DatasetState>& out_;
  std::map<std::string, int> vars_;
  std::unordered_map<const Node*, Lineage> pending_;
  bool returns_dataset_ = false;
};

}  // namespace

std::vector<DatasetState> track_datasets(const ModuleContext& module, const ApiCatalog& catalog,
                                         const FunctionTable* functions) {
  std::vector<DatasetState> out;
  for (const Node* scope : module.scopes().scopes()) {
    if (!scope->is(NodeKind::Module) && !scope->is(NodeKind::FunctionDef) && !scope->is(NodeKind::Lambda)) continue;
    ScopeTracker tracker(module, catalog, functions, *scope, out);
    tracker.run();
  }
  return out;
}

}  // namespace dlperf
