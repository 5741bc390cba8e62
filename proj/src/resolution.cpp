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

#include "dlperf/resolution.hpp"

#include <algorithm>
#include <cctype>

namespace dlperf {
namespace {

constexpr int kMaxAttributeHops = 4;
constexpr int kResolveBudget = 32;

bool looks_like_class(const QualifiedName& q) {
  auto c = static_cast<unsigned char>(q.tail().front());
  return std::isupper(c) != 0;
}

bool has_decorator(const Node& def, std::string_view name) {
  for (const Node* d : def.decorators) {
    const Node* target = d->is(NodeKind::Call) ? d->func : d;
    if (target && target->name == name) return true;
  }
  return false;
}

std::string sanitize_segment(std::string s) {
  for (char& c : s) {
    auto u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_' || u >= 0x80)) c = '_';
  }
  if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) s.insert(s.begin(), '_');
  return s;
}

QualifiedName module_qualified_name(const SourceUnit& unit) {
  std::vector<std::string> segs;
  std::string_view m = unit.module_name();
  std::size_t start = 0;
  while (start <= m.size() && !m.empty()) {
    std::size_t dot = m.find('.', start);
    std::string seg(m.substr(start, dot == std::string_view::npos ? m.npos : dot - start));
    segs.push_back(sanitize_segment(seg));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  if (segs.empty()) segs.push_back("__main__");
  return QualifiedName::from(segs.front()).joined({segs.begin() + 1, segs.end()});
}

bool is_package_init(const SourceUnit& unit) { return unit.path().stem() == "__init__"; }

}  // namespace

// ---------------------------------------------------------------------------
// ScopeIndex

namespace {

class ScopeBuilder {
 public:
  ScopeBuilder(std::unordered_map<const Node*, const Node*>& scope_of,
               std::unordered_map<const Node*, const Node*>& parent, std::vector<const Node*>& order)
      : scope_of_(scope_of), parent_(parent), order_(order) {}

  void visit(const Node& node, const Node* scope) {
    scope_of_[&node] = scope;
    if (!opens_scope(node)) {
      for (const Node* c : children(node)) visit(*c, scope);
      return;
    }
    parent_[&node] = scope;
    order_.push_back(&node);
    switch (node.kind) {
      case NodeKind::FunctionDef:
      case NodeKind::Lambda:
        for (const Node* d : node.decorators) visit(*d, scope);
        for (const Node* a : node.args) {
          scope_of_[a] = &node;
          if (a->value) visit(*a->value, scope);
          if (a->annotation) visit(*a->annotation, scope);
        }
        if (node.annotation) visit(*node.annotation, scope);
        if (node.value) visit(*node.value, &node);
        for (const Node* s : node.body) visit(*s, &node);
        break;
      case NodeKind::ClassDef:
        for (const Node* d : node.decorators) visit(*d, scope);
        for (const Node* b : node.args) visit(*b, scope);
        for (const Node* k : node.keywords) visit(*k, scope);
        for (const Node* s : node.body) visit(*s, &node);
        break;
      default: {
        // Comprehension: the first iterable runs in the enclosing scope.
        bool first = true;
        for (const Node* gen : node.args) {
          scope_of_[gen] = &node;
          if (gen->iter) visit(*gen->iter, first ? scope : &node);
          if (gen->target) visit(*gen->target, &node);
          for (const Node* cond : gen->ifs) visit(*cond, &node);
          first = false;
        }
        if (node.value) visit(*node.value, &node);
        if (node.other) visit(*node.other, &node);
        break;
      }
    }
  }

 private:
  std::unordered_map<const Node*, const Node*>& scope_of_;
  std::unordered_map<const Node*, const Node*>& parent_;
  std::vector<const Node*>& order_;
};

}  // namespace

ScopeIndex::ScopeIndex(const SourceUnit& unit) : module_(&unit.root()) {
  order_.push_back(module_);
  parent_[module_] = nullptr;
  ScopeBuilder builder(scope_of_, parent_, order_);
  scope_of_[module_] = module_;
  for (const Node* c : children(*module_)) builder.visit(*c, module_);
}

const Node* ScopeIndex::scope_of(const Node& node) const {
  auto it = scope_of_.find(&node);
  return it == scope_of_.end() ? module_ : it->second;
}

const Node* ScopeIndex::parent(const Node& scope) const {
  auto it = parent_.find(&scope);
  return it == parent_.end() ? nullptr : it->second;
}

std::vector<const Node*> ScopeIndex::lookup_chain(const Node& scope) const {
  std::vector<const Node*> chain{&scope};
  for (const Node* p = parent(scope); p; p = parent(*p)) {
    if (!p->is(NodeKind::ClassDef)) chain.push_back(p);
  }
  return chain;
}

// ---------------------------------------------------------------------------
// AliasTable

namespace {

std::optional<QualifiedName> import_base(const SourceUnit& unit, const Node& from) {
  if (from.level == 0) return QualifiedName::parse(from.name);
  QualifiedName package = module_qualified_name(unit);
  std::size_t keep = package.size();
  int ups = is_package_init(unit) ? from.level - 1 : from.level;
  if (ups >= static_cast<int>(keep)) return std::nullopt;
  keep -= static_cast<std::size_t>(ups);
  QualifiedName base = package.prefix(keep);
  if (from.name.empty()) return base;
  auto rest = QualifiedName::parse(from.name);
  if (!rest) return std::nullopt;
  return base.joined(rest->segments());
}

void collect_imports(const SourceUnit& unit, const ScopeIndex& scopes, const Node& node,
                     std::unordered_map<const Node*, std::vector<Binding>>& out) {
  if (node.is(NodeKind::Import)) {
    auto& events = out[scopes.scope_of(node)];
    for (const Node* a : node.args) {
      Binding b;
      b.offset = node.range.end;
      auto target = QualifiedName::parse(a->name);
      if (!target) continue;
      b.kind = Binding::Kind::Known;
      if (!a->asname.empty()) {
        b.name = a->asname;
        b.value = *target;
      } else {
        b.name = target->head();
        b.value = target->prefix(1);
      }
      events.push_back(std::move(b));
    }
  } else if (node.is(NodeKind::ImportFrom)) {
    auto& events = out[scopes.scope_of(node)];
    auto base = import_base(unit, node);
    for (const Node* a : node.args) {
      Binding b;
      b.offset = node.range.end;
      if (a->name == "*") {
        b.kind = Binding::Kind::Wildcard;
      } else {
        b.name = a->asname.empty() ? a->name : a->asname;
        if (base && is_identifier(a->name)) {
          b.kind = Binding::Kind::Known;
          b.value = base->child(a->name);
        } else {
          b.kind = Binding::Kind::Opaque;
        }
      }
      events.push_back(std::move(b));
    }
  }
  for (const Node* c : children(node)) collect_imports(unit, scopes, *c, out);
}

}  // namespace

AliasTable::AliasTable(const SourceUnit& unit, const ScopeIndex& scopes) {
  collect_imports(unit, scopes, unit.root(), events_);
}

AliasTable build_alias_table(const SourceUnit& unit, const ScopeIndex& scopes) { return AliasTable(unit, scopes); }

const std::vector<Binding>* AliasTable::events(const Node& scope) const {
  auto it = events_.find(&scope);
  return it == events_.end() ? nullptr : &it->second;
}

std::map<std::string, QualifiedName> AliasTable::entries(const Node& scope) const {
  std::map<std::string, QualifiedName> out;
  if (const auto* ev = events(scope)) {
    for (const auto& b : *ev) {
      if (b.kind == Binding::Kind::Known && b.value) out.insert_or_assign(b.name, *b.value);
    }
  }
  return out;
}

bool AliasTable::has_wildcard(const Node& scope) const {
  const auto* ev = events(scope);
  return ev && std::any_of(ev->begin(), ev->end(), [](const Binding& b) { return b.kind == Binding::Kind::Wildcard; });
}

// ---------------------------------------------------------------------------
// LocalBindings

namespace {

QualifiedName definition_qn(const SourceUnit& unit, const ScopeIndex& scopes, const Node& def) {
  std::vector<std::string> names{def.name};
  for (const Node* p = scopes.parent(def); p && !p->is(NodeKind::Module); p = scopes.parent(*p)) {
    if (p->is(NodeKind::FunctionDef) || p->is(NodeKind::ClassDef)) {
      names.push_back(p->name);
    } else {
      names.push_back(p->is(NodeKind::Lambda) ? "<lambda>" : "<comp>");
    }
  }
  std::reverse(names.begin(), names.end());
  for (auto& n : names) n = sanitize_segment(n);
  return module_qualified_name(unit).joined(names);
}

class BindingCollector {
 public:
  BindingCollector(const SourceUnit& unit, const ScopeIndex& scopes,
                   std::unordered_map<const Node*, std::vector<Binding>>& out)
      : unit_(unit), scopes_(scopes), out_(out) {}

  void run() {
    collect_declarations(unit_.root());
    visit(unit_.root());
    for (auto& [scope, events] : out_) {
      std::stable_sort(events.begin(), events.end(),
                       [](const Binding& a, const Binding& b) { return a.offset < b.offset; });
    }
  }

 private:
  // `global` / `nonlocal` redirect bindings to another scope.
  void collect_declarations(const Node& node) {
    if (node.is(NodeKind::Global) || node.is(NodeKind::Nonlocal)) {
      const Node* scope = scopes_.scope_of(node);
      const Node* target = &scopes_.module();
      if (node.is(NodeKind::Nonlocal)) {
        auto chain = scopes_.lookup_chain(*scope);
        target = chain.size() > 1 ? chain[1] : &scopes_.module();
      }
      for (const Node* n : node.targets) redirect_[{scope, n->name}] = target;
    }
    for (const Node* c : children(node)) collect_declarations(*c);
  }

  void add(const Node& at, const std::string& name, Binding::Kind kind, std::size_t offset,
           std::optional<QualifiedName> value = std::nullopt, const Node* rhs = nullptr) {
    const Node* scope = scopes_.scope_of(at);
    auto it = redirect_.find({scope, name});
    if (it != redirect_.end()) scope = it->second;
    Binding b;
    b.offset = offset;
    b.name = name;
    b.kind = kind;
    b.value = std::move(value);
    b.rhs = rhs;
    out_[scope].push_back(std::move(b));
  }

  void bind_target(const Node& target, std::size_t offset, const Node* rhs) {
    if (target.is(NodeKind::Name)) {
      add(target, target.name, rhs ? Binding::Kind::Assigned : Binding::Kind::Opaque, offset, std::nullopt, rhs);
      return;
    }
    for (const auto& n : bound_names(target)) add(target, n, Binding::Kind::Opaque, offset);
  }

  void visit(const Node& node) {
    switch (node.kind) {
      case NodeKind::FunctionDef:
      case NodeKind::ClassDef:
        add(node, node.name, Binding::Kind::Known, node.range.begin, definition_qn(unit_, scopes_, node));
        if (node.is(NodeKind::FunctionDef)) bind_params(node);
        break;
      case NodeKind::Lambda:
        for (const Node* a : node.args) add(*a, a->name, Binding::Kind::Opaque, a->range.begin);
        break;
      case NodeKind::Comprehension:
        if (node.target) {
          for (const auto& n : bound_names(*node.target)) add(*node.target, n, Binding::Kind::Opaque, 0);
        }
        break;
      case NodeKind::Assign:
        for (const Node* t : node.targets) bind_target(*t, node.range.end, node.value);
        break;
      case NodeKind::AnnAssign:
        if (node.target && node.value) bind_target(*node.target, node.range.end, node.value);
        break;
      case NodeKind::AugAssign:
        if (node.target) bind_target(*node.target, node.range.end, nullptr);
        break;
      case NodeKind::NamedExpr:
        if (node.target) bind_target(*node.target, node.range.end, node.value);
        break;
      case NodeKind::For:
        if (node.target) bind_target(*node.target, node.target->range.end, nullptr);
        break;
      case NodeKind::WithItem:
        if (node.target) bind_target(*node.target, node.target->range.end, node.value);
        break;
      case NodeKind::ExceptHandler:
        if (!node.name.empty()) add(node, node.name, Binding::Kind::Opaque, node.range.begin);
        break;
      case NodeKind::Delete:
        for (const Node* t : node.targets) bind_target(*t, node.range.end, nullptr);
        break;
      default:
        break;
    }
    for (const Node* c : children(node)) visit(*c);
  }

  void bind_params(const Node& def) {
    const Node* scope = scopes_.parent(def);
    bool method = scope && scope->is(NodeKind::ClassDef) && !has_decorator(def, "staticmethod");
    bool first = true;
    for (const Node* a : def.args) {
      if (method && first && a->param_kind != ParamKind::VarArgs) {
        // self / cls stand for the enclosing class.
        add(*a, a->name, Binding::Kind::Known, a->range.begin, definition_qn(unit_, scopes_, *scope));
      } else {
        add(*a, a->name, Binding::Kind::Opaque, a->range.begin);
      }
      first = false;
    }
  }

  const SourceUnit& unit_;
  const ScopeIndex& scopes_;
  std::unordered_map<const Node*, std::vector<Binding>>& out_;
  std::map<std::pair<const Node*, std::string>, const Node*> redirect_;
};

}  // namespace

LocalBindings::LocalBindings(const SourceUnit& unit, const ScopeIndex& scopes) {
  BindingCollector(unit, scopes, events_).run();
}

const std::vector<Binding>* LocalBindings::events(const Node& scope) const {
  auto it = events_.find(&scope);
  return it == events_.end() ? nullptr : &it->second;
}

std::set<std::string> LocalBindings::bound_before(const Node& scope, std::size_t offset) const {
  std::set<std::string> out;
  if (const auto* ev = events(scope)) {
    for (const auto& b : *ev) {
      if (b.offset <= offset && !b.name.empty()) out.insert(b.name);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ModuleContext

ModuleContext::ModuleContext(std::shared_ptr<const SourceUnit> unit)
    : unit_(std::move(unit)), scopes_(*unit_), aliases_(*unit_, scopes_), bindings_(*unit_, scopes_) {}

QualifiedName ModuleContext::definition_name(const Node& def) const { return definition_qn(*unit_, scopes_, def); }

std::optional<QualifiedName> ModuleContext::resolve(const Node& expr) const {
  return resolve_at(expr, *scopes_.scope_of(expr), expr.range.begin, kResolveBudget);
}

std::optional<QualifiedName> ModuleContext::qualify(const CallSite& call) const {
  if (!call.callee) return std::nullopt;
  bool instance = false;
  auto q = resolve_at(*call.callee, *scopes_.scope_of(*call.callee), call.callee->range.begin, kResolveBudget,
                      &instance);
  // Calling a constructed object invokes its `__call__`, not the class.
  if (q && instance) return q->child("__call__");
  return q;
}

std::optional<QualifiedName> qualify_call(const ModuleContext& ctx, const CallSite& call) { return ctx.qualify(call); }

std::optional<QualifiedName> ModuleContext::resolve_at(const Node& expr, const Node& scope, std::size_t offset,
                                                       int budget, bool* instance) const {
  if (instance) *instance = false;
  if (budget <= 0) return std::nullopt;
  std::vector<std::string> attrs;
  const Node* base = &expr;
  while (base->is(NodeKind::Attribute) && base->value) {
    attrs.push_back(base->name);
    base = base->value;
  }
  if (static_cast<int>(attrs.size()) > kMaxAttributeHops) return std::nullopt;
  std::reverse(attrs.begin(), attrs.end());
  std::optional<QualifiedName> head;
  if (base->is(NodeKind::Name)) {
    head = lookup(base->name, scope, offset, budget - 1, attrs.empty() ? instance : nullptr);
  } else if (base->is(NodeKind::Call) && base->func && !attrs.empty()) {
    // `tf.train.AdamOptimizer(0.1).minimize`: instance of the constructed class.
    auto cls = resolve_at(*base->func, scope, offset, budget - 1);
    if (cls && looks_like_class(*cls)) head = cls;
  }
  if (!head) return std::nullopt;
  return attrs.empty() ? head : head->joined(attrs);
}

std::optional<QualifiedName> ModuleContext::lookup(std::string_view name, const Node& scope, std::size_t offset,
                                                   int budget, bool* instance) const {
  for (const Node* s : scopes_.lookup_chain(scope)) {
    bool found = false;
    auto r = lookup_in(*s, name, offset, budget, s == &scope, found, instance);
    if (found) return r;
  }
  return std::nullopt;
}

std::optional<QualifiedName> ModuleContext::lookup_in(const Node& scope, std::string_view name, std::size_t offset,
                                                      int budget, bool own, bool& found, bool* instance) const {
  found = false;
  const Binding* best_before = nullptr;
  const Binding* last = nullptr;
  std::size_t wildcard_before = 0;
  bool wildcard_any = false;
  bool wildcard_seen_before = false;
  auto scan = [&](const std::vector<Binding>* events) {
    if (!events) return;
    for (const auto& b : *events) {
      if (b.kind == Binding::Kind::Wildcard) {
        wildcard_any = true;
        if (b.offset <= offset) {
          wildcard_seen_before = true;
          wildcard_before = std::max(wildcard_before, b.offset);
        }
        continue;
      }
      if (b.name != name) continue;
      if (!last || b.offset >= last->offset) last = &b;
      if (b.offset <= offset && (!best_before || b.offset >= best_before->offset)) best_before = &b;
    }
  };
  scan(aliases_.events(scope));
  scan(bindings_.events(scope));

  const Binding* chosen = best_before ? best_before : (own ? nullptr : last);
  if (!chosen) {
    if (last) {
      // Bound later in the same scope: a local read before assignment.
      found = true;
      return std::nullopt;
    }
    if (wildcard_seen_before || (!own && wildcard_any)) {
      found = true;
      return std::nullopt;
    }
    return std::nullopt;
  }
  found = true;
  if (wildcard_seen_before && wildcard_before > chosen->offset) return std::nullopt;
  switch (chosen->kind) {
    case Binding::Kind::Known:
      return chosen->value;
    case Binding::Kind::Assigned: {
      if (!chosen->rhs) return std::nullopt;
      const Node& rhs = *chosen->rhs;
      const Node& rhs_scope = *scopes_.scope_of(rhs);
      if (rhs.is(NodeKind::Call) && rhs.func) {
        auto cls = resolve_at(*rhs.func, rhs_scope, rhs.range.begin, budget - 1);
        if (!cls || !looks_like_class(*cls)) return std::nullopt;
        if (instance) *instance = true;
        return cls;
      }
      if (rhs.is(NodeKind::Name) || rhs.is(NodeKind::Attribute)) {
        return resolve_at(rhs, rhs_scope, rhs.range.begin, budget - 1, instance);
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// ---------------------------------------------------------------------------
// FunctionTable

void FunctionTable::add_module(const ModuleContext& module) {
  for (const Node* scope : module.scopes().scopes()) {
    if (!scope->is(NodeKind::FunctionDef)) continue;
    FunctionInfo info{module.definition_name(*scope), scope, &module, {}, false};
    for (const Node* a : scope->args) info.params.push_back(a->name);
    const Node* parent = module.scopes().parent(*scope);
    info.bound_method = parent && parent->is(NodeKind::ClassDef) && !has_decorator(*scope, "staticmethod");
    if (parent && parent->is(NodeKind::Module)) {
      local_.insert_or_assign(std::pair<const SourceUnit*, std::string>{&module.unit(), scope->name}, info.name);
    }
    QualifiedName key = info.name;
    by_name_.insert_or_assign(key, std::move(info));
  }
}

const FunctionInfo* FunctionTable::find(const QualifiedName& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &it->second;
}

const FunctionInfo* FunctionTable::find_local(const SourceUnit& unit, std::string_view name) const {
  auto it = local_.find(std::pair<const SourceUnit*, std::string>{&unit, std::string(name)});
  return it == local_.end() ? nullptr : find(it->second);
}

const FunctionInfo* FunctionTable::callee(const ModuleContext& module, const CallSite& call) const {
  auto q = module.qualify(call);
  if (!q) return nullptr;
  return find(*q);
}

FunctionTable build_function_table(const std::vector<const ModuleContext*>& modules) {
  std::vector<const ModuleContext*> sorted(modules.begin(), modules.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const ModuleContext* a, const ModuleContext* b) {
    return a->unit().display_path() < b->unit().display_path();
  });
  FunctionTable table;
  for (const ModuleContext* m : sorted) table.add_module(*m);
  return table;
}

}  // namespace dlperf
