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

// Lightweight name resolution: import aliases, simple local bindings,
// qualified names for call sites, a project-wide function table and
// tf.data pipeline provenance.

#ifndef DLPERF_RESOLUTION_HPP_
#define DLPERF_RESOLUTION_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dlperf/catalog.hpp"
#include "dlperf/qualified_name.hpp"
#include "dlperf/source.hpp"
#include "dlperf/traversal.hpp"

namespace dlperf {

/// Maps every node to its innermost enclosing scope (module, def, class,
/// lambda or comprehension). Decorators, defaults and class bases belong to
/// the scope that contains the definition.
class ScopeIndex {
 public:
  explicit ScopeIndex(const SourceUnit& unit);

  const Node& module() const { return *module_; }
  const Node* scope_of(const Node& node) const;
  /// Lexically enclosing scope, null for the module.
  const Node* parent(const Node& scope) const;
  /// Scope chain used for name lookup from `scope`: itself, then enclosing
  /// function scopes (class bodies are skipped), ending at the module.
  std::vector<const Node*> lookup_chain(const Node& scope) const;
  /// Every scope in pre-order, module first.
  const std::vector<const Node*>& scopes() const { return order_; }

 private:
  const Node* module_;
  std::unordered_map<const Node*, const Node*> scope_of_;
  std::unordered_map<const Node*, const Node*> parent_;
  std::vector<const Node*> order_;
};

/// One binding event recorded for a scope. `offset` is where the binding
/// takes effect (the end of the binding statement).
struct Binding {
  enum class Kind {
    /// A name bound to a known qualified name (imports, defs, classes).
    Known,
    /// A name bound by `name = expr`; `rhs` is resolved lazily.
    Assigned,
    /// A local whose value is not tracked (parameters, loop targets, ...).
    Opaque,
    /// `from X import *`: every later lookup in this scope is unresolved.
    Wildcard,
  };
  std::size_t offset = 0;
  std::string name;
  Kind kind = Kind::Opaque;
  std::optional<QualifiedName> value;
  const Node* rhs = nullptr;
};

/// Import-derived names per scope (`import X`, `import X as Y`,
/// `from X import Y [as Z]`, wildcard markers).
class AliasTable {
 public:
  AliasTable() = default;
  AliasTable(const SourceUnit& unit, const ScopeIndex& scopes);

  /// Events of one scope in source order, or null.
  const std::vector<Binding>* events(const Node& scope) const;
  /// Flattened view `{local name -> target}` of one scope; wildcards and
  /// rebinding order are ignored. Intended for inspection and tests.
  std::map<std::string, QualifiedName> entries(const Node& scope) const;
  bool has_wildcard(const Node& scope) const;

 private:
  friend class ModuleContext;
  std::unordered_map<const Node*, std::vector<Binding>> events_;
};

AliasTable build_alias_table(const SourceUnit& unit, const ScopeIndex& scopes);

/// Non-import bindings per scope: assignments, parameters, def/class names,
/// loop and `with` targets.
class LocalBindings {
 public:
  LocalBindings() = default;
  LocalBindings(const SourceUnit& unit, const ScopeIndex& scopes);

  const std::vector<Binding>* events(const Node& scope) const;

  /// Names bound in `scope` strictly before `offset`.
  std::set<std::string> bound_before(const Node& scope, std::size_t offset) const;

 private:
  std::unordered_map<const Node*, std::vector<Binding>> events_;
};

/// Everything resolution knows about one unit. Immutable; safe to share.
class ModuleContext {
 public:
  explicit ModuleContext(std::shared_ptr<const SourceUnit> unit);

  const SourceUnit& unit() const { return *unit_; }
  const std::shared_ptr<const SourceUnit>& unit_ptr() const { return unit_; }
  const ScopeIndex& scopes() const { return scopes_; }
  const AliasTable& aliases() const { return aliases_; }
  const LocalBindings& bindings() const { return bindings_; }

  /// Qualified name of a dotted expression, resolved where it appears.
  std::optional<QualifiedName> resolve(const Node& expr) const;
  std::optional<QualifiedName> qualify(const CallSite& call) const;

  /// Qualified name for a definition (`mod.f`, `mod.C.m`, `mod.f.inner`).
  QualifiedName definition_name(const Node& def) const;

 private:
  std::optional<QualifiedName> resolve_at(const Node& expr, const Node& scope, std::size_t offset,
                                          int budget, bool* instance = nullptr) const;
  std::optional<QualifiedName> lookup(std::string_view name, const Node& scope, std::size_t offset,
                                      int budget, bool* instance = nullptr) const;
  std::optional<QualifiedName> lookup_in(const Node& scope, std::string_view name, std::size_t offset,
                                         int budget, bool own, bool& found, bool* instance = nullptr) const;

  std::shared_ptr<const SourceUnit> unit_;
  ScopeIndex scopes_;
  AliasTable aliases_;
  LocalBindings bindings_;
};

/// Free-function form: resolves `call` through explicit tables.
std::optional<QualifiedName> qualify_call(const ModuleContext& ctx, const CallSite& call);

struct FunctionInfo {
  QualifiedName name;
  const Node* def = nullptr;
  const ModuleContext* module = nullptr;
  /// Parameter names in declaration order (Arg nodes are in def->args).
  std::vector<std::string> params;
  /// Defined directly in a class body and not a staticmethod.
  bool bound_method = false;
};

/// Project-local function definitions by qualified name; a redefinition
/// replaces the earlier entry.
class FunctionTable {
 public:
  FunctionTable() = default;

  void add_module(const ModuleContext& module);

  const FunctionInfo* find(const QualifiedName& name) const;
  /// Same-file lookup by simple name (top-level functions).
  const FunctionInfo* find_local(const SourceUnit& unit, std::string_view name) const;
  /// Resolves the callee of a call in `module` to a project function.
  const FunctionInfo* callee(const ModuleContext& module, const CallSite& call) const;

  std::size_t size() const { return by_name_.size(); }
  bool empty() const { return by_name_.empty(); }
  const std::map<QualifiedName, FunctionInfo>& entries() const { return by_name_; }

 private:
  std::map<QualifiedName, FunctionInfo> by_name_;
  std::map<std::pair<const SourceUnit*, std::string>, QualifiedName, std::less<>> local_;
};

/// Builds the table over `modules` in path order.
FunctionTable build_function_table(const std::vector<const ModuleContext*>& modules);

struct PipelineStep {
  std::string method;
  CallSite site;
};

struct DatasetState {
  /// Tracked variable, empty for a pipeline that is never assigned.
  std::string variable;
  /// Function or module whose body holds the pipeline.
  const Node* scope = nullptr;
  /// Constructor call (or the call of a project function returning a
  /// dataset).
  CallSite origin;
  std::vector<PipelineStep> history;
};

/// Dataset pipelines of every scope in `module`, scopes in pre-order and
/// states in creation order. With `functions`, calls to project functions
/// that return a tracked dataset start new pipelines (one level deep).
std::vector<DatasetState> track_datasets(const ModuleContext& module, const ApiCatalog& catalog,
                                         const FunctionTable* functions = nullptr);

}  // namespace dlperf

#endif  // DLPERF_RESOLUTION_HPP_
