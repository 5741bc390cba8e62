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

#include "dlperf/checkers.hpp"

#include <algorithm>
#include <tuple>

#include "loop_analysis.hpp"

namespace dlperf {

namespace {

const std::vector<RuleId> kRules = {
    {Rule::RNC001, "RNC001", "Confusion with Computation Graph"},
    {Rule::MOB001, "MOB001", "Inefficient API Usage"},
    {Rule::DPM001, "DPM001", "Inefficient API Usage"},
};

}  // namespace

const RuleId& rule_info(Rule rule) { return kRules[static_cast<std::size_t>(rule)]; }

const std::vector<RuleId>& all_rules() { return kRules; }

std::optional<Rule> parse_rule_code(std::string_view code) {
  for (const auto& r : kRules) {
    if (r.code == code) return r.rule;
  }
  return std::nullopt;
}

std::set<Rule> every_rule() { return {Rule::RNC001, Rule::MOB001, Rule::DPM001}; }

Span finding_span(const SourceUnit& unit, const CallSite& call) {
  ByteRange r = call.call->range;
  const Node* callee = call.callee;
  if (callee && callee->is(NodeKind::Attribute) && callee->range.end >= callee->name.size()) {
    r.begin = callee->range.end - callee->name.size();
  }
  return unit.span(r);
}

// ---------------------------------------------------------------------------
// RNC001

namespace {

bool reads_any(const CallSite& call, const std::set<std::string>& changed) {
  std::set<std::string> reads;
  for (const Node* a : call.positional) collect_names_read(*a, reads);
  for (const Node* k : call.keywords) collect_names_read(*k, reads);
  return std::any_of(reads.begin(), reads.end(), [&](const std::string& n) { return changed.count(n) > 0; });
}

bool expr_reads_any(const Node& e, const std::set<std::string>& changed) {
  auto reads = names_read(e);
  return std::any_of(reads.begin(), reads.end(), [&](const std::string& n) { return changed.count(n) > 0; });
}

bool contains(const Node& outer, const Node& inner) {
  return outer.range.begin <= inner.range.begin && inner.range.end <= outer.range.end;
}

// Targets assigned from a nondeterministic API call differ per iteration.
void collect_random_targets(const ModuleContext& mod, const ApiCatalog& catalog, const Node& n,
                            std::set<std::string>& out) {
  if (n.is(NodeKind::FunctionDef) || n.is(NodeKind::ClassDef) || n.is(NodeKind::Lambda)) return;
  const Node* value = nullptr;
  std::vector<const Node*> targets;
  if (n.is(NodeKind::Assign)) {
    value = n.value;
    targets.assign(n.targets.begin(), n.targets.end());
  } else if ((n.is(NodeKind::AnnAssign) || n.is(NodeKind::AugAssign) || n.is(NodeKind::NamedExpr)) && n.target) {
    value = n.value;
    targets.push_back(n.target);
  }
  if (value) {
    for (const CallSite& call : iter_calls(mod.unit(), value, false)) {
      auto q = mod.qualify(call);
      if (!q || !catalog.is_excluded(*q)) continue;
      for (const Node* t : targets) {
        for (const auto& name : bound_names(*t)) out.insert(name);
      }
      break;
    }
  }
  for (const Node* c : children(n)) collect_random_targets(mod, catalog, *c, out);
}

std::set<std::string> with_random_targets(const ModuleContext& mod, const ApiCatalog& catalog,
                                          const std::vector<Node*>& body, std::set<std::string> changed) {
  std::set<std::string> random;
  for (const Node* s : body) collect_random_targets(mod, catalog, *s, random);
  if (random.empty()) return changed;
  changed.insert(random.begin(), random.end());
  return detail::close_changed(detail::collect_body_facts(body), std::move(changed));
}

class NodeCreationChecker {
 public:
  NodeCreationChecker(const ModuleContext& module, const FunctionTable& functions, const ApiCatalog& catalog,
                      int depth_limit, std::vector<RawFinding>& out)
      : module_(module), functions_(functions), catalog_(catalog), depth_limit_(depth_limit), out_(out) {}

  void run() {
    const SourceUnit& unit = module_.unit();
    for (const LoopSite& loop : iter_loops(unit)) {
      const Node& scope = *module_.scopes().scope_of(*loop.node);
      std::set<std::string> defs = module_.bindings().bound_before(scope, loop.node->range.begin);
      if (const auto* ev = module_.aliases().events(scope)) {
        for (const auto& b : *ev) {
          if (b.offset <= loop.node->range.begin && !b.name.empty()) defs.insert(b.name);
        }
      }
      LoopAnalysis analysis = changed_vars(loop, defs);
      analysis.changed = with_random_targets(module_, catalog_, *loop.body, std::move(analysis.changed));
      std::set<QualifiedName> visited;
      if (scope.is(NodeKind::FunctionDef)) visited.insert(module_.definition_name(scope));
      for (const CallSite& call : iter_calls(unit, *loop.body, false)) {
        visit_call(module_, scope, call, analysis.changed, loop, depth_limit_, visited, {});
      }
    }
  }

 private:
  void visit_call(const ModuleContext& mod, const Node& scope, const CallSite& call,
                  const std::set<std::string>& changed, const LoopSite& loop, int remaining,
                  const std::set<QualifiedName>& visited, const std::vector<std::string>& via) {
    auto q = mod.qualify(call);
    if (!q) return;
    if (catalog_.is_node_creating(*q)) {
      if (reads_any(call, changed)) return;
      RawFinding f;
      f.rule = Rule::RNC001;
      f.path = mod.unit().display_path();
      f.span = finding_span(mod.unit(), call);
      f.subject = catalog_.canonical(*q).str();
      f.loop_span = loop.span;
      f.loop_path = module_.unit().display_path();
      f.depth = static_cast<int>(via.size());
      f.via = via;
      out_.push_back(std::move(f));
      return;
    }
    const FunctionInfo* fn = functions_.find(*q);
    if (!fn || remaining <= 0 || visited.count(fn->name)) return;
    enter(*fn, mod, scope, call, changed, loop, remaining, visited, via);
  }

  void enter(const FunctionInfo& fn, const ModuleContext& caller, const Node& caller_scope, const CallSite& call,
             const std::set<std::string>& changed, const LoopSite& loop, int remaining,
             std::set<QualifiedName> visited, std::vector<std::string> via) {
    std::set<std::string> seeds = bind_arguments(fn, call, changed);
    if (&caller == fn.module && contains(caller_scope, *fn.def) && !caller_scope.is(NodeKind::Module)) {
      // Closures see the caller's changed locals unless they rebind them.
      std::set<std::string> locals = fn.module->bindings().bound_before(*fn.def, fn.def->range.end);
      for (const auto& n : changed) {
        if (!locals.count(n)) seeds.insert(n);
      }
    }
    detail::BodyFacts facts = detail::collect_body_facts(fn.def->body);
    seeds.insert(facts.seeds.begin(), facts.seeds.end());
    std::set<std::string> callee_changed = with_random_targets(
        *fn.module, catalog_, fn.def->body, detail::close_changed(facts, std::move(seeds)));
    visited.insert(fn.name);
    via.push_back(fn.name.str());
    for (const CallSite& inner : iter_calls(fn.module->unit(), fn.def->body, false)) {
      visit_call(*fn.module, *fn.def, inner, callee_changed, loop, remaining - 1, visited, via);
    }
  }

  static std::set<std::string> bind_arguments(const FunctionInfo& fn, const CallSite& call,
                                              const std::set<std::string>& changed) {
    std::vector<const Node*> positional;
    const Node* var_args = nullptr;
    const Node* var_kw = nullptr;
    std::vector<const Node*> all;
    bool skip = fn.bound_method;
    for (const Node* a : fn.def->args) {
      if (skip && a->param_kind != ParamKind::VarArgs) {
        skip = false;
        continue;
      }
      skip = false;
      all.push_back(a);
      switch (a->param_kind) {
        case ParamKind::Positional:
        case ParamKind::PositionalOnly:
          positional.push_back(a);
          break;
        case ParamKind::VarArgs:
          var_args = a;
          break;
        case ParamKind::VarKeywords:
          var_kw = a;
          break;
        default:
          break;
      }
    }
    std::set<std::string> out;
    for (std::size_t i = 0; i < call.positional.size(); ++i) {
      const Node* arg = call.positional[i];
      if (!expr_reads_any(*arg, changed)) continue;
      if (arg->is(NodeKind::Starred)) {
        for (std::size_t j = i; j < positional.size(); ++j) out.insert(positional[j]->name);
        if (var_args) out.insert(var_args->name);
        continue;
      }
      if (i < positional.size()) {
        out.insert(positional[i]->name);
      } else if (var_args) {
        out.insert(var_args->name);
      }
    }
    for (const Node* k : call.keywords) {
      if (!k->value || !expr_reads_any(*k->value, changed)) continue;
      if (k->name.empty()) {
        for (const Node* a : all) out.insert(a->name);
        continue;
      }
      auto it = std::find_if(all.begin(), all.end(), [&](const Node* a) {
        return a->name == k->name && a->param_kind != ParamKind::PositionalOnly &&
               a->param_kind != ParamKind::VarArgs && a->param_kind != ParamKind::VarKeywords;
      });
      if (it != all.end()) {
        out.insert((*it)->name);
      } else if (var_kw) {
        out.insert(var_kw->name);
      }
    }
    return out;
  }

  const ModuleContext& module_;
  const FunctionTable& functions_;
  const ApiCatalog& catalog_;
  int depth_limit_;
  std::vector<RawFinding>& out_;
};

}  // namespace

std::vector<RawFinding> check_repeated_node_creation(const ModuleContext& module, const FunctionTable& functions,
                                                     const ApiCatalog& catalog, int depth_limit) {
  std::vector<RawFinding> out;
  NodeCreationChecker(module, functions, catalog, std::max(0, depth_limit), out).run();
  return out;
}

// ---------------------------------------------------------------------------
// MOB001 / DPM001

namespace {

bool is_batch(std::string_view method) { return method == "batch" || method == "padded_batch"; }

}  // namespace

std::vector<RawFinding> check_map_before_batch(const ModuleContext& module, const std::vector<DatasetState>& states) {
  std::vector<RawFinding> out;
  for (const DatasetState& s : states) {
    const auto& h = s.history;
    bool batched = false;
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (is_batch(h[i].method)) {
        batched = true;
        continue;
      }
      if (h[i].method != "map" || batched) continue;
      auto next = std::find_if(h.begin() + static_cast<std::ptrdiff_t>(i) + 1, h.end(),
                               [](const PipelineStep& p) { return is_batch(p.method); });
      if (next == h.end()) continue;
      RawFinding f;
      f.rule = Rule::MOB001;
      f.path = module.unit().display_path();
      f.span = finding_span(module.unit(), h[i].site);
      f.subject = "map";
      f.related_span = finding_span(module.unit(), next->site);
      f.related_method = next->method;
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<RawFinding> check_missing_parallelism(const ModuleContext& module,
                                                  const std::vector<DatasetState>& states,
                                                  const ApiCatalog& catalog) {
  std::vector<RawFinding> out;
  for (const DatasetState& s : states) {
    for (const PipelineStep& step : s.history) {
      const ParallelizableMethod* p = catalog.parallel_method(step.method);
      if (!p) continue;
      const CallSite& c = step.site;
      if (c.has_keyword(p->keyword) || c.has_double_star_kwargs() || c.has_star_args()) continue;
      if (p->position && static_cast<int>(c.positional.size()) > *p->position) continue;
      RawFinding f;
      f.rule = Rule::DPM001;
      f.path = module.unit().display_path();
      f.span = finding_span(module.unit(), c);
      f.subject = step.method;
      f.parallel_keyword = p->keyword;
      out.push_back(std::move(f));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<RawFinding> check_module(const ModuleContext& module, const FunctionTable& functions,
                                     const ApiCatalog& catalog, const std::set<Rule>& enabled, int depth_limit) {
  std::vector<RawFinding> out;
  if (enabled.count(Rule::RNC001)) out = check_repeated_node_creation(module, functions, catalog, depth_limit);
  if (enabled.count(Rule::MOB001) || enabled.count(Rule::DPM001)) {
    auto states = track_datasets(module, catalog, &functions);
    if (enabled.count(Rule::MOB001)) {
      auto f = check_map_before_batch(module, states);
      out.insert(out.end(), f.begin(), f.end());
    }
    if (enabled.count(Rule::DPM001)) {
      auto f = check_missing_parallelism(module, states, catalog);
      out.insert(out.end(), f.begin(), f.end());
    }
  }
  return out;
}

void normalize_findings(std::vector<RawFinding>& findings) {
  auto order = [](const RawFinding& f) {
    return std::tie(f.path, f.span.start_line, f.span.start_col, rule_info(f.rule).code, f.span.end_line,
                    f.span.end_col, f.subject, f.loop_path, f.loop_span, f.depth, f.via);
  };
  std::stable_sort(findings.begin(), findings.end(),
                   [&](const RawFinding& a, const RawFinding& b) { return order(a) < order(b); });
  auto same = [](const RawFinding& a, const RawFinding& b) {
    return a.rule == b.rule && a.path == b.path && a.span == b.span && a.subject == b.subject;
  };
  findings.erase(std::unique(findings.begin(), findings.end(), same), findings.end());
}

std::vector<RawFinding> run_rules(const std::vector<const ModuleContext*>& modules, const FunctionTable& functions,
                                  const ApiCatalog& catalog, const std::set<Rule>& enabled, int depth_limit) {
  std::vector<RawFinding> out;
  for (const ModuleContext* m : modules) {
    auto f = check_module(*m, functions, catalog, enabled, depth_limit);
    out.insert(out.end(), f.begin(), f.end());
  }
  normalize_findings(out);
  return out;
}

}  // namespace dlperf
