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

#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dlperf/traversal.hpp"
#include "json.hpp"

namespace dlperf::testing {

namespace fs = std::filesystem;

fs::path source_dir() { return DLPERF_SOURCE_DIR; }

fs::path fixture(const std::string& name) { return source_dir() / "fixtures" / name; }

std::shared_ptr<const SourceUnit> parse_text(const std::string& text, const std::string& path) {
  ParseOutcome out = parse_source(path, text, module_name_for(path));
  if (!out.ok()) {
    throw std::runtime_error(path + ":" + std::to_string(out.error->span.start_line) + ": " + out.error->message);
  }
  return out.unit;
}

std::vector<RawFinding> analyze(const std::vector<std::pair<std::string, std::string>>& files,
                                const std::set<Rule>& rules, int depth) {
  std::vector<std::unique_ptr<ModuleContext>> modules;
  std::vector<const ModuleContext*> ptrs;
  for (const auto& [path, text] : files) {
    modules.push_back(std::make_unique<ModuleContext>(parse_text(text, path)));
    ptrs.push_back(modules.back().get());
  }
  FunctionTable table = build_function_table(ptrs);
  return run_rules(ptrs, table, default_catalog(), rules, depth);
}

CheckResult check_paths(const std::vector<fs::path>& paths, const Config& config) { return run_check(paths, config); }

std::vector<int> lines_of(const std::vector<Diagnostic>& diags, const std::string& code) {
  std::vector<int> out;
  for (const auto& d : diags) {
    if (d.code == code) out.push_back(d.span.start_line);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinism

PropertyResult check_determinism(const std::vector<fs::path>& roots) {
  PropertyResult r;
  Config base;
  base.show_suppressed = true;
  std::string reference;
  for (int jobs : {1, 2, 8, 0, 1, 3}) {
    Config c = base;
    c.jobs = jobs;
    std::string json = render(run_check(roots, c), OutputFormat::Json);
    ++r.cases;
    if (reference.empty()) {
      reference = json;
    } else if (json != reference) {
      r.ok = false;
      r.detail = "JSON differs with jobs=" + std::to_string(jobs);
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Fixpoint monotonicity

namespace {

// A generated statement, kept structurally so the expected fixpoint can be
// computed without the analyzer.
struct GenStmt {
  enum Kind { Copy, Combine, Augment, Const, SelfRef, OuterStore } kind;
  std::string target;
  std::vector<std::string> reads;
};

std::string render_stmt(const GenStmt& s) {
  switch (s.kind) {
    case GenStmt::Copy:
      return s.target + " = " + s.reads[0];
    case GenStmt::Combine:
      return s.target + " = " + s.reads[0] + " * " + s.reads[1];
    case GenStmt::Augment:
      return s.target + " += " + (s.reads.empty() ? std::string("1") : s.reads[0]);
    case GenStmt::Const:
      return s.target + " = 7";
    case GenStmt::SelfRef:
      return s.target + " = " + s.target + " + " + s.reads[0];
    case GenStmt::OuterStore:
      return s.target + " = tf.constant(" + s.reads[0] + ")";
  }
  return {};
}

std::set<std::string> model_changed(const std::vector<GenStmt>& body, const std::set<std::string>& outer) {
  std::set<std::string> changed = {"i"};
  for (const auto& s : body) {
    if (outer.count(s.target)) changed.insert(s.target);
    bool self_read = std::find(s.reads.begin(), s.reads.end(), s.target) != s.reads.end();
    if (s.kind == GenStmt::Augment || self_read) changed.insert(s.target);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : body) {
      if (std::any_of(s.reads.begin(), s.reads.end(), [&](const std::string& n) { return changed.count(n) > 0; })) {
        grew |= changed.insert(s.target).second;
      }
    }
  }
  return changed;
}

GenStmt random_stmt(std::mt19937& rng) {
  static const std::vector<std::string> kNames = {"a", "b", "c", "d", "e", "f", "i", "o1", "o2"};
  auto pick = [&] { return kNames[std::uniform_int_distribution<std::size_t>(0, kNames.size() - 1)(rng)]; };
  auto target = [&] {
    std::string t;
    do t = pick(); while (t == "i");
    return t;
  };
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0:
      return {GenStmt::Copy, target(), {pick()}};
    case 1:
      return {GenStmt::Combine, target(), {pick(), pick()}};
    case 2:
      return {GenStmt::Augment, target(), {}};
    case 3:
      return {GenStmt::Const, target(), {}};
    case 4: {
      GenStmt s{GenStmt::SelfRef, target(), {}};
      s.reads = {pick(), s.target};
      return s;
    }
    default:
      return {GenStmt::OuterStore, target(), {pick()}};
  }
}

std::string render_program(const std::vector<GenStmt>& body) {
  std::string text = "import tensorflow as tf\no1 = 1\no2 = 2\nfor i in range(3):\n";
  for (const auto& s : body) text += "    " + render_stmt(s) + "\n";
  if (body.empty()) text += "    pass\n";
  return text;
}

std::set<std::string> analyzer_changed(const std::vector<GenStmt>& body, const std::set<std::string>& outer) {
  auto unit = parse_text(render_program(body));
  auto loops = iter_loops(*unit);
  return changed_vars(loops.at(0), outer).changed;
}

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& n : s) out += (out.empty() ? "" : ",") + n;
  return "{" + out + "}";
}

}  // namespace

PropertyResult check_fixpoint_monotonicity(int trials, unsigned seed) {
  PropertyResult r;
  std::mt19937 rng(seed);
  const std::set<std::string> outer_small = {"o1"};
  const std::set<std::string> outer_big = {"o1", "o2"};
  for (int t = 0; t < trials; ++t) {
    std::vector<GenStmt> body;
    int n = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int k = 0; k < n; ++k) body.push_back(random_stmt(rng));
    std::vector<GenStmt> grown = body;
    grown.insert(grown.begin() + std::uniform_int_distribution<std::size_t>(0, grown.size())(rng), random_stmt(rng));

    auto got = analyzer_changed(body, outer_small);
    auto want = model_changed(body, outer_small);
    auto got_grown = analyzer_changed(grown, outer_small);
    auto got_outer = analyzer_changed(body, outer_big);
    ++r.cases;
    if (got != want) {
      r.ok = false;
      r.detail = "fixpoint mismatch on\n" + render_program(body) + "got " + join(got) + " want " + join(want);
      return r;
    }
    if (!subset(got, got_grown)) {
      r.ok = false;
      r.detail = "adding a statement shrank changed:\n" + render_program(grown);
      return r;
    }
    if (!subset(got, got_outer)) {
      r.ok = false;
      r.detail = "adding an outer definition shrank changed:\n" + render_program(body);
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Control variables

PropertyResult check_control_vars(const fs::path& root) {
  PropertyResult r;
  for (const auto& f : discover_files({root}, Config{})) {
    std::ifstream in(f.path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    ParseOutcome parsed = parse_source(f.path, buf.str());
    if (!parsed.ok()) continue;
    ModuleContext ctx(parsed.unit);
    for (const LoopSite& loop : iter_loops(*parsed.unit)) {
      const Node& scope = *ctx.scopes().scope_of(*loop.node);
      LoopAnalysis a = changed_vars(loop, ctx.bindings().bound_before(scope, loop.node->range.begin));
      ++r.cases;
      std::set<std::string> targets = loop.node->target ? bound_names(*loop.node->target) : std::set<std::string>{};
      if (!subset(targets, a.control_vars) || !subset(a.control_vars, a.changed) ||
          !subset(a.defined_outside_reassigned, a.changed)) {
        r.ok = false;
        r.detail = f.path.generic_string() + ":" + std::to_string(loop.span.start_line) + " control " +
                   join(a.control_vars) + " changed " + join(a.changed);
        return r;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Suppression

PropertyResult check_suppression(int trials, unsigned seed) {
  PropertyResult r;
  const std::vector<std::string> base = {
      "import tensorflow as tf",
      "a = tf.constant(1.0)",
      "ds = tf.data.Dataset.range(4)",
      "for i in range(3):",
      "    x = 1",
      "    y = tf.square(a)",
      "    z = 2",
      "    w = tf.add(a, a)",
      "ds = ds.map(abs)",
      "ds = ds.batch(2)",
  };
  const std::vector<std::string> codes = {"RNC001", "MOB001", "DPM001", "NOPE01"};
  std::mt19937 rng(seed);

  auto run = [](const std::string& text, std::vector<Notice>& notices) {
    auto unit = parse_text(text, "supp.py");
    ModuleContext ctx(unit);
    FunctionTable table = build_function_table({&ctx});
    auto findings = run_rules({&ctx}, table, default_catalog(), every_rule());
    return apply_suppressions(findings, {{unit->display_path(), unit.get()}}, notices);
  };
  std::string plain;
  for (const auto& l : base) plain += l + "\n";
  std::vector<Notice> none;
  const std::vector<Diagnostic> baseline = run(plain, none);

  for (int t = 0; t < trials; ++t) {
    std::map<int, std::string> markers;  // 1-based line -> marker text
    struct Expected {
      bool valid;
      bool all;
      std::set<std::string> codes;
    };
    std::map<int, Expected> parsed;
    int count = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int k = 0; k < count; ++k) {
      int line = std::uniform_int_distribution<int>(2, static_cast<int>(base.size()))(rng);
      Expected e{true, false, {}};
      std::string text;
      if (std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
        e.all = true;
        text = "# dlperf: ignore";
      } else {
        int n = std::uniform_int_distribution<int>(1, 2)(rng);
        std::vector<std::string> picked;
        for (int j = 0; j < n; ++j) picked.push_back(codes[std::uniform_int_distribution<std::size_t>(0, 3)(rng)]);
        text = "# dlperf: ignore[";
        for (std::size_t j = 0; j < picked.size(); ++j) {
          text += (j ? "," : "") + picked[j];
          if (picked[j] == "NOPE01") e.valid = false;
          e.codes.insert(picked[j]);
        }
        text += "]";
      }
      markers[line] = text;
      parsed[line] = e;
    }
    std::string text;
    for (std::size_t i = 0; i < base.size(); ++i) {
      int line = static_cast<int>(i) + 1;
      text += base[i];
      if (markers.count(line)) text += "  " + markers[line];
      text += "\n";
    }
    std::vector<Notice> notices;
    std::vector<Diagnostic> diags = run(text, notices);
    ++r.cases;
    std::size_t invalid = std::count_if(parsed.begin(), parsed.end(), [](const auto& p) { return !p.second.valid; });
    bool bad = diags.size() != baseline.size() || notices.size() != invalid;
    for (std::size_t i = 0; !bad && i < diags.size(); ++i) {
      const Diagnostic& d = diags[i];
      bool want = false;
      for (int line : {d.span.start_line, d.span.start_line - 1}) {
        auto it = parsed.find(line);
        if (it != parsed.end() && it->second.valid && (it->second.all || it->second.codes.count(d.code))) want = true;
      }
      if (d.suppressed != want || d.span != baseline[i].span || d.code != baseline[i].code) bad = true;
    }
    if (bad) {
      r.ok = false;
      r.detail = "suppression mismatch on\n" + text;
      return r;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Dynamic oracle

PropertyResult check_dynamic_oracle(const fs::path& snippets, const fs::path& expected) {
  PropertyResult r;
  std::ifstream in(expected);
  if (!in) {
    r.ok = false;
    r.detail = "cannot open " + expected.generic_string();
    return r;
  }
  nlohmann::json frozen = nlohmann::json::parse(in);
  std::set<std::string> seen;
  for (const auto& f : discover_files({snippets}, Config{})) {
    std::string name = f.path.filename().string();
    seen.insert(name);
    ++r.cases;
    if (!frozen.contains(name)) {
      r.ok = false;
      r.detail += name + ": no frozen verdict\n";
      continue;
    }
    std::vector<int> want = frozen[name].get<std::vector<int>>();
    Config c;
    c.rules = {Rule::RNC001};
    std::vector<int> got = lines_of(run_check({f.path}, c).diagnostics, "RNC001");
    std::sort(got.begin(), got.end());
    got.erase(std::unique(got.begin(), got.end()), got.end());
    if (got != want) {
      r.ok = false;
      std::string g;
      std::string w;
      for (int l : got) g += " " + std::to_string(l);
      for (int l : want) w += " " + std::to_string(l);
      r.detail += name + ": analyzer [" + g + " ] oracle [" + w + " ]\n";
    }
  }
  if (seen.size() != frozen.size()) {
    r.ok = false;
    r.detail += "snippet set differs from frozen verdicts\n";
  }
  return r;
}

}  // namespace dlperf::testing
