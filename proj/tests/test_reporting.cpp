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

#include "doctest.h"
#include "dlperf/reporting.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace dlperf;
using dlperf::testing::parse_text;

namespace {

struct Run {
  std::vector<Diagnostic> diags;
  std::vector<Notice> notices;
};

Run run(const std::string& text) {
  auto unit = parse_text(text, "r.py");
  ModuleContext ctx(unit);
  FunctionTable t = build_function_table({&ctx});
  auto findings = run_rules({&ctx}, t, default_catalog(), every_rule());
  Run r;
  r.diags = apply_suppressions(findings, {{"r.py", unit.get()}}, r.notices);
  return r;
}

const Diagnostic* find(const Run& r, const std::string& code) {
  for (const auto& d : r.diags) {
    if (d.code == code) return &d;
  }
  return nullptr;
}

const char* kPipeline =
    "import tensorflow as tf\n"
    "ds = tf.data.Dataset.range(4)\n"
    "ds = ds.map(f){MARK}\n"
    "ds = ds.batch(2)\n";

std::string with_marker(const std::string& mark) {
  std::string s = kPipeline;
  s.replace(s.find("{MARK}"), 6, mark);
  return s;
}

}  // namespace

TEST_SUITE("reporting") {
  TEST_CASE("code-scoped marker") {
    Run r = run(with_marker("  # dlperf: ignore[DPM001]"));
    REQUIRE(find(r, "DPM001"));
    REQUIRE(find(r, "MOB001"));
    CHECK(find(r, "DPM001")->suppressed);
    CHECK_FALSE(find(r, "MOB001")->suppressed);
    CHECK(r.notices.empty());
  }

  TEST_CASE("bare marker silences every rule") {
    Run r = run(with_marker("  # dlperf: ignore"));
    CHECK(find(r, "DPM001")->suppressed);
    CHECK(find(r, "MOB001")->suppressed);
  }

  TEST_CASE("marker on the preceding line") {
    Run r = run("import tensorflow as tf\nds = tf.data.Dataset.range(4)\n# dlperf: ignore[MOB001, DPM001]\n"
                "ds = ds.map(f)\nds = ds.batch(2)\n");
    CHECK(find(r, "DPM001")->suppressed);
    CHECK(find(r, "MOB001")->suppressed);
  }

  TEST_CASE("marker two lines above does not apply") {
    Run r = run("import tensorflow as tf\n# dlperf: ignore\nds = tf.data.Dataset.range(4)\n"
                "ds = ds.map(f)\nds = ds.batch(2)\n");
    CHECK_FALSE(find(r, "DPM001")->suppressed);
  }

  TEST_CASE("unknown code gives a notice and no suppression") {
    Run r = run(with_marker("  # dlperf: ignore[NOPE]"));
    CHECK_FALSE(find(r, "DPM001")->suppressed);
    REQUIRE(r.notices.size() == 1);
    CHECK(r.notices[0].line == 3);
  }

  TEST_CASE("marker token must match exactly") {
    for (const char* m : {"  # dlperf: ignored", "  # dlperf: ignore-this", "  # dlperf: skip",
                          "  # dlperf: ignore[DPM001", "  # dlperf: ignore[]"}) {
      Run r = run(with_marker(m));
      CHECK_MESSAGE(!find(r, "DPM001")->suppressed, m);
      CHECK_MESSAGE(r.notices.size() == 1, m);
    }
    Run text = run(with_marker("  # see dlperf: ignore docs"));
    CHECK_FALSE(find(text, "DPM001")->suppressed);
  }

  TEST_CASE("messages and hints name the subject") {
    Run r = run(with_marker(""));
    CHECK(find(r, "DPM001")->message.find("num_parallel_calls") != std::string::npos);
    CHECK(find(r, "MOB001")->message.find("line 4") != std::string::npos);
    CHECK(find(r, "DPM001")->fix_hint.find("'map'") != std::string::npos);
    CHECK(find(r, "MOB001")->taxonomy_tag == "Inefficient API Usage");
    CHECK(find(r, "MOB001")->severity == Severity::Warning);
  }

  TEST_CASE("severity overrides") {
    auto unit = parse_text(with_marker(""), "r.py");
    ModuleContext ctx(unit);
    FunctionTable t = build_function_table({&ctx});
    std::vector<Notice> n;
    auto d = apply_suppressions(run_rules({&ctx}, t, default_catalog(), every_rule()), {{"r.py", unit.get()}}, n,
                                {{"DPM001", Severity::Error}});
    for (const auto& x : d) CHECK(x.severity == (x.code == "DPM001" ? Severity::Error : Severity::Warning));
  }

  TEST_CASE("summary counts and exit codes") {
    Run r = run(with_marker("  # dlperf: ignore[DPM001]"));
    auto diags = r.diags;
    RunSummary s = summarize(diags, 1, r.notices, false);
    CHECK(diags.size() == 1);
    CHECK(s.suppressed == 1);
    CHECK(s.unsuppressed == 1);
    int sum = 0;
    for (const auto& [code, n] : s.findings_per_rule) sum += n;
    CHECK(sum == static_cast<int>(diags.size()));
    CHECK(s.findings_per_rule.size() == 3);
    CHECK(exit_code(s) == 1);

    Run all = run(with_marker("  # dlperf: ignore"));
    auto kept = all.diags;
    RunSummary shown = summarize(kept, 1, all.notices, true);
    CHECK(kept.size() == 2);
    CHECK(shown.unsuppressed == 0);
    CHECK(exit_code(shown) == 0);

    std::vector<Diagnostic> none;
    CHECK(exit_code(summarize(none, 3, {}, false)) == 0);
    CHECK(exit_code(summarize(none, 3, {{"x.py", 1, 0, "syntax error"}}, false)) == 0);
    CHECK(exit_code(summarize(none, 0, {}, false, true)) == 2);
  }

  TEST_CASE("text rendering") {
    Run r = run(with_marker(""));
    RunSummary s = summarize(r.diags, 1, r.notices, false);
    std::string text = render_text(r.diags, s);
    CHECK(text.rfind("r.py:3:8: DPM001 ", 0) == 0);
    CHECK(text.find("\n    hint: ") != std::string::npos);
    CHECK(text.find("MOB001: 1\n") != std::string::npos);
    CHECK(text == render_text(r.diags, s));
  }

  TEST_CASE("json rendering is canonical") {
    Run r = run(with_marker(""));
    RunSummary s = summarize(r.diags, 1, r.notices, false);
    std::string out = render_json(r.diags, s, r.notices);
    auto doc = nlohmann::json::parse(out);
    CHECK(doc["version"] == "1");
    REQUIRE(doc["diagnostics"].size() == 2);
    auto span = doc["diagnostics"][0]["span"];
    CHECK(span["start_line"] == 3);
    CHECK(span["start_col"] == 8);
    CHECK(span.contains("end_line"));
    CHECK(span.contains("end_col"));
    CHECK(doc["summary"]["exit_code"] == 1);
    CHECK(doc.dump(2) + "\n" == out);
    CHECK(out == render_json(r.diags, s, r.notices));
  }

  TEST_CASE("json rendering is injective") {
    Run r = run(with_marker(""));
    RunSummary s = summarize(r.diags, 1, r.notices, false);
    std::vector<std::string> variants;
    variants.push_back(render_json(r.diags, s));
    auto a = r.diags;
    a[0].span.end_col += 1;
    variants.push_back(render_json(a, s));
    auto b = r.diags;
    b[0].suppressed = true;
    variants.push_back(render_json(b, s));
    auto c = r.diags;
    std::swap(c[0], c[1]);
    variants.push_back(render_json(c, s));
    variants.push_back(render_json({r.diags[0]}, s));
    std::set<std::string> unique(variants.begin(), variants.end());
    CHECK(unique.size() == variants.size());
  }
}
