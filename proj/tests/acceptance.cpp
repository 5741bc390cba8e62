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

// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any
// FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "support.hpp"

using namespace dlperf;
using namespace dlperf::testing;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.empty() ? "" : " -- ",
              detail.c_str());
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string lines(const std::vector<int>& v) {
  std::string out;
  for (int l : v) out += (out.empty() ? "" : ",") + std::to_string(l);
  return "[" + out + "]";
}

void golden_fixtures() {
  auto t0 = std::chrono::steady_clock::now();
  auto training = run_check({fixture("fig2_buggy.py")}, Config{}).diagnostics;
  auto training_fixed = run_check({fixture("fig2_fixed.py")}, Config{}).diagnostics;
  auto pipeline = run_check({fixture("fig1_buggy.py")}, Config{}).diagnostics;
  auto pipeline_fixed = run_check({fixture("fig1_fixed.py")}, Config{}).diagnostics;
  double secs = seconds_since(t0);
  bool ok = training.size() == 2 && lines_of(training, "RNC001") == std::vector<int>{12, 14} &&
            training[0].subject == "tensorflow.matmul" &&
            training[1].subject == "tensorflow.train.GradientDescentOptimizer.minimize" && training_fixed.empty() &&
            pipeline.size() == 2 && lines_of(pipeline, "MOB001") == std::vector<int>{28} &&
            lines_of(pipeline, "DPM001") == std::vector<int>{28} && pipeline_fixed.empty() && secs < 1.0;
  char buf[160];
  std::snprintf(buf, sizeof buf, "training RNC001 %s, pipeline MOB001 %s DPM001 %s, fixed %zu+%zu, %.3fs",
                lines(lines_of(training, "RNC001")).c_str(), lines(lines_of(pipeline, "MOB001")).c_str(),
                lines(lines_of(pipeline, "DPM001")).c_str(), pipeline_fixed.size(), training_fixed.size(), secs);
  report(1, "golden fixtures", ok, buf);
}

void catalog_semantics() {
  auto fs = analyze({{"c.py",
                      "import tensorflow as tf\n"
                      "a = tf.constant([1.0])\n"
                      "for i in range(10):\n"
                      "    tf.random.uniform([2, 2])\n"
                      "    tf.matmul(a, a)\n"}});
  bool ok = fs.size() == 1 && fs[0].span.start_line == 5 && fs[0].subject == "tensorflow.matmul";
  report(2, "random.uniform excluded, matmul flagged", ok, std::to_string(fs.size()) + " finding(s)");
}

void interprocedural() {
  const std::string invariant =
      "import tensorflow as tf\n"
      "a = tf.constant([[1.0]])\n"
      "b = tf.constant([[2.0]])\n"
      "def build(x):\n"
      "    return tf.matmul(a, b)\n"
      "for i in range(3):\n"
      "    build(i)\n";
  const std::string passes_changed =
      "import tensorflow as tf\n"
      "a = tf.constant([[1.0]])\n"
      "def build(x):\n"
      "    return tf.matmul(a, x)\n"
      "for i in range(3):\n"
      "    build(i)\n";
  auto one = analyze({{"m.py", invariant}});
  auto none = analyze({{"m.py", passes_changed}});
  bool ok = one.size() == 1 && one[0].span.start_line == 5 && one[0].depth == 1 && none.empty();
  report(3, "inter-procedural depth 1", ok,
         std::to_string(one.size()) + " finding(s) in builder, " + std::to_string(none.size()) +
             " with changed argument");
}

void dynamic_oracle() {
  auto r = check_dynamic_oracle(source_dir() / "tests/oracle/snippets", source_dir() / "tests/oracle/expected.json");
  report(4, "dynamic oracle agreement", r.ok && r.cases >= 10,
         std::to_string(r.cases) + " snippets" + (r.detail.empty() ? "" : "; " + r.detail));
}

void properties() {
  auto t0 = std::chrono::steady_clock::now();
  auto det = check_determinism({source_dir() / "corpus", source_dir() / "fixtures"});
  auto mono = check_fixpoint_monotonicity(100, 20260101u);
  auto ctrl = check_control_vars(source_dir() / "corpus");
  auto supp = check_suppression(200, 7u);
  double secs = seconds_since(t0);
  bool ok = det.ok && mono.ok && mono.cases == 100 && ctrl.ok && supp.ok && secs < 30.0;
  char buf[200];
  std::snprintf(buf, sizeof buf, "determinism %d runs, monotonicity %d, control-vars %d loops, suppression %d, %.2fs",
                det.cases, mono.cases, ctrl.cases, supp.cases, secs);
  std::string detail = buf;
  for (const auto* p : {&det, &mono, &ctrl, &supp}) {
    if (!p->ok) detail += "; " + p->detail;
  }
  report(5, "property suite", ok, detail);
}

void corpus() {
  fs::path root = source_dir() / "corpus";
  CorpusReport r = run_corpus(root, Config{});
  // Snippets with expectations vs clean files.
  std::map<std::string, int> expected_per_file;
  for (const auto& e : r.matched) ++expected_per_file[e.path];
  for (const auto& e : r.missing) ++expected_per_file[e.path];
  int annotated = static_cast<int>(expected_per_file.size());
  int clean = r.files - annotated;
  bool all_rules = r.rows.at("RNC001").matched > 0 && r.rows.at("MOB001").matched > 0 &&
                   r.rows.at("DPM001").matched > 0;
  bool ok = r.missing.empty() && r.unexpected.empty() && annotated >= 30 && clean >= 10 && all_rules;
  report(6, "annotated corpus", ok,
         std::to_string(annotated) + " annotated snippets, " + std::to_string(clean) + " clean, matched " +
             std::to_string(r.matched.size()) + ", missing " + std::to_string(r.missing.size()) + ", unexpected " +
             std::to_string(r.unexpected.size()));
}

void known_limitation() {
  auto diags = run_check({fixture("known_limitation_mutator.py")}, Config{}).diagnostics;
  bool ok = lines_of(diags, "RNC001") == std::vector<int>{10} && diags.size() == 1;
  report(7, "known-limitation fixture flagged (large-scale repository study not reproducible offline)", ok,
         "RNC001 " + lines(lines_of(diags, "RNC001")));
}

}  // namespace



int main() {
  golden_fixtures();
  catalog_semantics();
  interprocedural();
  dynamic_oracle();
  properties();
  corpus();
  known_limitation();
  return failures == 0 ? 0 : 1;
}
