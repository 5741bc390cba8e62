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

#include <fstream>
#include <functional>
#include <sstream>

#include "doctest.h"
#include "dlperf/traversal.hpp"
#include "support.hpp"

using namespace dlperf;
using dlperf::testing::fixture;
using dlperf::testing::parse_text;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

void walk(const Node& n, const std::function<void(const Node&)>& fn) {
  fn(n);
  for (const Node* c : children(n)) walk(*c, fn);
}

}  // namespace

TEST_SUITE("source_model") {
  TEST_CASE("minimal program has one assignment") {
    auto u = parse_text("x = 1\n");
    REQUIRE(u->root().body.size() == 1);
    CHECK(u->root().body[0]->kind == NodeKind::Assign);
  }

  TEST_CASE("malformed input reports line 1") {
    ParseOutcome out = parse_source("bad.py", "def f(:\n");
    REQUIRE_FALSE(out.ok());
    CHECK(out.error->span.start_line == 1);
  }

  TEST_CASE("empty module has no calls or loops") {
    auto u = parse_text("");
    CHECK(iter_calls(*u).empty());
    CHECK(iter_loops(*u).empty());
  }

  TEST_CASE("nested calls are reported inner first") {
    auto u = parse_text("f(g(x))\n");
    auto calls = iter_calls(*u);
    REQUIRE(calls.size() == 2);
    CHECK(dotted_name(*calls[0].callee) == "g");
    CHECK(dotted_name(*calls[1].callee) == "f");
  }

  TEST_CASE("tfrecord pipeline function calls") {
    auto u = parse_text(read(fixture("fig1_buggy.py")), "fig1_buggy.py");
    const Node* fn = nullptr;
    for (const Node* s : u->root().body) {
      if (s->is(NodeKind::FunctionDef) && s->name == "init_tfrecord_dataset") fn = s;
    }
    REQUIRE(fn != nullptr);
    std::set<std::string> names;
    for (const auto& c : iter_calls(*u, fn)) names.insert(dotted_name(*c.callee));
    for (const char* want : {"glob.glob", "random.shuffle", "tf.data.TFRecordDataset", "ds.shuffle", "ds.map",
                             "ds.batch", "ds.repeat", "ds.make_initializable_iterator"}) {
      CHECK_MESSAGE(names.count(want) == 1, want);
    }
  }

  TEST_CASE("training loop fixture has one for loop over epoch with three statements") {
    auto u = parse_text(read(fixture("fig2_buggy.py")), "fig2_buggy.py");
    auto loops = iter_loops(*u);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].kind == LoopKind::For);
    CHECK(loops[0].targets == std::set<std::string>{"epoch"});
    CHECK(loops[0].body->size() == 3);
    CHECK(iter_calls(*u, *loops[0].body, false).size() == 3);
  }

  TEST_CASE("while True has no targets") {
    auto u = parse_text("while True: pass\n");
    auto loops = iter_loops(*u);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].kind == LoopKind::While);
    CHECK(loops[0].targets.empty());
  }

  TEST_CASE("nested loops come outer first") {
    auto u = parse_text("for i in a:\n    for j in b:\n        pass\n");
    auto loops = iter_loops(*u);
    REQUIRE(loops.size() == 2);
    CHECK(loops[0].targets == std::set<std::string>{"i"});
    CHECK(loops[1].targets == std::set<std::string>{"j"});
  }

  TEST_CASE("call site keyword and star queries") {
    auto u = parse_text("ds.map(f, *a, num_parallel_calls=4, **kw)\n");
    auto calls = iter_calls(*u);
    REQUIRE(calls.size() == 1);
    CHECK(calls[0].method_name() == "map");
    CHECK(calls[0].has_keyword("num_parallel_calls"));
    CHECK(calls[0].has_star_args());
    CHECK(calls[0].has_double_star_kwargs());
  }

  TEST_CASE("spans lie within the text and offsets round-trip") {
    for (const char* f : {"fig1_buggy.py", "fig1_fixed.py", "fig2_buggy.py", "fig2_fixed.py"}) {
      auto u = parse_text(read(fixture(f)), f);
      std::size_t n = u->text().size();
      walk(u->root(), [&](const Node& node) {
        CHECK(node.range.begin <= node.range.end);
        CHECK(node.range.end <= n);
        CHECK(u->lines().offset(u->lines().position(node.range.begin)) == node.range.begin);
      });
    }
  }

  TEST_CASE("module names from relative paths") {
    CHECK(module_name_for("pkg/sub/mod.py") == "pkg.sub.mod");
    CHECK(module_name_for("pkg/__init__.py") == "pkg");
  }

  TEST_CASE("comments are collected with positions") {
    auto u = parse_text("x = 1  # note\n# alone\n");
    REQUIRE(u->comments().size() == 2);
    CHECK(u->comments()[0].line == 1);
    CHECK(u->comments()[0].col == 7);
    CHECK(u->comments()[1].text == "# alone");
  }
}
