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
#include <sstream>

#include "doctest.h"
#include "dlperf/traversal.hpp"
#include "support.hpp"

using namespace dlperf;
using dlperf::testing::analyze;
using dlperf::testing::fixture;
using dlperf::testing::parse_text;

namespace {

std::string read(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream b;
  b << in.rdbuf();
  return b.str();
}

LoopAnalysis first_loop(const std::string& text, const std::set<std::string>& defs) {
  auto u = parse_text(text);
  auto loops = iter_loops(*u);
  REQUIRE(!loops.empty());
  // The unit must outlive the analysis only while it is inspected here.
  static std::vector<std::shared_ptr<const SourceUnit>> keep;
  keep.push_back(u);
  return changed_vars(loops[0], defs);
}

}  // namespace

TEST_SUITE("checkers") {
  TEST_CASE("rule registry") {
    CHECK(all_rules().size() == 3);
    CHECK(parse_rule_code("RNC001") == Rule::RNC001);
    CHECK_FALSE(parse_rule_code("NOPE").has_value());
    CHECK(rule_info(Rule::RNC001).taxonomy_tag == "Confusion with Computation Graph");
    CHECK(rule_info(Rule::DPM001).taxonomy_tag == "Inefficient API Usage");
  }

  TEST_CASE("training loop changes only epoch") {
    auto a = first_loop(read(fixture("fig2_buggy.py")), {"tf", "inp", "out", "weight", "optimizer", "sess"});
    CHECK(a.changed == std::set<std::string>{"epoch"});
    CHECK(a.control_vars == std::set<std::string>{"epoch"});
  }

  TEST_CASE("dependence on the control variable") {
    auto a = first_loop("for i in r:\n    x = f(i)\n", {"r", "f"});
    CHECK(a.changed == std::set<std::string>{"i", "x"});
  }

  TEST_CASE("accumulator is changed") {
    auto a = first_loop("s = 0\nfor i in r:\n    s += 1\n    g(s)\n", {"s", "r", "g"});
    CHECK(a.changed == std::set<std::string>{"i", "s"});
    CHECK(a.defined_outside_reassigned == std::set<std::string>{"s"});
  }

  TEST_CASE("transitive closure through outer reassignment") {
    auto a = first_loop("for i in r:\n    y = z\n    z = i\n", {});
    CHECK(a.changed == std::set<std::string>{"i", "y", "z"});
  }

  TEST_CASE("training loop buggy and fixed") {
    auto buggy = analyze({{"fig2_buggy.py", read(fixture("fig2_buggy.py"))}}, {Rule::RNC001});
    REQUIRE(buggy.size() == 2);
    CHECK(buggy[0].span.start_line == 12);
    CHECK(buggy[0].subject == "tensorflow.matmul");
    CHECK(buggy[1].span.start_line == 14);
    CHECK(buggy[1].subject == "tensorflow.train.GradientDescentOptimizer.minimize");
    CHECK(analyze({{"fig2_fixed.py", read(fixture("fig2_fixed.py"))}}).empty());
  }

  TEST_CASE("argument reading the control variable is not flagged") {
    CHECK(analyze({{"a.py", "import tensorflow as tf\nfor i in r:\n    tf.matmul(a, b[i])\n"}}).empty());
  }

  TEST_CASE("nondeterministic APIs are not flagged and taint their targets") {
    auto fs = analyze({{"a.py",
                        "import tensorflow as tf\nfor i in range(3):\n    n = tf.random.uniform([2])\n"
                        "    tf.nn.relu(n)\n    tf.matmul(a, b)\n"}});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].span.start_line == 5);
  }

  TEST_CASE("local builder is flagged at depth 1") {
    std::string src =
        "import tensorflow as tf\n"
        "def build():\n"
        "    return tf.matmul(a, b)\n"
        "for i in range(3):\n"
        "    build()\n";
    auto fs = analyze({{"m.py", src}});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].span.start_line == 3);
    CHECK(fs[0].depth == 1);
    CHECK(fs[0].via == std::vector<std::string>{"m.build"});
    CHECK(analyze({{"m.py", src}}, every_rule(), 0).empty());
  }

  TEST_CASE("changed argument through a parameter removes the finding") {
    std::string src =
        "import tensorflow as tf\n"
        "def build(v):\n"
        "    return tf.matmul(a, v)\n"
        "for i in range(3):\n"
        "    build(i)\n";
    CHECK(analyze({{"m.py", src}}).empty());
  }

  TEST_CASE("keyword and star arguments bind to parameters") {
    std::string src =
        "import tensorflow as tf\n"
        "def build(a, *rest, scale=1, **kw):\n"
        "    tf.constant(scale)\n"
        "    tf.stack(rest)\n"
        "    tf.constant(kw)\n"
        "    tf.constant(a)\n"
        "for i in range(3):\n"
        "    build(0, i, scale=i, extra=i)\n";
    auto fs = analyze({{"m.py", src}});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].span.start_line == 6);
  }

  TEST_CASE("cross-module builder") {
    auto fs = analyze({{"pkg/models.py", "import tensorflow as tf\ndef build():\n    return tf.square(k)\n"},
                       {"pkg/train.py", "from .models import build\nfor e in range(3):\n    build()\n"}});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].path == "pkg/models.py");
    CHECK(fs[0].loop_path == "pkg/train.py");
  }

  TEST_CASE("recursion terminates") {
    std::string src =
        "import tensorflow as tf\n"
        "def f(n):\n"
        "    tf.constant(1)\n"
        "    return f(n)\n"
        "for i in range(3):\n"
        "    f(i)\n";
    CHECK(analyze({{"m.py", src}}, every_rule(), 8).size() == 1);
  }

  TEST_CASE("known limitation: unlisted mutator on a receiver is flagged") {
    auto fs = analyze({{"k.py", read(fixture("known_limitation_mutator.py"))}});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].rule == Rule::RNC001);
    CHECK(fs[0].span.start_line == 10);
  }

  TEST_CASE("map before batch") {
    auto buggy = analyze({{"f.py", read(fixture("fig1_buggy.py"))}}, {Rule::MOB001});
    REQUIRE(buggy.size() == 1);
    CHECK(buggy[0].span.start_line == 28);
    CHECK(buggy[0].related_span->start_line == 30);
    CHECK(analyze({{"f.py", read(fixture("fig1_fixed.py"))}}, {Rule::MOB001}).empty());
    CHECK(analyze({{"a.py", "import tensorflow as tf\nd = tf.data.Dataset.range(3)\nd = d.map(f)\nd = d.repeat()\n"}},
                  {Rule::MOB001})
              .empty());
  }

  TEST_CASE("padded_batch closes a map") {
    auto fs = analyze({{"a.py", "import tensorflow as tf\nd = tf.data.Dataset.range(3).map(f, 2).padded_batch(2)\n"}});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].rule == Rule::MOB001);
    CHECK(fs[0].related_method == "padded_batch");
  }

  TEST_CASE("missing parallelism") {
    auto buggy = analyze({{"f.py", read(fixture("fig1_buggy.py"))}}, {Rule::DPM001});
    REQUIRE(buggy.size() == 1);
    CHECK(buggy[0].span.start_line == 28);
    CHECK(analyze({{"f.py", read(fixture("fig1_fixed.py"))}}, {Rule::DPM001}).empty());
    auto inter = analyze({{"a.py", "import tensorflow as tf\nd = tf.data.Dataset.range(3)\nd = d.interleave(g)\n"}});
    REQUIRE(inter.size() == 1);
    CHECK(inter[0].subject == "interleave");
  }

  TEST_CASE("parallelism given positionally or through kwargs") {
    const char* src =
        "import tensorflow as tf\n"
        "d = tf.data.Dataset.range(3)\n"
        "d = d.map(f, 4)\n"
        "d = d.map(f, **opts)\n"
        "d = d.interleave(f, 2, 1, 4)\n"
        "d = d.interleave(f, 2, 1)\n";
    auto fs = analyze({{"a.py", src}}, {Rule::DPM001});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].span.start_line == 6);
  }

  TEST_CASE("run_rules combinations") {
    std::string pipeline = read(fixture("fig1_buggy.py"));
    auto all = analyze({{"fig1_buggy.py", pipeline}});
    REQUIRE(all.size() == 2);
    CHECK(all[0].span.start_line == 28);
    CHECK(all[1].span.start_line == 28);
    CHECK(analyze({{"fig1_buggy.py", pipeline}}, {}).empty());
    auto both = analyze({{"fig1_buggy.py", pipeline}, {"fig2_buggy.py", read(fixture("fig2_buggy.py"))}});
    CHECK(both.size() == 4);
  }

  TEST_CASE("findings are sorted and unique") {
    auto fs = analyze({{"b.py", "import tensorflow as tf\nfor i in r:\n    for j in r:\n        tf.constant(1)\n"},
                       {"a.py", "import tensorflow as tf\nfor i in r:\n    tf.constant(1)\n"}});
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].path == "a.py");
    CHECK(fs[1].path == "b.py");
  }
}
