# Copyright 2026 The dlperf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Instrument-and-execute oracle for repeated node creation.

Each snippet runs against a fake ``tensorflow`` module whose tensors are
structural values: two calls with equal arguments yield equal tensors, while
random ops yield fresh values. Loops are rewritten to report entry, exit and
every iteration, so each recorded call knows the innermost dynamic loop
instance and iteration it ran in.

A call line is flagged when, within one loop instance, it ran in at least two
iterations and every recorded argument tuple is identical.

Usage:
  dynamic_oracle.py SNIPPET_DIR                 print results as JSON
  dynamic_oracle.py SNIPPET_DIR --freeze FILE   write results to FILE
  dynamic_oracle.py SNIPPET_DIR --check FILE    exit 1 if FILE differs
"""

import argparse
import ast
import itertools
import json
import pathlib
import sys
import types

NODE_CREATING = {
    "add", "cast", "constant", "global_variables_initializer", "matmul",
    "multiply", "nn.relu", "reduce_sum", "square", "Variable", "zeros",
    "train.GradientDescentOptimizer.minimize",
}
RANDOM = {"random.uniform", "random.normal", "nn.dropout"}


class Recorder:
    def __init__(self):
        self.stack = []  # [loop instance id, iteration]
        self.instances = itertools.count()
        self.calls = {}  # (line, instance) -> {iteration: [args]}

    def enter(self):
        self.stack.append([next(self.instances), -1])

    def tick(self):
        self.stack[-1][1] += 1

    def exit(self):
        self.stack.pop()

    def record(self, line, args):
        if not self.stack:
            return
        instance, iteration = self.stack[-1]
        self.calls.setdefault((line, instance), {}).setdefault(iteration, []).append(args)

    def flagged_lines(self):
        lines = set()
        for (line, _), per_iter in self.calls.items():
            tuples = [t for group in per_iter.values() for t in group]
            if len(per_iter) >= 2 and all(t == tuples[0] for t in tuples):
                lines.add(line)
        return sorted(lines)


class Tensor:
    fresh = itertools.count()

    def __init__(self, key):
        self.key = key

    def __eq__(self, other):
        return isinstance(other, Tensor) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def _op(self, name, *others):
        return Tensor((name, self.key) + tuple(snapshot(o) for o in others))

    def __getitem__(self, i):
        return self._op("getitem", i)

    def __add__(self, o):
        return self._op("add", o)

    __radd__ = __add__

    def __sub__(self, o):
        return self._op("sub", o)

    def __rsub__(self, o):
        return self._op("rsub", o)

    def __mul__(self, o):
        return self._op("mul", o)

    __rmul__ = __mul__


def snapshot(value):
    if isinstance(value, Tensor):
        return ("T", value.key)
    if isinstance(value, (list, tuple)):
        return tuple(snapshot(v) for v in value)
    if isinstance(value, dict):
        return tuple(sorted((k, snapshot(v)) for k, v in value.items()))
    if isinstance(value, (int, float, str, bool, type(None))):
        return value
    if isinstance(value, Api):
        return ("api", value.path)
    return ("obj", id(value))


class Api:
    def __init__(self, recorder, path):
        self.recorder = recorder
        self.path = path

    def __getattr__(self, name):
        return Api(self.recorder, f"{self.path}.{name}" if self.path else name)

    def __call__(self, *args, **kwargs):
        key = snapshot((list(args), kwargs))
        if self.path in RANDOM:
            return Tensor(("random", next(Tensor.fresh)))
        if self.path in NODE_CREATING:
            frame = sys._getframe(1)
            if frame.f_code.co_filename == "<snippet>":
                self.recorder.record(frame.f_lineno, key)
        if self.path.split(".")[-1][:1].isupper():
            return Instance(self.recorder, self.path)
        return Tensor((self.path, key))


class Instance(Api):
    def __call__(self, *args, **kwargs):
        return Tensor((self.path, "call", snapshot((list(args), kwargs))))


class Session:
    def __init__(self, *args, **kwargs):
        pass

    def run(self, *args, **kwargs):
        return None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


class LoopInstrumenter(ast.NodeTransformer):
    def _call(self, name):
        return ast.Expr(ast.Call(ast.Attribute(ast.Name("__oracle__", ast.Load()), name, ast.Load()), [], []))

    def _wrap(self, loop):
        self.generic_visit(loop)
        loop.body.insert(0, self._call("tick"))
        guarded = ast.Try(body=[loop], handlers=[], orelse=[], finalbody=[self._call("exit")])
        return [self._call("enter"), guarded]

    def visit_For(self, node):
        return self._wrap(node)

    def visit_While(self, node):
        return self._wrap(node)


def run_snippet(path):
    recorder = Recorder()
    fake = types.ModuleType("tensorflow")
    root = Api(recorder, "")
    fake.__getattr__ = root.__getattr__
    fake.Session = Session
    fake.float32 = "float32"
    tree = LoopInstrumenter().visit(ast.parse(path.read_text()))
    ast.fix_missing_locations(tree)
    saved = sys.modules.get("tensorflow")
    sys.modules["tensorflow"] = fake
    try:
        exec(compile(tree, "<snippet>", "exec"), {"__oracle__": recorder, "__name__": "__snippet__"})
    finally:
        if saved is None:
            del sys.modules["tensorflow"]
        else:
            sys.modules["tensorflow"] = saved
    return recorder.flagged_lines()


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("snippets", type=pathlib.Path)
    ap.add_argument("--freeze", type=pathlib.Path)
    ap.add_argument("--check", type=pathlib.Path)
    args = ap.parse_args()
    result = {p.name: run_snippet(p) for p in sorted(args.snippets.glob("*.py"))}
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    if args.freeze:
        args.freeze.write_text(text)
    elif args.check:
        frozen = json.loads(args.check.read_text())
        if frozen != result:
            print("oracle output differs from", args.check)
            print(text)
            return 1
        print(f"oracle agrees with {args.check} on {len(result)} snippets")
    else:
        print(text, end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
