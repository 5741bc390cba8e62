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

"""Validates `dlperf check --format json` output against the schema.

Usage: check_schema.py DLPERF SCHEMA PATH...
Exits 77 (skipped) when the jsonschema package is unavailable.
"""

import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed")
    sys.exit(77)


def main():
    exe, schema_path, *paths = sys.argv[1:]
    schema = json.load(open(schema_path))
    runs = [paths, [paths[-1]], ["--show-suppressed"] + paths, ["--rules", "DPM001"] + paths]
    for extra in runs:
        out = subprocess.run([exe, "check", "--format", "json", *extra], capture_output=True, text=True)
        doc = json.loads(out.stdout)
        jsonschema.validate(doc, schema)
        if doc["summary"]["exit_code"] != out.returncode:
            print("exit code mismatch", extra)
            return 1
        if sum(doc["summary"]["findings_per_rule"].values()) != len(doc["diagnostics"]):
            print("findings_per_rule does not add up", extra)
            return 1
        print("valid:", " ".join(extra), len(doc["diagnostics"]), "diagnostics")
    return 0


if __name__ == "__main__":
    sys.exit(main())
