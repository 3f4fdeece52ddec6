"""CLI checks: exit codes, determinism and JSON schema conformance.

usage: test_cli.py IGTN_BINARY SCHEMA
"""

import json
import subprocess
import sys

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]
with open(SCHEMA) as fh:
    VALIDATOR = jsonschema.Draft202012Validator(json.load(fh))

TWO = "[1,1,3,3,5] [1,2,1,2,5]"
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def expect(args, code, contains=None):
    p = run(*args)
    if p.returncode != code:
        failures.append(f"{args}: exit {p.returncode}, expected {code}\n{p.stdout}{p.stderr}")
    if contains and contains not in p.stdout:
        failures.append(f"{args}: output lacks {contains!r}\n{p.stdout}")
    return p


def expect_json(args, code):
    p = expect([*args, "--format", "json"], code)
    try:
        doc = json.loads(p.stdout)
    except json.JSONDecodeError as e:
        failures.append(f"{args}: not JSON ({e})")
        return None
    for err in VALIDATOR.iter_errors(doc):
        failures.append(f"{args}: schema violation at {list(err.path)}: {err.message}")
    return doc


# exit codes
expect(["equal", "-n", "4", "e(1,2) e(2,1)", "e(2,1)"], 0, "Equal")
expect(["equal", "-n", "5", TWO, TWO], 0)
expect(["equal", "-n", "5", "[1,1,3,3,5]", "[1,2,1,2,5]"], 1, "NotEqual")
expect(["equal", "-n", "4", "e(1,5)", "id"], 3)
expect(["equal", "-n", "11", "id", "id"], 3)
expect(["equal", "-n", "4"], 3)
expect(["green", "-n", "5", "--rel", "H", TWO, TWO], 0)
expect(["green", "-n", "5", "--rel", "Q", TWO, TWO], 3)
expect(["schutz", "-n", "5", "[1,1,3,3,5]"], 3)
expect(["schutz", "-n", "5", "[1,1,3,4,5] [1,2,3,4,4]"], 2)
expect(["vertex-group", "-n", "5", "-A", "{1,2}", "-P", "{{1,2},{3},{4},{5}}"], 0,
       "order 1 (stationary; AHom order 12)")
expect(["vertex-group", "-n", "5", "-A", "{1,3,5}", "-P", "{{1,3},{2,4},{5}}", "--oracle"], 0,
       "order 2")
expect(["vertex-group", "-n", "5", "-A", "{1,2,3,4}", "-P", "{{1,5},{2},{3},{4}}"], 2)
expect(["ahom", "-n", "5", "-A", "{1,2}", "-P", "{{1,2},{3},{4},{5}}"], 0, "order 12")
expect(["graph", "-n", "9", "-m", "2", "-r", "2"], 3)
expect(["fingerprint", "-n", "5", TWO], 0, "(3,3)")
expect(["fingerprint", "-n", "5", "id"], 0, "(5)")

# determinism
a = run("graph", "-n", "4", "-m", "2", "-r", "2", "--dot").stdout
b = run("graph", "-n", "4", "-m", "2", "-r", "2", "--dot").stdout
if not a.startswith("digraph") or a != b:
    failures.append("graph --dot output is not stable")

# schema
expect_json(["equal", "-n", "5", TWO, TWO, "--trace"], 0)
expect_json(["equal", "-n", "5", "[1,1,3,3,5]", "[1,2,1,2,5]"], 1)
expect_json(["green", "-n", "5", "--rel", "D", TWO, "[1,1,3,3,5]"], 1)
expect_json(["rfactor", "-n", "5", TWO], 0)
expect_json(["fingerprint", "-n", "4", "e(1,2) e(2,1)"], 0)
doc = expect_json(["vertex-group", "-n", "5", "-A", "{1,2}", "-P", "{{1,2},{3},{4},{5}}"], 0)
if doc and doc.get("note") != "stationary; AHom order 12":
    failures.append("vertex-group note missing")
expect_json(["vertex-group", "-n", "5", "-A", "{1,3,5}", "-P", "{{1,3},{2,4},{5}}",
             "--oracle", "--elements"], 0)
expect_json(["ahom", "-n", "6", "-A", "{1,4}", "-P", "{{1,2},{3,4},{5},{6}}"], 0)
doc = expect_json(["graph", "-n", "4", "-m", "2", "-r", "2", "--policy", "all"], 0)
if doc and len(doc["vertices"]) != 42:
    failures.append("graph vertex count")
doc = expect_json(["components", "-n", "5", "-m", "2", "-r", "3"], 0)
if doc and sorted(t["type"] for t in doc["non_stationary"]) != [[1, 1, 0], [2, 0, 0]]:
    failures.append("components by type")
expect_json(["components", "-n", "4", "-m", "2", "-r", "3"], 0)
expect_json(["schutz", "-n", "5", TWO], 0)
expect_json(["selftest", "--level", "quick"], 0)

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
