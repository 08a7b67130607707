"""Runs uga-cli end to end: exit codes, schema validity and byte-identical reruns."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BINARY, SCHEMA = sys.argv[1], sys.argv[2]

S3 = '{"type":"symmetric","n":3}'
C3 = '{"type":"cyclic","n":3}'

failures = []


def run(args, env=None):
    full_env = dict(os.environ)
    full_env.pop("UGA_BUDGET", None)
    full_env.update(env or {})
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout


def check(name, ok, detail=""):
    if not ok:
        failures.append(f"{name}: {detail}")
    print(("ok   " if ok else "FAIL ") + name)


def verdicts(report):
    return {v["name"]: v for v in report.get("verdicts", [])}


with open(SCHEMA) as f:
    schema = json.load(f)
validator = jsonschema.Draft7Validator(schema)

stage_file = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
json.dump(
    {
        "p": 5,
        "column_set": [0, 1, 2],
        "tail_index": 4,
        "threshold": "1/5",
        "stages": [{"index": l, "bound": 1, "entries": [[0, l, f"1/{5 ** l}"]]} for l in range(8)],
    },
    stage_file,
)
stage_file.close()

cases = [
    # name, args, expected exit code, extra check on the parsed report
    ("analyze S3 over F5", ["analyze", "--group", S3, "--p", "5"], 0,
     lambda r: verdicts(r)["semisimple"]["value"] is True
     and verdicts(r)["wedderburn"]["value"] == "[(1,1),(1,1),(2,1)]"
     and verdicts(r)["baer"]["value"] is True
     and verdicts(r)["kaplansky_type"]["value"] == "I finite"),
    ("analyze C3 over F3", ["analyze", "--group", C3, "--p", "3"], 0,
     lambda r: verdicts(r)["semisimple"]["value"] is False and verdicts(r)["baer"]["value"] is False
     and "baer_witness" in r["certificates"]),
    ("analyze without --p", ["analyze", "--group", C3], 1, lambda r: r["status"] == "error"),
    ("analyze with malformed JSON", ["analyze", "--group", "{type", "--p", "5"], 1, lambda r: r["status"] == "error"),
    ("analyze over budget", ["analyze", "--group", S3, "--p", "5", "--budget", "100"], 2,
     lambda r: r["error"]["kind"] == "BudgetExceeded"),
    ("UGA_BUDGET default", ["baer", "--group", S3, "--p", "5"], 2, lambda r: r["error"]["budget"] == 50),
    ("analyze sampled", ["analyze", "--group", S3, "--p", "5", "--budget", "100", "--samples", "40"], 0,
     lambda r: verdicts(r)["baer"]["label"] == "sampled evidence"),
    ("factor-check free group", ["factor-check", "--family", '{"type":"free","rank":2}', "--probes", "a,b"], 0,
     lambda r: verdicts(r)["factor"]["value"] == "factor" and verdicts(r)["factor"]["label"] == "family-certified"),
    ("factor-check infinite dihedral", ["factor-check", "--family", '{"type":"infinite_dihedral"}', "--probes", "r"], 0,
     lambda r: verdicts(r)["factor"]["value"] == "not a factor"
     and sorted(r["certificates"]["finite_class"]["class"]) == ["r", "r^-1"]),
    ("factor-check free abelian", ["factor-check", "--family", '{"type":"free_abelian","rank":1}'], 0,
     lambda r: verdicts(r)["factor"]["value"] == "not a factor" and verdicts(r)["factor"]["label"] == "exact"),
    ("factor-check identity probe", ["factor-check", "--family", '{"type":"free","rank":2}', "--probes", "1"], 1,
     lambda r: r["error"]["kind"] == "IdentityProbe"),
    ("factor-check unknown family", ["factor-check", "--family", '{"type":"lamplighter"}'], 1,
     lambda r: r["error"]["kind"] == "UnsupportedFamily"),
    ("convergence scalar-decay", ["convergence", "--scenario", "scalar-decay"], 0,
     lambda r: verdicts(r)["strong_convergence"]["value"] == "ConvergesEvidence"),
    ("convergence column-shift", ["convergence", "--scenario", "column-shift"], 0,
     lambda r: verdicts(r)["strong_convergence"]["value"] == "ConvergesEvidence"
     and all(s["norm"] == "1" for s in r["result"]["stage_norms"])),
    ("convergence unbounded-growth", ["convergence", "--scenario", "unbounded-growth"], 0,
     lambda r: verdicts(r)["strong_convergence"]["value"] == "FailsBound"
     and "diverging_probe" in r["certificates"]),
    ("convergence unknown scenario", ["convergence", "--scenario", "nope"], 1, lambda r: r["status"] == "error"),
    ("convergence stage file", ["convergence", "--stages", stage_file.name], 0,
     lambda r: verdicts(r)["strong_convergence"]["value"] == "FailsBound"),
    ("wedderburn F2[C3]", ["wedderburn", "--group", C3, "--p", "2"], 0,
     lambda r: verdicts(r)["wedderburn"]["value"] == "[(1,1),(1,2)]"),
    ("wedderburn split request", ["wedderburn", "--group", C3, "--p", "2", "--split"], 1,
     lambda r: r["error"]["degree"] == 2),
    ("wedderburn structure constants",
     ["wedderburn", "--algebra", '{"field":{"p":3},"dim":2,"table":[[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,2]],"unit":[1,0]}'],
     0, lambda r: verdicts(r)["wedderburn"]["value"] == "[(1,2)]"),
    ("baer F3[C3]", ["baer", "--group", C3, "--p", "3"], 0, lambda r: verdicts(r)["baer"]["value"] is False),
    ("pretty output", ["--pretty", "baer", "--group", C3, "--p", "2"], 0,
     lambda r: verdicts(r)["kaplansky_type"]["value"] == "I finite"),
]

for name, args, code, extra in cases:
    env = {"UGA_BUDGET": "50"} if name == "UGA_BUDGET default" else None
    rc1, out1 = run(args, env)
    rc2, out2 = run(args, env)
    check(name + " exit code", rc1 == code, f"got {rc1}, expected {code}")
    check(name + " deterministic", rc1 == rc2 and out1 == out2)
    try:
        report = json.loads(out1)
    except json.JSONDecodeError as e:
        check(name + " parses", False, str(e))
        continue
    errors = sorted(validator.iter_errors(report), key=str)
    check(name + " schema", not errors, "; ".join(e.message for e in errors[:3]))
    try:
        check(name + " content", bool(extra(report)))
    except (KeyError, TypeError) as e:
        check(name + " content", False, repr(e))

rc, out = run(["--timing", "convergence", "--scenario", "column-shift"])
report = json.loads(out)
check("timing is opt-in", rc == 0 and "timing_ms" in report and not list(validator.iter_errors(report)))

os.unlink(stage_file.name)
if failures:
    print("\n".join(failures), file=sys.stderr)
    sys.exit(1)
