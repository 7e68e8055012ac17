"""Exit codes and output formats of the sigma-spectra command line tool.

usage: test_cli.py <path to sigma-spectra> <repository root>
"""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
ROOT = Path(sys.argv[2])
FIX = ROOT / "fixtures"

schemas = {p.name: json.loads(p.read_text()) for p in (ROOT / "schemas").glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

failures = []


def run(*args):
    return subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, timeout=300)


def validate(doc, schema):
    jsonschema.Draft202012Validator(schemas[schema], registry=registry).validate(doc)


def case(name, fn):
    try:
        fn()
        print(f"ok   {name}")
    except Exception as e:  # noqa: BLE001
        failures.append(name)
        print(f"FAIL {name}: {e}")


def expect_exit(p, code):
    assert p.returncode == code, f"exit {p.returncode}, wanted {code}; stderr: {p.stderr.strip()}"


A1 = ["--n", 7, "--r", 12, "--q", 6, "--sigma", "6,6", "--alpha", 3, "--beta", 3]
A2 = ["--n", 5, "--r", 4, "--q", 2, "--sigma", "2,2", "--alpha", 3, "--beta", 3]


def spectrum_gap():
    p = run("spectrum", *A1)
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    validate(doc, "run_report.schema.json")
    feasible = doc["result"]["feasible_k"]
    assert 3 in feasible and 4 not in feasible and 8 in feasible, feasible
    assert doc["complete"] is True


def spectrum_single():
    p = run("spectrum", *A2)
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    validate(doc, "run_report.schema.json")
    validate(doc["result"], "spectrum_result.schema.json")
    assert doc["result"]["feasible_k"] == [6]
    assert doc["result"]["gaps"] == []


def spectrum_csv():
    p = run("spectrum", *A2, "--format", "csv")
    expect_exit(p, 0)
    assert "\r" not in p.stdout
    lines = p.stdout.split("\n")
    assert lines[0] == "k,feasible,nodes_explored", lines[0]
    assert lines[-1] == ""
    rows = [line.split(",") for line in lines[1:-1]]
    assert [int(r[0]) for r in rows] == list(range(1, 11))
    assert [r[1] for r in rows if r[1] == "true"] == ["true"]
    assert rows[5][1] == "true"


def spectrum_bad_sigma():
    p = run("spectrum", "--n", 5, "--r", 4, "--q", 2, "--sigma", "2,3", "--alpha", 3, "--beta", 3)
    expect_exit(p, 2)
    assert "sums to 5" in p.stderr


def spectrum_truncated():
    p = run("spectrum", *A1, "--k-max", 6, "--budget", 10)
    expect_exit(p, 3)
    doc = json.loads(p.stdout)
    validate(doc, "run_report.schema.json")
    assert doc["complete"] is False
    assert doc["result"]["unknown_k"]


def spectrum_spec_file():
    p = run("spectrum", "--spec-file", FIX / "h5_4_2_spec.json")
    expect_exit(p, 0)
    assert json.loads(p.stdout)["result"]["feasible_k"] == [6]


def check_valid():
    p = run("check", "--spec-file", FIX / "h5_4_2_spec.json", "--colouring-file", FIX / "h5_4_2_six_colours.json")
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    validate(doc, "run_report.schema.json")
    assert doc["result"]["verdict"] == "valid"


def check_three_and_eight():
    for f in ("h7_12_6_three_colours.json", "h7_12_6_eight_colours.json"):
        p = run("check", *A1, "--colouring-file", FIX / f)
        expect_exit(p, 0)


def check_one_colour():
    p = run("check", "--spec-file", FIX / "h5_4_2_spec.json", "--colouring-file", FIX / "h5_4_2_one_colour.json")
    expect_exit(p, 1)
    doc = json.loads(p.stdout)
    validate(doc, "run_report.schema.json")
    assert doc["result"]["verdict"] == "invalid"
    assert doc["result"]["witness"]["distinct_colours"] == 1


def check_truncated():
    p = run("check", "--spec-file", FIX / "h5_4_2_spec.json", "--colouring-file", FIX / "truncated.json")
    expect_exit(p, 2)


def check_shape_mismatch():
    p = run("check", *A1, "--colouring-file", FIX / "h5_4_2_six_colours.json")
    expect_exit(p, 2)


def construct_and_check():
    spec = ["--n", 6, "--r", 3, "--q", 4, "--sigma", "1,1,1", "--alpha", 2, "--beta", 7]
    for kind, k in (("mono", 3), ("mono", 6), ("layered", 12), ("layered", 13)):
        p = run("construct", *spec, "--kind", kind, "--k", k)
        expect_exit(p, 0)
        doc = json.loads(p.stdout)
        validate(doc, "colouring.schema.json")
        assert len({c for cls in doc["classes"] for c in cls}) == k


def construct_beta():
    p = run("construct", "--n", 6, "--r", 5, "--q", 6, "--sigma", "3,2", "--alpha", 2, "--beta", 3, "--kind", "beta")
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    assert doc["classes"][0] == [0, 0, 1, 1, 2, 2]


def construct_out_of_zone():
    p = run("construct", "--n", 5, "--r", 4, "--q", 2, "--sigma", "2,2", "--alpha", 2, "--beta", 2,
            "--kind", "mono", "--k", 4)
    expect_exit(p, 2)


def walk_down(tmp=Path("/tmp")):
    spec = ["--n", 5, "--r", 3, "--q", 3, "--sigma", "1,1,1", "--alpha", 2, "--beta", 6]
    start = run("construct", *spec, "--kind", "layered", "--k", 10)
    expect_exit(start, 0)
    path = tmp / "sigma_spectra_walk_start.json"
    path.write_text(start.stdout)
    p = run("walk", *spec, "--colouring-file", path, "--direction", "down")
    expect_exit(p, 0)
    doc = json.loads(p.stdout)
    validate(doc, "walk.schema.json")
    counts = [s["colour_count"] for s in doc]
    assert counts == list(range(10, 5, -1)), counts
    assert all(s["valid"] for s in doc)


def verify_suites():
    for suite in ("lemmas", "appendix", "gaps", "uncolourable", "zone-only"):
        p = run("verify", "--suite", suite)
        expect_exit(p, 0)
        doc = json.loads(p.stdout)
        validate(doc, "run_report.schema.json")
        assert doc["result"] and all(r["passed"] for r in doc["result"])


def verify_unknown():
    expect_exit(run("verify", "--suite", "nonsense"), 2)


def missing_subcommand():
    expect_exit(run(), 2)


for name, fn in list(globals().items()):
    if callable(fn) and fn.__module__ == "__main__" and name not in {
        "run", "validate", "case", "expect_exit"
    } and not name[0].isupper():
        case(name, fn)

print(f"{len(failures)} failing")
sys.exit(1 if failures else 0)
