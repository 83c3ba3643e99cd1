"""End-to-end checks of the arcorder command line: exit codes, byte-stable output, report schema."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

EXE = sys.argv[1]
ROOT = pathlib.Path(sys.argv[2])
SAMPLES = ROOT / "samples"
SCHEMA = json.loads((ROOT / "schemas" / "report.schema.json").read_text())
failures = []


def run(*args):
    p = subprocess.run([EXE, *map(str, args)], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def expect(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")
    print(("ok   " if cond else "FAIL ") + name)


def report(name, args, code, *, schema=True):
    rc, out, err = run(*args)
    expect(f"{name} exits {code}", rc == code, f"got {rc}, stderr={err.strip()}")
    doc = None
    if schema and out.strip():
        doc = json.loads(out)
        try:
            jsonschema.validate(doc, SCHEMA)
            expect(f"{name} matches the report schema", True)
        except jsonschema.ValidationError as e:
            expect(f"{name} matches the report schema", False, e.message)
    return doc, out


fig1, fig2 = SAMPLES / "fig1.graph.json", SAMPLES / "fig2.graph.json"
ord1, ord2 = SAMPLES / "fig1.ordering.json", SAMPLES / "fig2.ordering.json"

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    doc, _ = report("check total", ["check", fig1, ord1, "--method", "total"], 0)
    expect("check total passes", doc["verdict"] == "pass")

    sorted_ord = tmp / "sorted.json"
    sorted_ord.write_text(json.dumps({"ordering": ["x1", "x4", "x6", "x8", "y2", "y3", "y5", "y7"]}))
    doc, _ = report("check rejects", ["check", fig1, sorted_ord, "--method", "total"], 1)
    expect("rejection carries an edge witness", doc["witness"]["kind"] == "edge-violation")

    doc, _ = report("check bicirc from edge list",
                    ["check", SAMPLES / "fig2.edges.txt", ord2, "--method", "bicirc", "--format", "edgelist"], 0)
    expect("bicirc report lists ten runs", len(doc["w_runs"]) == 10)

    quad = tmp / "quad.json"
    quad.write_text(json.dumps({"x": ["v1", "v2", "v5"], "y": ["v3", "v4"], "edges": [["v1", "v3"]]}))
    quad_ord = tmp / "quad_ord.json"
    quad_ord.write_text(json.dumps({"ordering": ["v1", "v2", "v3", "v4", "v5"]}))
    doc, _ = report("check pattern --limit all", ["check", quad, quad_ord, "--method", "pattern", "--limit", "all"], 1)
    expect("all matches listed", 1 + len(doc.get("additional_witnesses", [])) == doc["counters"]["witnesses"])

    model_out = tmp / "fig2.model.json"
    report("model", ["model", fig2, ord2, "--method", "bicirc", "--out", model_out], 0)
    expect("model file matches sample", model_out.read_text() == (SAMPLES / "fig2.model.json").read_text())

    report("recognize", ["recognize", fig1, "--method", "pattern"], 0)
    _, one = report("recognize 1 thread", ["recognize", fig2, "--method", "total", "--threads", "1"], 0)
    _, many = report("recognize 4 threads", ["recognize", fig2, "--method", "total", "--threads", "4"], 0)
    expect("thread count leaves output unchanged", one == many)

    big = tmp / "k66.json"
    rc, _, _ = run("gen", "--family", "complete", "--sizes", "6,6", "--out", big)
    expect("gen family exits 0", rc == 0)
    rc, out, err = run("recognize", big, "--budget", "10")
    expect("budget refusal exits 3", rc == 3, f"got {rc}")

    rc, out, _ = run("crossval", "--exhaustive", "2,2")
    lines = out.strip().splitlines()
    expect("crossval exits 0", rc == 0)
    expect("crossval emits one line per graph plus a summary", len(lines) == 17, str(len(lines)))
    for i, line in enumerate(lines):
        try:
            jsonschema.validate(json.loads(line), SCHEMA)
        except jsonschema.ValidationError as e:
            expect(f"crossval line {i} matches the report schema", False, e.message)
    _, a, _ = run("crossval", "--random", "3,4,0.5", "--seed", "3", "--count", "6", "--threads", "1")
    _, b, _ = run("crossval", "--random", "3,4,0.5", "--seed", "3", "--count", "6", "--threads", "3")
    expect("crossval stream independent of thread count", a == b)

    _, g1, _ = run("gen", "--random", "4,4,0.5", "--seed", "42")
    _, g2, _ = run("gen", "--random", "4,4,0.5", "--seed", "42")
    expect("gen is deterministic", g1 == g2 and g1)
    _, e1, _ = run("gen", "--random", "4,4,0.5", "--seed", "42", "--format", "edgelist")
    expect("gen edge list starts with headers", e1.startswith("X: x1 x2 x3 x4\nY: y1 y2 y3 y4\n"))

    svg = tmp / "fig2.svg"
    rc, _, _ = run("render", SAMPLES / "fig2.model.json", fig2, "--out", svg)
    expect("render exits 0", rc == 0)
    expect("render matches sample", svg.read_text() == (SAMPLES / "fig2.svg").read_text())

    report("replay", ["replay", fig1, SAMPLES / "fig1.certificate.json"], 0)
    tampered = tmp / "tampered.json"
    g = json.loads(fig1.read_text())
    g["edges"] = g["edges"][1:]
    tampered.write_text(json.dumps(g))
    doc, _ = report("replay on another graph", ["replay", tampered, SAMPLES / "fig1.certificate.json"], 1)
    expect("replay failure reason", "fingerprint" in doc["witness"]["reason"])

    report("verify", ["verify", fig1, SAMPLES / "fig1.model.json"], 0)
    doc, _ = report("verify mismatch", ["verify", tampered, SAMPLES / "fig1.model.json"], 1)
    expect("mismatch is spurious", doc["witness"]["mismatches"][0]["kind"] == "spurious-intersection")

    bad = tmp / "bad.json"
    bad.write_text('{"x": ["x1"], "y": ["y1"], "edges": [["x1", "z9"]]}')
    rc, out, err = run("check", bad, ord1)
    expect("undeclared vertex exits 2", rc == 2 and "z9" in err, err)
    rc, _, err = run("check", SAMPLES / "missing.json", ord1)
    expect("missing file exits 2", rc == 2, err)
    rc, _, _ = run("check", fig1, ord1, "--method", "cubic")
    expect("unknown method exits 2", rc == 2)
    rc, _, _ = run("check", fig1, ord2)
    expect("ordering of another graph exits 2", rc == 2)
    rc, _, _ = run("verify", fig1, SAMPLES / "fig2.model.json")
    expect("model for another vertex set exits 2", rc == 2)

print(f"{len(failures)} failure(s)")
for f in failures:
    print("  " + f)
sys.exit(1 if failures else 0)
