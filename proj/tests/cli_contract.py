"""Exit codes, output files and schemas of cesaro-lab.

usage: cli_contract.py <cesaro-lab> <schema dir> [grid function sample]
"""
import json
import os
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

LAB = sys.argv[1]
SCHEMAS = Path(sys.argv[2])
SAMPLE = Path(sys.argv[3]) if len(sys.argv) > 3 else None

failures = []


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(args, out, env_extra=None, expect=0):
    env = dict(os.environ)
    env.pop("CESARO_LAB_OUT", None)
    env.update(env_extra or {})
    p = subprocess.run([LAB, *args], cwd=out, env=env, capture_output=True, text=True)
    if expect is not None and p.returncode != expect:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, expected {expect}\n{p.stdout}{p.stderr}")
    return p


def check(cond, what):
    if not cond:
        failures.append(what)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    out = tmp / "out"
    common = ["--quiet", "--seedless", "--out", str(out)]

    run([*common, "spectrum", "--space", "c01", "--lambda", "2"], tmp)
    rec = json.loads((out / "spectrum-c01-seedless.json").read_text())["records"][0]
    check(rec["evidence_type"] == "resolvent_residual" and rec["residual"] < 1e-8, f"c01 lambda=2 record: {rec}")

    run([*common, "spectrum", "--space", "lphalf", "--p", "2", "--lambda", "1+1i"], tmp)
    rec = json.loads((out / "spectrum-lphalf-seedless.json").read_text())["records"][0]
    check(rec["predicted_class"] == "critical" and rec["evidence_type"] == "critical_rejection", f"circle record: {rec}")

    run([*common, "spectrum", "--space", "lp01", "--p", "2", "--lambda-grid", "-0.5:2.5:0.5,-1:1:0.5"], tmp)
    csv = (out / "spectrum-lp01-seedless.csv").read_text().splitlines()
    check(csv[0] == "re_lambda,im_lambda,class,residual" and len(csv) == 1 + 7 * 5 - 1, "portrait CSV shape")

    run([*common, "experiment", "iterate", "--space", "c01", "--f", "monomial:3", "--n", "40"], tmp)
    first = (out / "iterate-seedless.csv").read_bytes()
    run([*common, "experiment", "iterate", "--space", "c01", "--f", "monomial:3", "--n", "40"], tmp)
    check((out / "iterate-seedless.csv").read_bytes() == first, "seedless CSV not byte-identical")
    rows = [line.split(",") for line in first.decode().splitlines()[1:]]
    check(len(rows) == 40 and all(abs(float(v) - 4.0 ** -int(n)) <= 1e-8 * 4.0 ** -int(n) for n, v in rows),
      "iterate series is not 4^-n")

    run([*common, "experiment", "range-counterexample", "--eps", "1e-2,1e-4,1e-8"], tmp)
    r = json.loads((out / "range-counterexample-seedless.json").read_text())
    vals = [p["value"] for p in r["series"]]
    check(vals == sorted(vals) and r["verdict"] == "consistent", "range counterexample series")

    p = run([*common, "experiment", "chaos", "--p", "2", "--theta", "1/12,1/8", "--n", "auto"], tmp, expect=None)
    check(p.returncode in (0, 1), "chaos exit code")
    r = json.loads((out / "chaos-seedless.json").read_text())
    check(len(r["extra"]["gate"]) == 2 and len(r["series"]) == 2, "chaos rows per theta")

    run([*common, "experiment", "orbit"], tmp)  # inconclusive by design, still 0
    run([*common, "experiment", "means", "--space", "cl"], tmp)
    run([*common, "experiment", "norm-growth", "--space", "lp01"], tmp)
    run([*common, "experiment", "range-witness"], tmp)
    run([*common, "experiment", "commutation", "--space", "cplus", "--j", "1,2"], tmp)

    # configuration errors
    run([*common, "experiment", "bogus"], tmp, expect=2)
    run([*common, "spectrum", "--space", "nowhere", "--lambda", "2"], tmp, expect=2)
    run([*common, "spectrum", "--space", "c01"], tmp, expect=2)
    run([*common, "spectrum", "--space", "c01", "--lambda", "2+"], tmp, expect=2)
    run([*common, "experiment", "chaos", "--theta", "0.25"], tmp, expect=2)
    run(["--frobnicate"], tmp, expect=2)

    # an inconsistent verdict: iterates of a non-constant function cannot reach tolerance in 2 steps
    run([*common, "experiment", "iterate", "--f", "monomial:1", "--n", "2"], tmp, expect=1)

    # CESARO_LAB_OUT and config file with sections, flags override the file
    env_out = tmp / "env"
    run(["--quiet", "--seedless", "experiment", "iterate", "--f", "monomial:2", "--n", "20"], tmp,
        {"CESARO_LAB_OUT": str(env_out)})
    check((env_out / "iterate-seedless.json").exists(), "CESARO_LAB_OUT ignored")
    cfg = tmp / "lab.ini"
    cfg.write_text("seedless=true\nquiet=true\n\n[experiment]\nf=monomial:1\nn=6\n")
    cfg_out = tmp / "cfg"
    run(["--config", str(cfg), "--out", str(cfg_out), "experiment", "iterate", "--n", "30"], tmp)
    r = json.loads((cfg_out / "iterate-seedless.json").read_text())
    check(len(r["series"]) == 30 and abs(r["series"][0]["value"] - 0.5) < 1e-14, "config file not applied")

    # selftest plumbing
    p = run(["selftest", "--filter", "resolvent/"], tmp)
    lines = [l for l in p.stdout.splitlines() if l.startswith(("funcspace/", "cesaro_op/", "resolvent/", "ergodic/", "cli/"))]
    check(lines and all(l.startswith("resolvent/") for l in lines), "filter did not restrict the table")
    run(["selftest", "--filter", "funcspace", "--inject-fault"], tmp, expect=1)
    run(["selftest", "--filter", "no-such-check"], tmp, expect=2)

    # every report validates against its schema
    reports, portraits = schema("experiment_report"), schema("spectral_portrait")
    count = 0
    for path in tmp.rglob("*.json"):
        doc = json.loads(path.read_text())
        try:
            jsonschema.validate(doc, portraits if path.name.startswith("spectrum-") else reports)
            count += 1
        except jsonschema.ValidationError as e:
            failures.append(f"{path.name}: {e.message}")
    check(count >= 10, f"only {count} report files validated")

if SAMPLE is not None:
    try:
        jsonschema.validate(json.loads(SAMPLE.read_text()), schema("grid_function"))
    except (OSError, jsonschema.ValidationError) as e:
        failures.append(f"grid function sample: {e}")

for f in failures:
    print("FAIL:", f)
print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
