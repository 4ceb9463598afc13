#!/usr/bin/env python3
"""End-to-end checks of the ndq command-line tool.

Usage: cli_test.py <path-to-ndq> <golden-dir>
"""
import json
import os
import subprocess
import sys
import tempfile

NDQ = sys.argv[1]
GOLDEN = sys.argv[2]
SCHEMAS = os.path.join(os.path.dirname(GOLDEN), "..", "data", "schemas")
failures = 0


def validates(instance, schema):
    """Minimal checker for the JSON-Schema subset the shipped schemas use."""
    t = schema.get("type")
    if t == "object":
        if not isinstance(instance, dict):
            return False
        for key in schema.get("required", []):
            if key not in instance:
                return False
        props = schema.get("properties", {})
        if schema.get("additionalProperties", True) is False:
            if any(k not in props for k in instance):
                return False
        return all(validates(v, props[k]) for k, v in instance.items() if k in props)
    if t == "array":
        return isinstance(instance, list) and all(
            validates(v, schema.get("items", {})) for v in instance)
    if t == "integer":
        ok = isinstance(instance, int) and not isinstance(instance, bool)
    elif t == "number":
        ok = isinstance(instance, (int, float)) and not isinstance(instance, bool)
    elif t == "string":
        ok = isinstance(instance, str)
    else:
        return True
    if ok and "minimum" in schema:
        ok = instance >= schema["minimum"]
    if ok and "enum" in schema:
        ok = instance in schema["enum"]
    return ok


def run(*args, env=None):
    e = dict(os.environ)
    if env:
        e.update(env)
    return subprocess.run([NDQ, *args], capture_output=True, text=True, env=e)


def check(name, cond, extra=""):
    global failures
    print(f"{'ok' if cond else 'FAIL'}: {name} {extra}")
    if not cond:
        failures += 1


with tempfile.TemporaryDirectory() as tmp:
    # model: golden LP bytes
    lp = os.path.join(tmp, "m.lp")
    r = run("model", "-n", "3", "-d", "2", "--variant", "base", "-o", lp)
    check("model exit 0", r.returncode == 0, r.stderr)
    with open(lp) as f, open(os.path.join(GOLDEN, "queens_n3_d2_base.lp")) as g:
        check("model golden bytes", f.read() == g.read())
    check("model summary mentions lines", "line: 12" in r.stdout, r.stdout)

    # model: feasibility variant
    inf_lp = os.path.join(tmp, "inf.lp")
    r = run("model", "-n", "5", "-d", "3", "--variant", "inf", "--k", "13", "-o", inf_lp)
    check("inf model exit 0", r.returncode == 0, r.stderr)
    text = open(inf_lp).read()
    check("inf model equality", " card_0: " in text and " = 14" in text)
    check("inf model drops objective", " obj: 0" in text)

    # model: inf without --k is an input error
    r = run("model", "-n", "5", "-d", "3", "--variant", "inf")
    check("inf without --k exits 3", r.returncode == 3, str(r.returncode))

    # model: unavailable bound ((7,3) layers need the unknown Q_max(7,2))
    r = run("model", "-n", "7", "-d", "3", "--variant", "all", "-o",
            os.path.join(tmp, "x.lp"))
    check("unavailable bound exits 3", r.returncode == 3, r.stderr)
    check("unavailable bound names the board", "(7,2)" in r.stderr, r.stderr)

    # model: dimacs
    r = run("model", "-n", "2", "-d", "2", "--dimacs", "-o", os.path.join(tmp, "g.lp"))
    check("dimacs exit 0", r.returncode == 0, r.stderr)
    dimacs = open(os.path.join(tmp, "g.dimacs")).read()
    check("dimacs complete graph", dimacs.startswith("p edge 4 6\n"), dimacs[:20])

    # solve -> verify round trip
    cert = os.path.join(tmp, "cert.json")
    rep = os.path.join(tmp, "rep.json")
    r = run("solve", "-n", "4", "-d", "3", "-o", cert, "--report", rep)
    check("solve exit 0", r.returncode == 0, r.stderr)
    report = json.load(open(rep))
    check("solve primal 7", report["primal"] == 7, str(report))
    check("solve status optimal", report["status"] == "optimal")
    check("report validates against shipped schema",
          validates(report, json.load(open(os.path.join(SCHEMAS, "report.schema.json")))))
    check("certificate validates against shipped schema",
          validates(json.load(open(cert)),
                    json.load(open(os.path.join(SCHEMAS, "certificate.schema.json")))))

    r = run("verify", "--cert", cert, "--expect", "7")
    check("verify exit 0", r.returncode == 0, r.stdout + r.stderr)
    r = run("verify", "--cert", cert, "--expect", "8")
    check("verify expect mismatch exits 1", r.returncode == 1, str(r.returncode))

    # verify: conflicts
    bad = os.path.join(tmp, "bad.json")
    with open(bad, "w") as f:
        json.dump({"n": 3, "d": 2, "queens": [[1, 1], [2, 2]]}, f)
    r = run("verify", "--cert", bad)
    check("conflict exits 1", r.returncode == 1, str(r.returncode))
    check("conflict names the pair", "(1,1)" in r.stdout and "(2,2)" in r.stdout,
          r.stdout)

    # verify: duplicate queen and malformed JSON
    dup = os.path.join(tmp, "dup.json")
    with open(dup, "w") as f:
        json.dump({"n": 3, "d": 2, "queens": [[1, 1], [1, 1]]}, f)
    r = run("verify", "--cert", dup)
    check("duplicate queen exits 3", r.returncode == 3, str(r.returncode))

    mal = os.path.join(tmp, "mal.json")
    with open(mal, "w") as f:
        f.write("{ not json")
    r = run("verify", "--cert", mal)
    check("malformed JSON exits 3", r.returncode == 3, str(r.returncode))
    check("parse location reported", "parse" in r.stderr.lower(), r.stderr)

    # construct: modular scheme and greedy fallback
    c52 = os.path.join(tmp, "c52.json")
    r = run("construct", "-n", "5", "-d", "2", "-o", c52)
    check("construct exit 0", r.returncode == 0, r.stderr)
    check("construct modular", "modular" in r.stdout, r.stdout)
    check("construct size 5", json.load(open(c52))["queens"].__len__() == 5)
    r = run("verify", "--cert", c52, "--expect", "5")
    check("constructed certificate verifies", r.returncode == 0)

    r = run("construct", "-n", "4", "-d", "2", "-o", os.path.join(tmp, "c42.json"),
            "--format", "json")
    check("construct fallback greedy", json.loads(r.stdout)["method"] == "greedy",
          r.stdout)

    # bounds
    r = run("bounds", "-n", "14", "-d", "3")
    check("bounds lower", "lower_bound 172" in r.stdout and "196" in r.stdout, r.stdout)
    r = run("bounds", "-n", "7", "-d", "4")
    check("bounds exact", "exact 145" in r.stdout, r.stdout)
    r = run("bounds", "-n", "99", "-d", "9", "--format", "json")
    data = json.loads(r.stdout)
    check("bounds unknown", data["status"] == "unknown" and
          data["trivial_upper"] == 99 ** 8, r.stdout)

    # solve --target: decided infeasibility exits 0
    r = run("solve", "-n", "3", "-d", "2", "--target", "3", "-o",
            os.path.join(tmp, "t.json"), "--format", "json")
    check("target refuted exits 0", r.returncode == 0, str(r.returncode))
    check("target refuted status", json.loads(r.stdout)["status"] == "infeasible",
          r.stdout)

    # limit hit exits 2
    r = run("solve", "-n", "5", "-d", "3", "--node-limit", "1", "-o",
            os.path.join(tmp, "lim.json"))
    check("node limit exits 2", r.returncode == 2, str(r.returncode))

    # NDQ_OUT_DIR steers default outputs
    outdir = os.path.join(tmp, "outs")
    os.mkdir(outdir)
    r = run("solve", "-n", "3", "-d", "2", env={"NDQ_OUT_DIR": outdir})
    check("env out dir", os.path.exists(os.path.join(outdir, "cert_n3_d2.json")),
          str(os.listdir(outdir)))

    # determinism across runs (bytes)
    lp_a = os.path.join(tmp, "a.lp")
    lp_b = os.path.join(tmp, "b.lp")
    run("model", "-n", "4", "-d", "3", "--variant", "cs", "-o", lp_a)
    run("model", "-n", "4", "-d", "3", "--variant", "cs", "-o", lp_b)
    check("model emission byte-stable", open(lp_a).read() == open(lp_b).read())

    # warmstart emission from a verified certificate
    ws_lp = os.path.join(tmp, "ws.lp")
    r = run("model", "-n", "4", "-d", "3", "--warmstart", cert, "-o", ws_lp)
    check("warmstart model exit 0", r.returncode == 0, r.stderr)
    ws = open(os.path.join(tmp, "ws.mst")).read()
    check("warmstart has 7 entries", ws.count(" 1\n") == 7, ws)

    # conflicting warmstart is rejected
    r = run("model", "-n", "3", "-d", "2", "--warmstart", bad, "-o",
            os.path.join(tmp, "wsbad.lp"))
    check("conflicting warmstart exits 3", r.returncode == 3, str(r.returncode))

    # progress events on the machine-readable channel
    r = run("solve", "-n", "4", "-d", "3", "--progress", "-o",
            os.path.join(tmp, "p.json"))
    check("progress lines", "event=bound" in r.stderr and "dual=" in r.stderr,
          r.stderr[:100])

    # a custom registry file extends known values without recompiling
    reg = os.path.join(tmp, "reg.txt")
    with open(reg, "w") as f:
        f.write("15 3 exact 200\n")
    r = run("bounds", "-n", "15", "-d", "3", "--registry", reg)
    check("custom registry", "exact 200" in r.stdout, r.stdout)

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
