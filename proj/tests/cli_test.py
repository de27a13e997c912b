"""End-to-end checks of the command-line tool: exit codes, schema validity, repeatability."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])
failures = []


def run(*args, code=0):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    if p.returncode != code:
        failures.append(f"{' '.join(args)}: exit {p.returncode}, expected {code}\n{p.stderr}")
    return p.stdout


def validated(kind, *args, code=0):
    out = run(*args, "--json", code=code)
    again = run(*args, "--json", code=code)
    if out != again:
        failures.append(f"{' '.join(args)}: output differs between runs")
    try:
        doc = json.loads(out)
    except json.JSONDecodeError as e:
        failures.append(f"{' '.join(args)}: not JSON ({e})")
        return None
    schema = json.loads((SCHEMAS / f"{kind}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as e:
        failures.append(f"{' '.join(args)}: schema {kind}: {e.message}")
    return doc


def check(cond, what):
    if not cond:
        failures.append(what)


out = run("charpoly", "--corpus", "boolean:3")
check("t^3 - 3*t^2 + 3*t - 1" in out, "charpoly boolean:3 text")

out = run("theorem1", "--corpus", "generic:3:4:1", "--hyperplane", "all", "--cross-check")
lines = [l for l in out.splitlines() if l.startswith("H")]
check(len(lines) == 4 and all("verdict NonFree" in l and "agrees" in l for l in lines), "theorem1 generic:3:4:1")

out = run("series-check", "--corpus", "boolean:3", "--identity", "eq33")
check(out.startswith("PASS eq33") and "==" in out, "series-check eq33 text")

for spec in ["boolean:3", "braid_essential:4", "generic:3:4"]:
    validated("corpus", "corpus", "--corpus", spec)
    validated("lattice", "lattice", "--corpus", spec)
    validated("charpoly", "charpoly", "--corpus", spec)
    validated("restrict", "restrict", "--corpus", spec, "--hyperplane", "all")
    validated("certificate", "freeness", "--corpus", spec)
    validated("theorem1", "theorem1", "--corpus", spec, "--hyperplane", "all", "--cross-check")
    validated("coker", "coker", "--corpus", spec, "--hyperplane", "1")
    validated("series-check", "series-check", "--corpus", spec, "--hyperplane", "1")
validated("coker", "coker", "--corpus", "generic:4:6", "--side", "form", "--p", "2", "--lo", "-3", "--hi", "1")
doc = validated("theorem1", "theorem1", "--corpus", "boolean:5", "--hyperplane", "2", code=2)
check(doc is None or doc["result"]["reports"][0]["verdict"] == "Inapplicable", "boolean:5 verdict")
doc = validated("theorem1", "theorem1", "--corpus", "boolean:5", "--hyperplane", "2", "--assume", "weakly-tame")
check(doc is None or doc["result"]["reports"][0]["verdict"] == "Free", "boolean:5 assumed verdict")
validated("charpoly", "charpoly", "--corpus", "generic:3:5", "--seed", "4")

with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    arr = tmp / "arr.json"
    arr.write_text(json.dumps({"dim": 3, "hyperplanes": [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]],
                               "multiplicities": [2, 1, 1, 3]}))
    validated("corpus", "corpus", "--input", str(arr))
    run("charpoly", "--input", str(arr), code=64)
    for spec in ["boolean:3", "braid_essential:4", "generic:3:4"]:
        cert = tmp / f"{spec}.json"
        cert.write_text(run("freeness", "--corpus", spec, "--json"))
        doc = validated("verification", "verify-certificate", "--certificate", str(cert))
        check(doc is None or doc["result"]["accepted"], f"certificate for {spec} rejected")
        data = json.loads(cert.read_text())
        res = data["result"]
        if res["verdict"] == "Free":
            for b, gen in enumerate(res["basis"]):
                for i, c in enumerate(gen["coefficients"]):
                    if c == "0":
                        continue
                    bad = json.loads(json.dumps(data))
                    bad["result"]["basis"][b]["coefficients"][i] = c + " + x1^" + str(gen["degree"]) if gen["degree"] else c + " + 1"
                    mutated = tmp / "bad.json"
                    mutated.write_text(json.dumps(bad))
                    bad2 = json.loads(json.dumps(data))
                    bad2["result"]["basis"][b]["coefficients"][i] = "3*" + c if not c.startswith("-") else c[1:]
                    scaled = tmp / "bad2.json"
                    scaled.write_text(json.dumps(bad2))
                    run("verify-certificate", "--certificate", str(scaled), code=1)
                    run("verify-certificate", "--certificate", str(mutated), code=1)
        else:
            bad = json.loads(json.dumps(data))
            bad["result"]["witness"]["degree"] += 1
            mutated = tmp / "bad.json"
            mutated.write_text(json.dumps(bad))
            run("verify-certificate", "--certificate", str(mutated), code=1)
    broken = tmp / "broken.json"
    broken.write_text('{"dim": 2, "hyperplanes": [["1", "0"]], "unknown": 1}')
    run("corpus", "--input", str(broken), code=1)

run(code=64)
run("nosuch", code=64)
run("charpoly", code=64)
run("charpoly", "--corpus", "boolean:3", "--input", "x.json", code=64)
run("charpoly", "--corpus", "nosuch:3", code=64)
run("restrict", "--corpus", "boolean:3", "--hyperplane", "4", code=64)
run("coker", "--corpus", "boolean:3", "--side", "sideways", code=64)
run("theorem1", "--corpus", "boolean:3", "--assume", "tame", code=64)
run("series-check", "--corpus", "boolean:3", "--identity", "eq99", code=64)

if failures:
    print("\n".join(failures))
    sys.exit(1)
print("cli checks passed")
