"""End-to-end checks of the hypersurf executable: exit codes, schema validity, determinism."""
import json
import subprocess
import sys

import jsonschema

CLI, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH) as f:
    SCHEMA = json.load(f)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)


def check(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


def valid_report(args, expect=None):
    r = run(*args)
    check(r.returncode == 0, f"{args}: exit {r.returncode}: {r.stderr.strip()}")
    if r.returncode != 0:
        return None
    doc = json.loads(r.stdout)
    errors = sorted(VALIDATOR.iter_errors(doc), key=lambda e: list(e.path))
    check(not errors, f"{args}: schema: {errors[0].message if errors else ''}")
    if expect:
        expect(doc)
    return doc


SPHERE_EXAMPLE = "(x^2+y^2+z^2-1)*((x-3)^2+y^2+z^2-1)"


def sphere_report(d):
    check(d["quadric"]["kind"] == "Sphere", "analyze sphere kind")
    check(d["curvature"]["verdict"] == "CMC_certified", "analyze sphere verdict")
    check(d["curvature"]["c_exact"] == "1/1", "analyze sphere c")
    check(all(f["status"] == "consistent" for f in d["audit"]), "analyze sphere audit")


valid_report(["analyze", "--poly", "1-x^2-y^2-z^2", "--dim", "3"], sphere_report)
valid_report(["analyze", "--poly", "x1^4+x2^4+x3^4+x4^4+x5^4-1", "--vars", "indexed", "--samples", "30"])
valid_report(["analyze", "--corpus", "two_spheres", "--samples", "40"])
valid_report(["classify", "--poly", "x^2+y^2-z^2"],
             lambda d: check(d["quadric"]["regularity"]["status"] == "Singular", "cone singular"))
valid_report(["cmc", "--poly", "4-x^2-y^2-z^2", "--c", "1/2"],
             lambda d: check(d["target"]["certified"] is True, "cmc target certified"))
valid_report(["decompose", "--poly", "x^3+x*y+2"])


def quotient(d):
    check(d["divisible"] is True, "divide divisible")
    # Same polynomial as (x-3)^2+y^2+z^2-1 in canonical expanded form.
    check(d["quotient"] == "x^2 + y^2 + z^2 - 6*x + 8", f"divide quotient {d['quotient']}")


valid_report(["divide", "--poly", SPHERE_EXAMPLE, "--sphere", "2,(0,0,0),1"], quotient)
valid_report(["divide", "--poly", "x+y", "--dim", "3", "--sphere", "1,(0,0),1"],
             lambda d: check(d["divisible"] is False and d["quotient"] is None, "divide not divisible"))
valid_report(["ball", "--poly", "x", "--dim", "3", "--radius", "5"],
             lambda d: check(d["result"]["ball"]["center"][0] >= 6, "ball center"))
valid_report(["ball", "--poly", "1-x^2-y^2-z^2", "--radius", "3", "--sign", "positive"],
             lambda d: check(d["result"]["outcome"] == "BoundedRegionLikely", "ball bounded"))
valid_report(["corpus"])
valid_report(["corpus", "--corpus", "saddle"], lambda d: check(d["expectations_met"], "saddle expectations"))
full = valid_report(["corpus", "--all"], lambda d: check(d["expectations_met"], "corpus expectations"))

# Determinism: byte-identical output for identical invocations.
a, b = run("corpus", "--all", "--seed", "0"), run("corpus", "--all", "--seed", "0")
check(a.stdout == b.stdout and a.stdout, "corpus determinism")
a, b = run("analyze", "--poly", "x^4-3*x^2*y^2+z^2-1", "--seed", "5"), run("analyze", "--poly", "x^4-3*x^2*y^2+z^2-1", "--seed", "5")
check(a.stdout == b.stdout, "analyze determinism")

# --verbose writes a summary to stderr only.
v = run("analyze", "--corpus", "unit_sphere_3", "--verbose")
q = run("analyze", "--corpus", "unit_sphere_3")
check(v.stdout == q.stdout and "CMC_certified" in v.stderr and q.stderr == "", "verbose goes to stderr")

# Exit codes: 2 for input errors.
for args in (["analyze", "--poly", "x + * y"], ["analyze", "--poly", "w", "--dim", "3"], ["analyze", "--poly", "3"],
             ["analyze", "--corpus", "nope"], ["classify", "--poly", "x^3"], ["divide", "--poly", "x", "--sphere", "1,(0),1"],
             ["analyze"], ["bogus"], ["cmc", "--poly", "x", "--c", "0.5"], ["analyze", "--poly", "x", "--samples", "0"]):
    r = run(*args)
    check(r.returncode == 2 and r.stdout == "", f"{args}: expected exit 2, got {r.returncode}")
r = run("analyze", "--poly", "x^2 + 2x")
check("position" in r.stderr and "^" in r.stderr, "parse error shows position")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
