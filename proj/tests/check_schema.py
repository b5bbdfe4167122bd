#!/usr/bin/env python3
"""Runs every JSON-emitting subcommand and validates the output against docs/output-schema.json."""
import json
import subprocess
import sys

import jsonschema

exe, schema_path = sys.argv[1], sys.argv[2]
schema = json.load(open(schema_path))

INTRO = "1,1,1;1,i,-i;1,1,i"
THETA1 = "1,1,1;1,e^{i3pi/4},e^{-i pi/2};1,e^{-i pi/2},e^{i3pi/4}"
THETA3 = "1,1,1;1,i,e^{i pi/3};1,e^{i pi/3},i"
SCALED = "1,1,1;i,e^{i pi/4},e^{i2pi/3};-i,e^{i7pi/6},e^{i4pi/3}"
COVERED = "1,1,1;1,i,e^{i2pi/3};1,-i,e^{i pi/6}"
FOUR = "1,1,1,i;1,1,-1,1;1,-1,1,1;-1,1,1,1"
SIGNS = "1,1,1,1;1,1,-1,-1;1,-1,1,-1"

RUNS = [
    ("analyze", ["analyze", "--matrix", FOUR]),
    ("analyze", ["analyze", "--matrix", SIGNS]),
    ("analyze", ["analyze", "--matrix", INTRO, "--bound", "gamma2"]),
    ("rank3", ["rank3", "--matrix", INTRO]),
    ("rank3", ["rank3", "--matrix", THETA1]),
    ("witness", ["witness", "--matrix", THETA3]),
    ("witness", ["witness", "--matrix", THETA1]),
    ("coverage", ["coverage", "--matrix", SCALED, "--resolution", "64"]),
    ("coverage", ["coverage", "--matrix", COVERED, "--resolution", "64"]),
    ("colop_region", ["colop-region", "--resolution", "32"]),
    ("detvec_hull", ["detvec-hull", "--matrix", FOUR]),
    ("scaling_search", ["scaling-search", "--matrix", SCALED]),
    ("scaling_search", ["scaling-search", "--matrix", COVERED, "--restarts", "2"]),
    ("sign_max", ["sign-max", "--matrix", SIGNS]),
    ("volume", ["volume", "--n", "4", "--samples", "1000"]),
    ("upper_bound", ["upper-bound", "--n", "100", "--m", "100"]),
    ("coamoeba_slice", ["coamoeba-slice", "--template", "1,1,1;1,t1,t2;1,t3,e^{i pi/3}", "--resolution", "8"]),
]

failures = 0
for kind, args in RUNS:
    out = subprocess.run([exe] + args, capture_output=True, text=True)
    try:
        if out.returncode != 0:
            raise RuntimeError(f"exit {out.returncode}: {out.stderr.strip()}")
        sub = dict(schema)
        sub["$ref"] = f"#/$defs/{kind}"
        jsonschema.validate(json.loads(out.stdout), sub)
        print("ok  ", " ".join(args[:1]), kind)
    except Exception as e:  # noqa: BLE001
        failures += 1
        print("FAIL", " ".join(args), "->", str(e).splitlines()[0])
sys.exit(1 if failures else 0)
