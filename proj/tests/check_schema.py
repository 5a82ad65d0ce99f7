"""Runs representative stabctab commands with --format json and validates
every record against schemas/output.schema.json."""

import json
import subprocess
import sys
from pathlib import Path

import jsonschema

exe, root = sys.argv[1], Path(sys.argv[2])
schema = json.loads((root / "schemas" / "output.schema.json").read_text())
data = root / "data"

invocations = [
    ["stable-betti", "--b1", "0", "--b2", "10", "--max-k", "6"],
    ["hilb-betti", "--preset", "bielliptic", "--n", "3"],
    ["hilb-betti", "--preset", "enriques", "--n", "2", "--k", "2"],
    ["perverse", "--preset", "enriques", "--max-order", "4", "--oracle"],
    ["identity", "--b1", "2", "--b2", "2", "--order", "6"],
    ["identity", "--b1", "2", "--b2", "2", "--order", "6", "--perturb"],
    ["germ", "--poly", "y^2 - x^3"],
    ["germ", "--poly", "x"],
    ["germ", "--poly", "y^2 - x^4", "--branches", str(data / "tacnode.br")],
    ["bounds", "--surface", "enriques", "--beta-sq", "10", "--d", "10", "--i", "2", "--j", "3"],
    ["bounds", "--surface", "bielliptic", "--a", "1", "--b", "1", "--lambda", "1", "--mu", "1", "--gamma", "2", "--d", "3"],
    ["decompose", "--lattice", str(data / "lattices" / "bielliptic-rank2.json"), "--beta", "2,2"],
    ["decompose", "--preset", "bielliptic-rank2", "--beta", "1,0"],
    ["verify", "--corpus", str(data / "germs.jsonl")],
]

failed = 0
for args in invocations:
    proc = subprocess.run([exe, *args, "--format", "json"], capture_output=True, text=True)
    if proc.returncode not in (0, 1):
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
        failed += 1
        continue
    try:
        record = json.loads(proc.stdout)
        jsonschema.validate(record, schema)
        # lossless: re-serializing the parsed record gives the same document
        assert json.loads(json.dumps(record)) == record
        print(f"ok   {' '.join(args)}")
    except (json.JSONDecodeError, jsonschema.ValidationError, AssertionError) as e:
        print(f"FAIL {' '.join(args)}: {e}")
        failed += 1

sys.exit(1 if failed else 0)
