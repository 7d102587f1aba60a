"""Run the CLI over a spread of commands and validate every report against the schema."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

tmp = tempfile.mkdtemp(prefix="plethysm_schema_")
runs = [
    (["count", "--shape", "[6,2,2,1,1]"], 0),
    (["check", "--shape", "[6,2,2,1,1]", "--mode", "conjecture1"], 2),
    (["check", "--shape", "[2,1,1]", "--mode", "conjecture1"], 0),
    (["check", "--shape", "2x4"], 0),
    (["--max-enum", "50", "check", "--shape", "2x5"], 3),
    (["scan", "--n", "6"], 0),
    (["scan", "--n", "8"], 2),
    (["scan", "--n", "6", "--mode", "conjecture1"], 0),
    (["--timing", "on", "scan", "--n", "4", "--hooks-only"], 0),
    (["blacklist", "--m", "2", "--n", "4"], 0),
    (["blacklist", "--m", "3", "--n", "3"], 0),
    (["matrix", "--shape", "[3,2,1]", "--out", os.path.join(tmp, "k.mtx")], 0),
    (["verify-proof", "--n", "3"], 0),
    (["verify-proof", "--n", "6"], 0),
]

failures = 0
reports = 0
for args, want in runs:
    proc = subprocess.run([cli] + args, capture_output=True, text=True)
    if proc.returncode != want:
        print(f"FAIL exit {proc.returncode} != {want}: {' '.join(args)}\n{proc.stderr}")
        failures += 1
        continue
    docs = [proc.stdout] if proc.stdout.lstrip().startswith("{\n") else proc.stdout.splitlines()
    for doc in docs:
        report = json.loads(doc)
        errors = list(validator.iter_errors(report))
        reports += 1
        for e in errors[:3]:
            print(f"FAIL {' '.join(args)}: {e.message} at {list(e.absolute_path)}")
        failures += bool(errors)

print(f"{reports} reports checked, {failures} failures")
sys.exit(1 if failures else 0)
