"""Runs the CLI on a few inputs and validates each JSON report against docs/report.schema.json."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    (["--s", "AGTCTAACTAGAATATACCGTACAGTACGAAG", "--v", "TACTAGGAG", "--select", "variance"], 0),
    (["--s", "ABC", "--v", "ABC", "--uncapped"], 0),
    (["--s", "ABCAB", "--v", "ABD"], 2),
    (["--s", "ABCAB", "--v", "ABD", "--partial"], 0),
    (["--s", "ACGT", "--v", "ACXGT", "--swap", "--alphabet", "uppercase"], 0),
    (["--algo", "nw", "--s", "AC", "--v", "C", "--scheme", "1,-1,-1"], 0),
    (["--algo", "sw", "--s", "XXACGTXX", "--v", "ACGT", "--scheme", "2,-3,-1"], 0),
]
failed = False
for args, expected_code in runs:
    proc = subprocess.run([cli, "align", "--format", "json", *args], capture_output=True, text=True)
    if proc.returncode != expected_code:
        print(f"FAIL {args}: exit {proc.returncode}, expected {expected_code}\n{proc.stderr}")
        failed = True
        continue
    errors = list(validator.iter_errors(json.loads(proc.stdout)))
    for e in errors:
        print(f"FAIL {args}: {e.json_path}: {e.message}")
    failed |= bool(errors)
    if not errors:
        print(f"ok {' '.join(args)}")
sys.exit(1 if failed else 0)
