#!/usr/bin/env python3
"""Validate the CLI's JSON output against the schemas in schemas/."""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

CASES = [
    ("analyze", ["analyze", "periodic:1"]),
    ("analyze", ["analyze", "periodic:1,2"]),
    ("analyze", ["analyze", "modified:periodic:1+i,1-i;0=2i,5=0.25"]),
    ("analyze", ["analyze", "split:1|2@0"]),
    ("analyze", ["analyze", "split:1,4|2@0"]),
    ("norms", ["norms", "periodic:1,2", "--json", "--n-max", "5"]),
    ("norms", ["norms", "split:3|1,2@0", "--json", "--c", "0.5"]),
    ("spectrum", ["spectrum", "periodic:-1,i,2", "--json"]),
    ("spectrum", ["spectrum", "split:1|2@0", "--json", "--wrap", "12"]),
    ("oracle", ["oracle", "--seed", "3", "--count", "4"]),
    ("oracle", ["oracle", "--seed", "17", "--dim", "3", "--n", "2", "--count", "2", "--horizon", "20"]),
]


def main():
    cli, schema_dir = sys.argv[1], sys.argv[2]
    schemas = {}
    for name in ("analyze", "norms", "spectrum", "oracle"):
        with open(os.path.join(schema_dir, name + ".schema.json")) as f:
            schema = json.load(f)
        jsonschema.Draft7Validator.check_schema(schema)
        schemas[name] = jsonschema.Draft7Validator(schema)

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        table = os.path.join(tmp, "table.csv")
        with open(table, "w") as f:
            f.write("index,re,im\n-1,2,0\n0,0.5,0\n1,1,1\n")
        cases = CASES + [("analyze", ["analyze", "sampled:" + table, "--horizon", "40"])]
        for schema, args in cases:
            proc = subprocess.run([cli] + args, capture_output=True, text=True)
            if proc.returncode not in (0, 1, 2):
                print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            errors = list(schemas[schema].iter_errors(json.loads(proc.stdout)))
            for e in errors:
                print(f"FAIL {' '.join(args)}: {e.json_path}: {e.message}")
            failures += bool(errors)
            if not errors:
                print(f"ok   {' '.join(args)}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
