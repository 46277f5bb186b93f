"""Validates the --json output of every subcommand against the published schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path, data = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["square", "p4.txt"],
    ["decompose", "bowtie.txt"],
    ["check-ham", "bowtie.txt"],
    ["check-ham", "spider.txt"],
    ["check-ham", "c5_pendants.txt"],
    ["check-hc", "p4.txt"],
    ["check-hc", "triangle_pendants.txt"],
    ["check-hc", "bowtie.txt", "--pair", "0", "4"],
    ["construct-cycle", "bowtie.txt"],
    ["construct-cycle", "spider.txt"],
    ["construct-path", "bowtie.txt", "--pair", "3", "1"],
    ["counterexample", "c5_pendants.txt", "--condition", "5"],
    ["counterexample", "triangle_pendants.txt", "--condition", "hc"],
    ["counterexample", "bowtie.txt", "--condition", "6"],
    ["oracle", "bowtie.txt", "cycle"],
    ["oracle", "p4.txt", "path", "--pair", "1", "2"],
    ["oracle", "bowtie.txt", "hc"],
]

failures = 0
for args in runs:
    argv = [cli, args[0], f"{data}/{args[1]}", *args[2:], "--json"]
    proc = subprocess.run(argv, capture_output=True, text=True)
    try:
        doc = json.loads(proc.stdout)
        validator.validate(doc)
        assert doc["command"] == args[0]
        print("ok  ", " ".join(args))
    except (json.JSONDecodeError, jsonschema.ValidationError, AssertionError) as e:
        failures += 1
        print("FAIL", " ".join(args), "-", str(e).splitlines()[0])
sys.exit(1 if failures else 0)
