"""Runs each JSON-emitting subcommand and validates its output against the
schema named by its "schema" key."""

import json
import pathlib
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["certify", "--window", "gaussian", "--delta", "0.9985"],
    ["certify", "--window", "hermite:1", "--a", "0.7", "--b", "0.5", "--grid-points", "101"],
    ["certify", "--window", "hermite:1", "--basis", "1,0.3,0,0.6", "--grid-points", "21"],
    ["gaussian-cert"],
    ["iwasawa", "--basis", "1,0,0,1"],
    ["iwasawa", "--basis", "0,1,1,0"],
    ["reduce", "--window", "hermite:3", "--basis", "0.8,0.2,-0.4,1.1"],
    ["oracle", "--window", "gaussian", "--a", "0.5", "--b", "1", "--N", "120"],
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {}
    for path in schema_dir.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(schema)
        schemas[schema["$id"]] = schema
    failures = 0
    for args in COMMANDS:
        out = subprocess.run([binary, *args], check=True, capture_output=True, text=True).stdout
        doc = json.loads(out)
        try:
            jsonschema.validate(doc, schemas[doc["schema"]],
                                cls=jsonschema.Draft202012Validator)
            print("ok  ", " ".join(args))
        except (KeyError, jsonschema.ValidationError) as err:
            failures += 1
            print("FAIL", " ".join(args), err, sep="\n  ")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
