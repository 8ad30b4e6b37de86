"""Validate `lensfill fillings --json` and `lensfill sweep --json` output against the schema."""
import json
import subprocess
import sys

import jsonschema


def main() -> int:
    exe, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)

    docs = []
    for p, q in [(2, 1), (4, 1), (9, 2), (89, 34), (97, 1)]:
        out = subprocess.run([exe, "fillings", str(p), str(q), "--json"], check=True, capture_output=True, text=True).stdout
        docs.append(json.loads(out))
    sweep = subprocess.run([exe, "sweep", "25", "--json"], check=True, capture_output=True, text=True).stdout
    lines = [line for line in sweep.splitlines() if line]
    docs.extend(json.loads(line) for line in lines)

    bad = 0
    for doc in docs:
        for err in validator.iter_errors(doc):
            print(f"({doc.get('p')},{doc.get('q')}): {err.message}")
            bad += 1
    print(f"validated {len(docs)} reports, {bad} errors")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
