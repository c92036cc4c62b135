"""Run every CLI subcommand with --format json and validate against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

CASES = [
    ("nf", ["nf", "v(2)v(3)v(1)"]),
    ("nf", ["nf", "1"]),
    ("chains", ["chains", "--degree", "3", "--max-sum", "5"]),
    ("delta", ["delta", "[1|1|0]", "--method", "closed"]),
    ("homotopy", ["homotopy", "[2|1|1]", "--map", "g"]),
    ("homotopy", ["homotopy", "[v(0)|v(1)]", "--map", "f"]),
    ("homotopy", ["homotopy", "[2|1|1]", "--map", "transfer"]),
    ("check", ["check", "--suite", "morse-vs-closed", "--max-degree", "3", "--max-sum", "5"]),
    ("cohomology", ["cohomology", "--degree", "1", "--module", "M(alpha=0,delta=1)", "--window", "12"]),
    ("cohomology", ["cohomology", "--degree", "2", "--module", "M(alpha=1,delta=1)", "--window", "8",
                    "--constructions"]),
    ("cohomology", ["cohomology", "--degree", "2", "--module", "ext(alpha=0,beta=1,gamma=1)", "--window", "7"]),
    ("verify", ["verify", "--criteria", "1,4,9"]),
    ("verify", ["verify", "--criteria", "6", "--timings"]),
]


def main() -> int:
    binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for name, args in CASES:
        schema = json.loads((schema_dir / f"{name}.schema.json").read_text())
        with tempfile.TemporaryDirectory() as tmp:
            out = pathlib.Path(tmp) / "report.json"
            proc = subprocess.run([binary, *args, "--format", "json", "--out", str(out)],
                                  capture_output=True, text=True, check=False)
            label = " ".join(args)
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            try:
                jsonschema.validate(json.loads(out.read_text()), schema,
                                    format_checker=jsonschema.Draft202012Validator.FORMAT_CHECKER)
            except (jsonschema.ValidationError, json.JSONDecodeError) as e:
                print(f"FAIL {label}: {e}")
                failures += 1
                continue
            print(f"ok   {label}")
    for path in sorted(schema_dir.glob("*.schema.json")):
        jsonschema.Draft202012Validator.check_schema(json.loads(path.read_text()))
    bad = subprocess.run([binary, "delta", "[0|1]", "--format", "json"], capture_output=True, check=False)
    if bad.returncode != 2:
        print(f"FAIL invalid chain exit code {bad.returncode}")
        failures += 1
    print(f"{len(CASES) - failures}/{len(CASES)} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
