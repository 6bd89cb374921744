#!/usr/bin/env python3
"""Run the CLI on every case in cases.json and compare stdout and exit code
with the stored .out files. Pass --update to rewrite the .out files."""

import json
import subprocess
import sys
from pathlib import Path


def main():
    args = [a for a in sys.argv[1:] if a != "--update"]
    update = "--update" in sys.argv
    if len(args) != 2:
        print("usage: run_golden.py [--update] FPSMON GOLDEN_DIR", file=sys.stderr)
        return 2
    exe, root = args[0], Path(args[1])
    cases = json.loads((root / "cases.json").read_text())
    failed = 0
    for case in cases:
        proc = subprocess.run([exe, *case["args"]], capture_output=True, timeout=120)
        out_file = root / (case["name"] + ".out")
        if update:
            out_file.write_bytes(proc.stdout)
        problems = []
        if proc.returncode != case["exit"]:
            problems.append(f"exit {proc.returncode}, expected {case['exit']}")
        if not out_file.exists():
            problems.append("missing golden file")
        elif proc.stdout != out_file.read_bytes():
            problems.append("stdout differs from " + out_file.name)
        status = "ok" if not problems else "FAIL: " + "; ".join(problems)
        print(f"{case['name']}: {status}")
        failed += bool(problems)
    print(f"{len(cases) - failed}/{len(cases)} golden cases match")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
