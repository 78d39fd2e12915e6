#!/usr/bin/env python3
"""Run the whole verification suite at full depth (group levels up to 5,
field levels up to 16) and optionally dump the report as JSON.

Usage: python3 scripts/run_full_verify.py [--json OUT.json]
"""

import argparse
import json
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from sl2bar import verify


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--json", metavar="OUT", default=None, help="also write the report to this file")
    args = ap.parse_args()

    t0 = time.time()
    report = verify.run_suite(max_level=5)
    elapsed = time.time() - t0

    for c in report.checks:
        print(f"{c.status.upper():4s} {c.name} (level {c.level}, {c.millis} ms)")
    s = report.summary
    print(f"summary: {s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped in {elapsed:.1f}s")
    if args.json:
        pathlib.Path(args.json).write_text(json.dumps(report.to_json(), separators=(",", ":")) + "\n")
        print(f"wrote {args.json}")
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
