#!/usr/bin/env python3
"""Dump the endomorphism replay report for an even level as JSON.

Usage: python3 scripts/dump_replay_report.py [2|4] [OUT.json]
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from sl2bar.endo import replay_cohopf_skeleton


def main() -> int:
    level = int(sys.argv[1]) if len(sys.argv) > 1 else 2
    report = replay_cohopf_skeleton(level)
    payload = json.dumps(report.to_json(), separators=(",", ":"))
    if len(sys.argv) > 2:
        pathlib.Path(sys.argv[2]).write_text(payload + "\n")
        print(f"level {level}: {len(report.entries)} family members, wrote {sys.argv[2]}")
    else:
        print(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
