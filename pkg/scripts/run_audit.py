#!/usr/bin/env python3
"""Run the seeded claims audit and print the report.

Usage:
    python scripts/run_audit.py --seed 42 --trials 1000 [--json out.json]
"""

import argparse
import json
import sys

from jacobi_orbits.audit import report_json, report_text, run_audit
from jacobi_orbits.sampling import SamplerConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--height-bound", type=int, default=10)
    ap.add_argument("--json", help="also write the JSON report to this path")
    args = ap.parse_args()

    cfg = SamplerConfig(seed=args.seed, trials=args.trials,
                        height_bound=args.height_bound)
    records = run_audit(cfg)
    sys.stdout.write(report_text(records, cfg))
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report_json(records, cfg), fh, sort_keys=True, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
