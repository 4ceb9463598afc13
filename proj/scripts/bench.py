#!/usr/bin/env python3
"""Reproduction table: chain `ndq solve` over the desk-scale instances and
print a markdown table. Every number in docs comes from this script, never
by hand.

Usage: bench.py <path-to-ndq> [--cuts base|cube|star|cs|all] [--time-limit S]
"""
import argparse
import json
import os
import subprocess
import sys
import tempfile

INSTANCES = [
    (1, 3), (2, 3), (3, 3), (4, 3), (5, 3),
    (3, 4), (4, 4),
    (2, 5), (3, 5),
]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("ndq", help="path to the ndq binary")
    parser.add_argument("--cuts", default="base")
    parser.add_argument("--time-limit", default="600")
    parser.add_argument("--extra", nargs="*", type=str, default=[],
                        help="extra n,d pairs like 6,3")
    args = parser.parse_args()

    instances = list(INSTANCES)
    for pair in args.extra:
        n, d = pair.split(",")
        instances.append((int(n), int(d)))

    print(f"| n | d | optimum | status | nodes | seconds | cuts |")
    print(f"|---|---|---------|--------|-------|---------|------|")
    with tempfile.TemporaryDirectory() as tmp:
        for n, d in instances:
            rep = os.path.join(tmp, f"r{n}_{d}.json")
            cert = os.path.join(tmp, f"c{n}_{d}.json")
            proc = subprocess.run(
                [args.ndq, "solve", "-n", str(n), "-d", str(d),
                 "--cuts", args.cuts, "--time-limit", args.time_limit,
                 "-o", cert, "--report", rep],
                capture_output=True, text=True)
            if proc.returncode not in (0, 2):
                print(f"| {n} | {d} | error | - | - | - | {args.cuts} |")
                continue
            r = json.load(open(rep))
            print(f"| {n} | {d} | {r['primal']} | {r['status']} | "
                  f"{r['nodes']} | {r['seconds']:.2f} | {args.cuts} |")


if __name__ == "__main__":
    sys.exit(main())
