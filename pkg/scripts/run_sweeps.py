"""Run every verification sweep at acceptance scale and print a compact summary.

    CMT_THREADS=0 python scripts/run_sweeps.py [--out-dir reports/]
"""

import argparse
import os
import time

from cmt.harness import InstanceSweepConfig, dump_jsonl, summarize, sweep
from cmt.homology import GF2, QQ

JOBS = {
    "expansion": InstanceSweepConfig(max_vertices=5, alpha_entry_max=3, max_expanded=10),
    "lemmas": InstanceSweepConfig(max_vertices=5, alpha_entry_max=3, max_expanded=10, count=1000, seed=0),
    "links": InstanceSweepConfig(max_vertices=5, alpha_entry_max=3, max_expanded=10),
    "contraction": InstanceSweepConfig(max_vertices=6, alpha_entry_max=3, alpha_checks_max_vertices=5),
    "cm": InstanceSweepConfig(max_vertices=6, fields=[QQ, GF2]),
    "homology": InstanceSweepConfig(max_vertices=6, fields=[QQ, GF2]),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--only", choices=sorted(JOBS), action="append")
    ap.add_argument("--out-dir", help="write <theorem>.jsonl files here")
    args = ap.parse_args()
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
    for name in args.only or JOBS:
        t0 = time.perf_counter()
        records = list(sweep(name, JOBS[name]))
        dt = time.perf_counter() - t0
        print(f"== {name} ({dt:.1f}s)")
        for (check, fld, verdict), n in sorted(summarize(records).items()):
            print(f"   {check:24s} {fld or '-':5s} {verdict:5s} {n}")
        if args.out_dir:
            with open(os.path.join(args.out_dir, f"{name}.jsonl"), "w", encoding="utf-8") as fh:
                for line in dump_jsonl(records):
                    fh.write(line + "\n")


if __name__ == "__main__":
    main()
