"""Sweep the expansion theorem over small pure complexes and tabulate the outcome.

For every instance meeting the hypotheses we record t (least CM_t of the
input), e, k, the least t' for the expansion and the predicted value
t + e - k + 1.  The table groups instances by (t, t', predicted) so the two
halves of the statement (upper bound, sharpness) can be read off separately.

    python scripts/expansion_sweep.py --max-vertices 5 --alpha-max 3 --max-expanded 10
"""

import argparse
import json
from collections import Counter

from cmt.harness import InstanceSweepConfig, dump_jsonl, sweep
from cmt.homology import FieldSpec


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=5)
    ap.add_argument("--alpha-max", type=int, default=3)
    ap.add_argument("--max-expanded", type=int, default=10)
    ap.add_argument("--field", default="q")
    ap.add_argument("--out", help="write every record as JSON lines")
    args = ap.parse_args()

    cfg = InstanceSweepConfig(
        max_vertices=args.max_vertices,
        alpha_entry_max=args.alpha_max,
        max_expanded=args.max_expanded,
        fields=[FieldSpec.parse(args.field)],
    )
    records = list(sweep("expansion", cfg))
    verdicts = Counter(r["verdict"] for r in records)
    print(f"instances={len(records)} " + " ".join(f"{v}={verdicts[v]}" for v in ("pass", "skip", "fail")))

    tested = [r for r in records if r["verdict"] != "skip"]
    upper = sum(r["computed"]["upper_bound_holds"] for r in tested)
    print(f"upper bound (CM_(t+e-k+1)) holds on {upper}/{len(tested)}")
    sharp = sum(r["computed"]["t_expanded"] == r["computed"]["predicted"] for r in tested)
    print(f"sharpness (not CM_(t+e-k)) holds on {sharp}/{len(tested)}")

    table = Counter((r["computed"]["t"], r["computed"]["t_expanded"], r["computed"]["predicted"], r["verdict"])
                    for r in tested)
    print("\n  t  t'  predicted  verdict  count")
    for (t, te, p, v), n in sorted(table.items()):
        print(f"{t:3d} {te:3d} {p:10d}  {v:7s} {n:6d}")

    gaps = Counter(r["computed"]["predicted"] - r["computed"]["t_expanded"] for r in tested)
    print("\npredicted - t' :", dict(sorted(gaps.items())))

    fails = [r for r in tested if r["verdict"] == "fail"]
    if fails:
        smallest = min(fails, key=lambda r: (sum(r["instance"]["alpha"]), len(r["instance"]["complex"]["facets"])))
        print("\nsmallest failing instance:")
        print(json.dumps({"instance": smallest["instance"], "computed": smallest["computed"]}))

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for line in dump_jsonl(records):
                fh.write(line + "\n")


if __name__ == "__main__":
    main()
