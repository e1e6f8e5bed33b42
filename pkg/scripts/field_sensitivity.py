"""Where does the coefficient field change the CM_t picture?

Prints the real projective plane witness, then scans every complex on at most
``--max-vertices`` vertices and lists those whose least t differs between the
rationals and GF(p).

    python scripts/field_sensitivity.py --max-vertices 6 --p 2
"""

import argparse

from cmt.cm import min_cm_t
from cmt.core import SimplicialComplex
from cmt.generate import complexes_up_to_iso
from cmt.homology import QQ, FieldSpec, reduced_betti

RP2 = [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
       (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-vertices", type=int, default=6)
    ap.add_argument("--p", type=int, default=2)
    args = ap.parse_args()
    gf = FieldSpec(args.p)

    rp2 = SimplicialComplex.from_facets([[f"v{i}" for i in f] for f in RP2])
    for fld in (QQ, gf):
        b = reduced_betti(rp2, fld)
        print(f"RP2 over {fld}: betti={b.as_dict()} minimal_t={min_cm_t(rp2, fld).minimal_t}")

    differ = []
    total = 0
    for cx in complexes_up_to_iso(args.max_vertices, pure_only=True):
        total += 1
        tq = min_cm_t(cx, QQ).minimal_t
        tp = min_cm_t(cx, gf).minimal_t
        if tq != tp:
            differ.append((cx, tq, tp))
    print(f"\npure complexes scanned: {total}; least t differs on {len(differ)}")
    for cx, tq, tp in differ:
        print(f"  {cx!r}  t(q)={tq}  t({gf})={tp}")


if __name__ == "__main__":
    main()
