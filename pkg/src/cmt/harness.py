"""Sweeps that check the expansion/contraction results on many small instances.

Every check yields plain-dict records ``{"check", "instance", "verdict", ...}``
in a canonical order.  A sweep over complexes may fan out to worker processes
(``CMT_THREADS``); results are collected in submission order, so reports are
byte-identical for a fixed configuration.
"""

from __future__ import annotations

import json
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Any, Callable, Iterable, Iterator, Sequence

from . import cm
from .contraction import check_dagger, verify_contraction_theorem, verify_purity_transfer, verify_round_trip
from .core import (
    Monomial,
    MonomialIdeal,
    SimpleGraph,
    SimplicialComplex,
    all_faces,
    dim,
    edge_ideal,
    f_vector,
    independence_complex,
    minimalize,
    stanley_reisner_ideal,
)
from .expansion import (
    Blocks,
    betti_dominates,
    complex_payload,
    cone_links_acyclic,
    expand_complex,
    expand_graph,
    expand_ideal,
    expand_monomial,
    link_expansion_decompose,
    verify_expansion_theorem,
)
from .generate import alphas, complexes_up_to_iso, graphs_up_to_iso, random_complex, random_ideal
from .homology import QQ, FieldSpec, boundary_matrix, reduced_betti, reduced_euler_characteristic

THEOREMS = ("expansion", "contraction", "lemmas", "links", "cm", "homology")


@dataclass
class InstanceSweepConfig:
    max_vertices: int = 5
    alpha_entry_max: int = 3
    mode: str = "exhaustive"
    seed: int | None = None
    count: int = 100
    fields: Sequence[FieldSpec] = field(default_factory=lambda: [QQ])
    # cap on the number of vertices of an expanded complex
    max_expanded: int = 10
    # complexes above this size skip the per-alpha contraction checks
    alpha_checks_max_vertices: int = 5

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "exhaustive" and self.max_vertices > 8:
            raise ValueError("exhaustive mode allows at most 8 vertices")
        if self.mode == "random" and self.seed is None:
            raise ValueError("random mode needs a seed")


def workers() -> int:
    raw = os.environ.get("CMT_THREADS", "1")
    n = int(raw)
    if n < 0:
        raise ValueError("CMT_THREADS must be >= 0")
    return n or (os.cpu_count() or 1)


def _map(fn: Callable[[Any], list[dict]], items: Sequence[Any]) -> Iterator[dict]:
    n = workers()
    if n <= 1 or len(items) < 2:
        for item in items:
            yield from fn(item)
        return
    with ProcessPoolExecutor(max_workers=n) as pool:
        for recs in pool.map(fn, items, chunksize=max(1, len(items) // (4 * n))):
            yield from recs


def complexes_for(cfg: InstanceSweepConfig, pure_only: bool = False) -> list[SimplicialComplex]:
    if cfg.mode == "exhaustive":
        return complexes_up_to_iso(cfg.max_vertices, pure_only=pure_only)
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.count:
        cx = random_complex(rng, cfg.max_vertices)
        if not pure_only or len({bin(f).count("1") for f in cx.facets}) == 1:
            out.append(cx)
    return out


def _record(check: str, instance: dict, ok: bool, **data: Any) -> dict:
    rec = {"check": check, "instance": instance, "verdict": "pass" if ok else "fail"}
    if data:
        rec["data"] = data
    return rec


# --------------------------------------------------------------------------
# per-instance checks (module level so worker processes can pickle them)


def _expansion_checks(cx: SimplicialComplex, entry_max: int, max_expanded: int, field: FieldSpec) -> list[dict]:
    out = []
    for a in alphas(cx.n, entry_max, max_expanded):
        rec = verify_expansion_theorem(cx, a, field).as_record()
        rec["check"] = "expansion-theorem"
        out.append(rec)
    return out


def ideal_generators_ok(ideal: MonomialIdeal, alpha: Sequence[int]) -> bool:
    """Check G(I^α) = G(I)^α against a membership oracle.

    A monomial lies in I^α iff for some generator u its degree in every
    block j is at least the exponent of x_j in u.  The union of the u^α must
    already be divisibility-minimal, and its members must be exactly the
    minimal monomials of I^α.
    """
    blocks = Blocks.of(alpha)
    union = [m for u in ideal.generators for m in expand_monomial(u, alpha)]
    if sorted(set(union)) != minimalize(union):
        return False
    gens = expand_ideal(ideal, alpha).generators
    if set(gens) != set(union):
        return False

    def member(m: Monomial) -> bool:
        d = m.as_dict()
        deg = [sum(d.get(v, 0) for v in range(off, off + k)) for off, k in zip(blocks.offsets, blocks.alpha)]
        return any(all(deg[j] >= e for j, e in u.exponents) for u in ideal.generators)

    for m in gens:
        if not member(m):
            return False
        for v, e in m.exponents:
            d = m.as_dict()
            d[v] = e - 1
            if member(Monomial.from_dict(d)):
                return False
    return True


def _lemma_complex_checks(cx: SimplicialComplex, entry_max: int, max_expanded: int) -> list[dict]:
    out = []
    ideal = stanley_reisner_ideal(cx)
    for a in alphas(cx.n, entry_max, max_expanded):
        lhs = expand_ideal(ideal, a)
        rhs = stanley_reisner_ideal(expand_complex(cx, a))
        inst = {"complex": complex_payload(cx), "alpha": list(a)}
        out.append(_record("sr-commutation", inst, lhs == rhs))
    return out


def _graph_payload(g: SimpleGraph) -> dict:
    return {"vertices": [str(v) for v in g.vertices], "edges": [list(e) for e in g.edge_names()]}


def _lemma_graph_checks(g: SimpleGraph, entry_max: int) -> list[dict]:
    out = []
    for a in alphas(g.n, entry_max):
        ge = expand_graph(g, a)
        ok = edge_ideal(ge) == expand_ideal(edge_ideal(g), a)
        ok_cx = independence_complex(ge) == expand_complex(independence_complex(g), a)
        inst = {"graph": _graph_payload(g), "alpha": list(a)}
        out.append(_record("edge-ideal-commutation", inst, ok and ok_cx))
    return out


def _link_checks(cx: SimplicialComplex, entry_max: int, max_expanded: int, field: FieldSpec) -> list[dict]:
    out = []
    faces = all_faces(cx)
    for a in alphas(cx.n, entry_max, max_expanded):
        inst = {"complex": complex_payload(cx), "alpha": list(a), "field": str(field)}
        out.append(_record("betti-surjection", inst, betti_dominates(cx, a, field)))
        blocks = Blocks.of(a)
        expanded = expand_complex(cx, a)
        bad = [cx.names(g) for g in faces
               if not link_expansion_decompose(cx, a, blocks.expand(g), expanded).holds]
        out.append(_record("link-of-expanded-face", inst, not bad, bad=bad))
        cones = cone_links_acyclic(cx, a, field)
        out.append(_record("cone-links-acyclic", inst, not cones, bad=len(cones)))
    return out


def _contraction_checks(
    cx: SimplicialComplex, entry_max: int, descent_max: int, alpha_vertices: int, field: FieldSpec
) -> list[dict]:
    out = []
    inst = {"complex": complex_payload(cx)}
    if cx.n == 0:
        return out
    out.append(_record("round-trip", inst, verify_round_trip(cx)))
    rec = verify_contraction_theorem(cx, field).as_record()
    rec["check"] = "contraction-theorem"
    out.append(rec)
    if cx.n > alpha_vertices:
        return out
    cx_cm = cm.is_cohen_macaulay(cx, field)
    for a in alphas(cx.n, entry_max):
        ainst = {"complex": complex_payload(cx), "alpha": list(a)}
        if check_dagger(cx, a):
            out.append(_record("purity-transfer", ainst, verify_purity_transfer(cx, a)))
        if max(a) <= descent_max and not cx_cm:
            # contrapositive: a non-CM complex never expands to a CM one
            out.append(_record("cm-descent", ainst, not cm.is_cohen_macaulay(expand_complex(cx, a), field)))
    return out


def _cm_checks(cx: SimplicialComplex, fields: Sequence[FieldSpec]) -> list[dict]:
    out = []
    inst = {"complex": complex_payload(cx)}
    for fld in fields:
        ts = range(0, dim(cx) + 2)
        direct = [cm.is_cm_t(cx, t, fld) for t in ts]
        recursive = [cm.cm_t_recursive(cx, t, fld) for t in ts]
        monotone = all(not direct[i] or all(direct[i:]) for i in range(len(direct)))
        report = cm.min_cm_t(cx, fld)
        consistent = (
            direct[0] == cm.is_cohen_macaulay(cx, fld)
            and (len(direct) < 2 or direct[1] == cm.is_buchsbaum(cx, fld))
            and (report.minimal_t is None or direct.index(True) == report.minimal_t)
        )
        out.append(_record("cm-agreement", {**inst, "field": str(fld)}, direct == recursive,
                           direct=direct, recursive=recursive))
        out.append(_record("cm-monotone", {**inst, "field": str(fld)}, monotone and consistent))
    return out


def _homology_checks(cx: SimplicialComplex, fields: Sequence[FieldSpec]) -> list[dict]:
    out = []
    inst = {"complex": complex_payload(cx)}
    for fld in fields:
        ok = True
        for q in range(0, dim(cx) + 1):
            lower = boundary_matrix(cx, q, fld)
            upper = boundary_matrix(cx, q + 1, fld)
            if lower.cols and upper.cols:
                for i in range(len(lower.rows)):
                    for j in range(len(upper.cols)):
                        s = sum(lower.entries[i][k] * upper.entries[k][j] for k in range(len(lower.cols)))
                        if fld.reduce(s) != 0:
                            ok = False
        out.append(_record("boundary-squared", {**inst, "field": str(fld)}, ok))
        b = reduced_betti(cx, fld)
        chi = sum((-1) ** q * b[q] for q in range(-1, dim(cx) + 1))
        out.append(_record("euler", {**inst, "field": str(fld)}, chi == reduced_euler_characteristic(cx),
                           f_vector=f_vector(cx)))
    return out


# --------------------------------------------------------------------------
# sweeps


def sweep(theorem: str, cfg: InstanceSweepConfig) -> Iterator[dict]:
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    if theorem == "expansion":
        cxs = complexes_for(cfg, pure_only=True)
        for fld in cfg.fields:
            yield from _map(partial(_expansion_checks, entry_max=cfg.alpha_entry_max,
                                    max_expanded=cfg.max_expanded, field=fld), cxs)
    elif theorem == "lemmas":
        cxs = complexes_for(cfg)
        yield from _map(partial(_lemma_complex_checks, entry_max=cfg.alpha_entry_max,
                                max_expanded=cfg.max_expanded), cxs)
        yield from _map(partial(_lemma_graph_checks, entry_max=cfg.alpha_entry_max),
                        graphs_up_to_iso(min(cfg.max_vertices, 7)))
        rng = random.Random(cfg.seed if cfg.seed is not None else 0)
        for _ in range(cfg.count):
            n = rng.randint(1, 4)
            ideal = random_ideal(rng, n, 2)
            a = tuple(rng.randint(1, cfg.alpha_entry_max) for _ in range(n))
            inst = {"ideal": {"vertices": [str(v) for v in ideal.ring_vertices],
                              "generators": [dict(g.exponents) for g in ideal.generators]},
                    "alpha": list(a)}
            yield _record("generator-commutation", inst, ideal_generators_ok(ideal, a))
    elif theorem == "links":
        cxs = complexes_for(cfg)
        for fld in cfg.fields:
            yield from _map(partial(_link_checks, entry_max=cfg.alpha_entry_max,
                                    max_expanded=cfg.max_expanded, field=fld), cxs)
    elif theorem == "contraction":
        cxs = complexes_for(cfg)
        for fld in cfg.fields:
            yield from _map(partial(_contraction_checks, entry_max=cfg.alpha_entry_max,
                                    descent_max=min(cfg.alpha_entry_max, 2),
                                    alpha_vertices=cfg.alpha_checks_max_vertices, field=fld), cxs)
    elif theorem == "cm":
        yield from _map(partial(_cm_checks, fields=cfg.fields), complexes_for(cfg))
    else:
        yield from _map(partial(_homology_checks, fields=cfg.fields), complexes_for(cfg))


def summarize(records: Iterable[dict]) -> Counter:
    return Counter((r["check"], r.get("field") or r["instance"].get("field", ""), r["verdict"]) for r in records)


def dump_jsonl(records: Iterable[dict]) -> Iterator[str]:
    for r in records:
        yield json.dumps(r, sort_keys=True)


__all__ = ["InstanceSweepConfig", "THEOREMS", "dump_jsonl", "ideal_generators_ok", "summarize", "sweep"]
