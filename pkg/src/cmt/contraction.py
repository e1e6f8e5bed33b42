"""Contraction: collapse vertices that lie in exactly the same facets.

The classes give the multiplicity vector α, and expanding the contraction by
α gives back the original complex up to relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import cm
from .core import (
    CmtError,
    GhostVertex,
    SimpleGraph,
    SimplicialComplex,
    VertexLabel,
    card,
    face_indices,
    independence_complex,
    is_pure,
    maximal_sets,
    minimal_nonfaces,
)
from .expansion import TheoremReport, check_alpha, complex_payload, expand_complex
from .homology import QQ, FieldSpec


class DaggerViolated(CmtError, ValueError):
    pass


class NotAGraphComplex(CmtError, ValueError):
    pass


@dataclass(frozen=True)
class ContractionResult:
    gamma: SimplicialComplex
    alpha: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def class_names(self, source: SimplicialComplex) -> list[list[str]]:
        return [[str(source.vertices[i]) for i in cls] for cls in self.classes]


def contract_complex(cx: SimplicialComplex, prefix: str = "y") -> ContractionResult:
    """Quotient by facet-incidence; classes ordered by their smallest vertex.

    The i-th class becomes vertex ``y{i}`` of the contraction.
    """
    if cx.n == 0:
        raise ValueError("contraction needs at least one vertex")
    ghosts = ((1 << cx.n) - 1) & ~cx.support()
    if ghosts:
        raise GhostVertex("contraction is undefined with vertices in no facet")
    by_incidence: dict[tuple[int, ...], list[int]] = {}
    for v in range(cx.n):
        key = tuple(k for k, f in enumerate(cx.facets) if f >> v & 1)
        by_incidence.setdefault(key, []).append(v)
    classes = sorted((tuple(c) for c in by_incidence.values()), key=lambda c: c[0])
    class_mask = [sum(1 << v for v in c) for c in classes]
    facets = []
    for f in cx.facets:
        g = 0
        for i, m in enumerate(class_mask):
            if m & ~f == 0:
                g |= 1 << i
        facets.append(g)
    labels = tuple(VertexLabel(f"{prefix}{i + 1}") for i in range(len(classes)))
    gamma = SimplicialComplex(labels, tuple(maximal_sets(facets)))
    return ContractionResult(gamma, tuple(len(c) for c in classes), tuple(classes))


def verify_round_trip(cx: SimplicialComplex) -> bool:
    """Check that expanding the contraction recovers ``cx`` facet for facet."""
    res = contract_complex(cx)
    expanded = expand_complex(res.gamma, res.alpha)
    # y_i copy j  ->  j-th smallest member of class i
    to_original = [v for cls in res.classes for v in cls]
    mapped = []
    for f in expanded.facets:
        m = 0
        for pos in face_indices(f):
            m |= 1 << to_original[pos]
        mapped.append(m)
    return sorted(mapped) == sorted(cx.facets) and len(set(mapped)) == len(mapped)


def check_dagger(cx: SimplicialComplex, alpha: Sequence[int]) -> bool:
    """Whenever x_i is in F \\ G and x_j in G \\ F for facets F, G, k_i = k_j."""
    alpha = check_alpha(alpha, cx.n)
    for f in cx.facets:
        for g in cx.facets:
            left = {alpha[i] for i in face_indices(f & ~g)}
            right = {alpha[j] for j in face_indices(g & ~f)}
            if left and right and (len(left | right) > 1):
                return False
    return True


def verify_purity_transfer(cx: SimplicialComplex, alpha: Sequence[int]) -> bool:
    if not check_dagger(cx, alpha):
        raise DaggerViolated("condition (dagger) fails for this alpha")
    return is_pure(cx) == is_pure(expand_complex(cx, alpha))


def verify_contraction_theorem(cx: SimplicialComplex, field: FieldSpec = QQ, t: int | None = None) -> TheoremReport:
    """A CM_t complex whose contraction is pure with all α_i >= t contracts to a Buchsbaum complex.

    With ``t`` omitted the least t is used.  When the complex is
    Cohen-Macaulay the contraction must be Cohen-Macaulay as well.
    """
    rep = TheoremReport("contraction", {"complex": complex_payload(cx)}, str(field), "skip")
    report = cm.min_cm_t(cx, field)
    if t is None:
        t = report.minimal_t
    res = contract_complex(cx)
    gamma = res.gamma
    cm_t = t is not None and cm.is_cm_t(cx, t, field)
    rep.hypotheses = {
        "cm_t": cm_t,
        "contraction_pure": is_pure(gamma),
        "alpha_at_least_t": t is not None and all(a >= t for a in res.alpha),
    }
    buchsbaum = cm.is_buchsbaum(gamma, field)
    rep.computed = {
        "t": t,
        "alpha": list(res.alpha),
        "contraction": complex_payload(gamma),
        "buchsbaum": buchsbaum,
        "contraction_min_t": cm.min_cm_t(gamma, field).minimal_t,
    }
    ok = True
    if report.minimal_t == 0:
        gamma_cm = cm.is_cohen_macaulay(gamma, field)
        rep.computed["contraction_cm"] = gamma_cm
        ok = gamma_cm
    if all(rep.hypotheses.values()):
        rep.verdict = "pass" if (buchsbaum and ok) else "fail"
    elif report.minimal_t == 0:
        rep.verdict = "pass" if ok else "fail"
        rep.reason = "only the Cohen-Macaulay case applies"
    else:
        missing = [h for h, v in rep.hypotheses.items() if not v]
        rep.reason = "hypothesis not met: " + ", ".join(missing)
    return rep


def contract_graph(g: SimpleGraph) -> tuple[SimpleGraph, tuple[int, ...]]:
    """Contract the independence complex and read off the graph it comes from.

    Vertex ``y{i}`` of the result stands for the i-th class of
    ``contract_complex(independence_complex(g))``.
    """
    res = contract_complex(independence_complex(g))
    edges = []
    for m in minimal_nonfaces(res.gamma):
        if card(m) != 2:
            raise NotAGraphComplex(f"minimal non-face of size {card(m)} in the contraction")
        i, j = face_indices(m)
        edges.append((i, j))
    return SimpleGraph(res.gamma.vertices, frozenset(edges)), res.alpha
