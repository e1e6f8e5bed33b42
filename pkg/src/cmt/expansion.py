"""Expansion of complexes, graphs and monomial ideals by a multiplicity vector.

Vertex ``x_i`` is replaced by ``k_i`` copies ``x_i_1 .. x_i_{k_i}``, laid out
in blocks in the order of the original vertex table.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Any, Sequence

from . import cm
from .core import (
    CmtError,
    Monomial,
    MonomialIdeal,
    NotAFace,
    SimpleGraph,
    SimplicialComplex,
    VertexLabel,
    all_faces,
    dim,
    face_indices,
    is_cone,
    is_pure,
    link,
    maximal_sets,
    minimalize,
    normalize_complex,
)
from .homology import QQ, FieldSpec, reduced_betti


class HypothesisNotMet(CmtError):
    pass


def check_alpha(alpha: Sequence[int], n: int) -> tuple[int, ...]:
    alpha = tuple(int(k) for k in alpha)
    if len(alpha) != n:
        raise ValueError(f"alpha has {len(alpha)} entries for {n} vertices")
    if any(k < 1 for k in alpha):
        raise ValueError("alpha entries must be positive")
    return alpha


def expand_vertices(vertices: Sequence[VertexLabel], alpha: Sequence[int]) -> tuple[VertexLabel, ...]:
    alpha = check_alpha(alpha, len(vertices))
    out = []
    for lab, k in zip(vertices, alpha):
        if lab.copy is not None:
            raise ValueError(f"cannot expand already expanded vertex {lab}")
        out.extend(VertexLabel(lab.base, j) for j in range(1, k + 1))
    return tuple(out)


@dataclass(frozen=True)
class Blocks:
    """Positional bookkeeping for an expansion: block masks and offsets."""

    alpha: tuple[int, ...]
    offsets: tuple[int, ...]
    masks: tuple[int, ...]

    @classmethod
    def of(cls, alpha: Sequence[int]) -> Blocks:
        offsets, masks, pos = [], [], 0
        for k in alpha:
            offsets.append(pos)
            masks.append(((1 << k) - 1) << pos)
            pos += k
        return cls(tuple(alpha), tuple(offsets), tuple(masks))

    def expand(self, face: int) -> int:
        out = 0
        for i in face_indices(face):
            out |= self.masks[i]
        return out

    def project(self, face: int) -> int:
        """Image of an expanded face under x_{ij} -> x_i."""
        out = 0
        for i, m in enumerate(self.masks):
            if face & m:
                out |= 1 << i
        return out

    def owner(self, v: int) -> int:
        return next(i for i, m in enumerate(self.masks) if m >> v & 1)


def expand_face(face: int, alpha: Sequence[int], vertices: Sequence[VertexLabel] | None = None) -> int:
    """F^alpha as a bitmask over the expanded vertex table."""
    if vertices is not None:
        check_alpha(alpha, len(vertices))
    return Blocks.of(alpha).expand(face)


def expand_complex(cx: SimplicialComplex, alpha: Sequence[int]) -> SimplicialComplex:
    verts = expand_vertices(cx.vertices, alpha)
    blocks = Blocks.of(alpha)
    return normalize_complex([blocks.expand(f) for f in cx.facets], verts, allow_ghosts=True)


def expand_graph(g: SimpleGraph, alpha: Sequence[int]) -> SimpleGraph:
    """Duplicate vertex i k_i - 1 times; copies of one vertex stay non-adjacent."""
    verts = expand_vertices(g.vertices, alpha)
    off = Blocks.of(alpha).offsets
    edges = set()
    for i, j in g.edges:
        for r in range(alpha[i]):
            for s in range(alpha[j]):
                a, b = off[i] + r, off[j] + s
                edges.add((min(a, b), max(a, b)))
    return SimpleGraph(verts, frozenset(edges))


def expand_monomial(u: Monomial, alpha: Sequence[int]) -> list[Monomial]:
    """Minimal generators of the product of P_j^{nu_j(u)}, P_j = (x_j_1, ..., x_j_{k_j})."""
    off = Blocks.of(alpha).offsets
    per_var = []
    for j, e in u.exponents:
        block = range(off[j], off[j] + alpha[j])
        per_var.append([Monomial.from_dict(_count(c)) for c in combinations_with_replacement(block, e)])
    out = []
    for parts in product(*per_var):
        m = Monomial()
        for p in parts:
            m = m * p
        out.append(m)
    return minimalize(out)


def _count(items: Sequence[int]) -> dict[int, int]:
    d: dict[int, int] = {}
    for x in items:
        d[x] = d.get(x, 0) + 1
    return d


def expand_ideal(ideal: MonomialIdeal, alpha: Sequence[int]) -> MonomialIdeal:
    verts = expand_vertices(ideal.ring_vertices, alpha)
    gens = [m for u in ideal.generators for m in expand_monomial(u, alpha)]
    return MonomialIdeal.build(verts, gens)


# --------------------------------------------------------------------------
# links in an expansion


@dataclass(frozen=True)
class LinkDecomposition:
    """How link_{Δ^α}(F) arises from Δ.

    ``expanded`` is True when F = G^α; ``base_face`` is then G, otherwise it
    is U = π(F).  ``holds`` records whether the predicted identity was
    confirmed (and, in the second case, that the link is a cone).
    """

    expanded: bool
    base_face: int
    link: SimplicialComplex
    predicted: SimplicialComplex
    cone_apex: int | None
    holds: bool


def _same_faces(a: SimplicialComplex, b: SimplicialComplex) -> bool:
    return a.facet_names() == b.facet_names()


def link_expansion_decompose(
    cx: SimplicialComplex,
    alpha: Sequence[int],
    face: int,
    expanded: SimplicialComplex | None = None,
) -> LinkDecomposition:
    """Classify ``face`` of Δ^α and confirm the matching link identity.

    ``expanded`` may be passed to reuse an already computed Δ^α.
    """
    if expanded is None:
        expanded = expand_complex(cx, alpha)
    if not expanded.contains(face):
        raise NotAFace(f"{expanded.names(face)} is not a face of the expansion")
    blocks = Blocks.of(alpha)
    lk = link(expanded, face)
    base = blocks.project(face)
    full = blocks.expand(base)
    if full == face:
        # link of G^α is the expansion of link(G)
        predicted = expand_complex(link(cx, base), alpha)
        return LinkDecomposition(True, base, lk, predicted, is_cone(lk), _same_faces(lk, predicted))
    # <U^α \ F> * link(U^α), written on the shared vertex table
    rest = full & ~face
    predicted = SimplicialComplex(
        expanded.vertices, tuple(maximal_sets(rest | f for f in link(expanded, full).facets))
    )
    apex = is_cone(lk)
    holds = _same_faces(lk, predicted) and apex is not None
    return LinkDecomposition(False, base, lk, predicted, apex, holds)


# --------------------------------------------------------------------------
# the expansion theorem harness


@dataclass
class TheoremReport:
    """Outcome of checking one instance of a theorem.

    ``verdict`` is ``pass``, ``fail`` or ``skip``; ``instance`` carries a
    serialized reproduction of the input.
    """

    theorem: str
    instance: dict[str, Any]
    field: str
    verdict: str
    hypotheses: dict[str, bool] = field(default_factory=dict)
    computed: dict[str, Any] = field(default_factory=dict)
    reason: str = ""

    def as_record(self) -> dict[str, Any]:
        rec = {
            "theorem": self.theorem,
            "instance": self.instance,
            "field": self.field,
            "verdict": self.verdict,
            "hypotheses": self.hypotheses,
            "computed": self.computed,
        }
        if self.reason:
            rec["reason"] = self.reason
        return rec


def complex_payload(cx: SimplicialComplex) -> dict[str, Any]:
    return {"vertices": [str(v) for v in cx.vertices], "facets": [list(f) for f in cx.facet_names()]}


def verify_expansion_theorem(cx: SimplicialComplex, alpha: Sequence[int], field: FieldSpec = QQ) -> TheoremReport:
    """Check min CM_t of Δ^α against t + e - k + 1.

    Also records whether the upper half (Δ^α is CM_{t+e-k+1}) holds on its own.
    """
    alpha = check_alpha(alpha, cx.n)
    instance = {"complex": complex_payload(cx), "alpha": list(alpha)}
    rep = TheoremReport("expansion", instance, str(field), "skip")
    expanded = expand_complex(cx, alpha)
    rep.hypotheses = {
        "alpha_nontrivial": any(k > 1 for k in alpha),
        "pure": is_pure(cx),
        "expansion_pure": is_pure(expanded),
    }
    missing = [h for h, ok in rep.hypotheses.items() if not ok]
    if missing:
        rep.reason = "hypothesis not met: " + ", ".join(missing)
        return rep
    t = cm.min_cm_t(cx, field).minimal_t
    e = dim(expanded) + 1
    k = min(x for x in alpha if x > 1)
    t_exp = cm.min_cm_t(expanded, field).minimal_t
    predicted = t + e - k + 1
    rep.computed = {
        "t": t,
        "e": e,
        "k": k,
        "t_expanded": t_exp,
        "predicted": predicted,
        "upper_bound_holds": t_exp <= predicted,
    }
    rep.verdict = "pass" if t_exp == predicted else "fail"
    return rep


def require_hypotheses(cx: SimplicialComplex, alpha: Sequence[int]) -> None:
    """Raise HypothesisNotMet unless the expansion theorem applies."""
    alpha = check_alpha(alpha, cx.n)
    if not any(k > 1 for k in alpha):
        raise HypothesisNotMet("alpha is all ones")
    if not is_pure(cx):
        raise HypothesisNotMet("complex is not pure")
    if not is_pure(expand_complex(cx, alpha)):
        raise HypothesisNotMet("expansion is not pure")


def betti_dominates(cx: SimplicialComplex, alpha: Sequence[int], field: FieldSpec = QQ) -> bool:
    """β̃_i(Δ^α) >= β̃_i(Δ) for every i <= dim Δ (surjection on homology)."""
    b = reduced_betti(cx, field)
    be = reduced_betti(expand_complex(cx, alpha), field)
    return all(be[i] >= b[i] for i in range(-1, dim(cx) + 1))


def cone_links_acyclic(cx: SimplicialComplex, alpha: Sequence[int], field: FieldSpec = QQ) -> list[int]:
    """Faces F of Δ^α not of the form G^α whose link fails to be an acyclic cone.

    Homology here is computed without the cone shortcut.
    """
    expanded = expand_complex(cx, alpha)
    blocks = Blocks.of(alpha)
    bad = []
    for f in all_faces(expanded):
        if blocks.expand(blocks.project(f)) == f:
            continue
        lk = link(expanded, f)
        if is_cone(lk) is None or any(reduced_betti(lk, field, shortcut=False).betti):
            bad.append(f)
    return bad


__all__ = [
    "Blocks",
    "HypothesisNotMet",
    "LinkDecomposition",
    "TheoremReport",
    "betti_dominates",
    "check_alpha",
    "cone_links_acyclic",
    "expand_complex",
    "expand_face",
    "expand_graph",
    "expand_ideal",
    "expand_monomial",
    "expand_vertices",
    "link_expansion_decompose",
    "require_hypotheses",
    "verify_expansion_theorem",
]
