"""Cohen-Macaulay, Buchsbaum and CM_t tests through homology of links.

A face G "passes" when the reduced homology of link(G) vanishes below the
top dimension of that link.  Links of links are links
(link_{link F}(H) = link(F ∪ H)), so link(F) is Cohen-Macaulay exactly when
every face containing F passes.  Consequently a pure complex is CM_t iff
every face of cardinality >= t passes, and the least such t is one more
than the largest failing face.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import CmtError, SimplicialComplex, all_faces, card, dim, face_indices, is_pure, link
from .homology import QQ, FieldSpec, reduced_betti


class EmptyComplex(CmtError, ValueError):
    pass


@dataclass(frozen=True)
class Witness:
    """A face whose link has nonzero reduced homology below its dimension."""

    t: int
    face: tuple[str, ...]
    degree: int


@dataclass(frozen=True)
class CmReport:
    pure: bool
    minimal_t: int | None
    field: FieldSpec
    witnesses: tuple[Witness, ...] = ()

    @property
    def cohen_macaulay(self) -> bool:
        return self.minimal_t == 0


def failing_degree(cx: SimplicialComplex, face: int, field: FieldSpec = QQ) -> int | None:
    """Lowest degree i < dim link(face) with nonzero homology, if any."""
    lk = link(cx, face)
    b = reduced_betti(lk, field)
    for i in range(-1, dim(lk)):
        if b[i]:
            return i
    return None


def failing_faces(cx: SimplicialComplex, field: FieldSpec = QQ) -> dict[int, int]:
    """Map every failing face to its failing degree."""
    out = {}
    for g in all_faces(cx):
        d = failing_degree(cx, g, field)
        if d is not None:
            out[g] = d
    return out


def is_cohen_macaulay(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    return all(failing_degree(cx, g, field) is None for g in all_faces(cx))


def is_cm_t(cx: SimplicialComplex, t: int, field: FieldSpec = QQ) -> bool:
    """Pure, and the link of every face with at least ``t`` vertices is Cohen-Macaulay."""
    t = max(t, 0)
    if not is_pure(cx):
        return False
    for f in all_faces(cx):
        if card(f) >= t and not is_cohen_macaulay(link(cx, f), field):
            return False
    return True


def min_cm_t(cx: SimplicialComplex, field: FieldSpec = QQ) -> CmReport:
    if not is_pure(cx):
        return CmReport(False, None, field)
    bad = failing_faces(cx, field)
    if not bad:
        return CmReport(True, 0, field)
    minimal = max(card(g) for g in bad) + 1
    witnesses = []
    for t in range(minimal):
        g = next(g for g in bad if card(g) >= t)
        witnesses.append(Witness(t, cx.names(g), bad[g]))
    return CmReport(True, minimal, field, tuple(witnesses))


def is_buchsbaum(cx: SimplicialComplex, field: FieldSpec = QQ) -> bool:
    """Pure, with vanishing homology below the top for the link of every nonempty face."""
    if not is_pure(cx):
        return False
    return all(failing_degree(cx, g, field) is None for g in all_faces(cx) if g)


def cm_t_recursive(cx: SimplicialComplex, t: int, field: FieldSpec = QQ) -> bool:
    """CM_t through the vertex-link recursion: pure, and every vertex link is CM_{t-1}."""
    if t <= 0:
        return is_cohen_macaulay(cx, field)
    if cx.facets == (0,):
        raise EmptyComplex("the vertex-link recursion needs a nonempty complex")
    return _recursive(cx, t, field)


def _recursive(cx: SimplicialComplex, t: int, field: FieldSpec) -> bool:
    if t <= 0:
        return is_cohen_macaulay(cx, field)
    if cx.facets == (0,):
        # {∅} is CM_t for every t straight from the definition
        return True
    if not is_pure(cx):
        return False
    return all(_recursive(link(cx, 1 << v), t - 1, field) for v in face_indices(cx.support()))
