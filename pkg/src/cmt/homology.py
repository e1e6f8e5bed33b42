"""Exact reduced simplicial homology over GF(p) or the rationals.

Betti numbers come from ranks of boundary matrices: GF(2) uses XOR on
integer bitsets, GF(p) modular Gaussian elimination, and the rationals
fraction-free Bareiss elimination on Python integers.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence

from .core import SimplicialComplex, card, face_indices, face_key, maximal_sets, subfaces


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: ``GF(p)`` when ``p`` is set, otherwise the rationals."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None:
            if not (2 <= self.p < 2**31) or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime 2 <= p < 2^31, got {self.p}")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Accepts ``q`` or ``gf:<p>``."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls()
        if t.startswith("gf:"):
            return cls(int(t[3:]))
        raise ValueError(f"unknown field {text!r}; use q or gf:<p>")

    def __str__(self) -> str:
        return "q" if self.p is None else f"gf:{self.p}"

    def reduce(self, x: int) -> int:
        return x if self.p is None else x % self.p


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


QQ = FieldSpec()
GF2 = FieldSpec(2)


@dataclass(frozen=True)
class BoundaryMatrix:
    rows: tuple[int, ...]  # faces of cardinality q
    cols: tuple[int, ...]  # faces of cardinality q + 1
    entries: tuple[tuple[int, ...], ...]
    field: FieldSpec = QQ

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.cols)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers; ``betti[0]`` is degree -1."""

    betti: tuple[int, ...]
    field: FieldSpec = dc_field(default=QQ)

    def __getitem__(self, q: int) -> int:
        if q < -1 or q + 1 >= len(self.betti):
            return 0
        return self.betti[q + 1]

    def as_dict(self) -> dict[int, int]:
        return {q - 1: b for q, b in enumerate(self.betti)}

    def first_nonzero(self) -> int | None:
        for q, b in enumerate(self.betti):
            if b:
                return q - 1
        return None


# --------------------------------------------------------------------------
# faces and boundary matrices


def _faces_by_card(facets: Sequence[int]) -> list[list[int]]:
    top = max(card(f) for f in facets)
    layers: list[set[int]] = [set() for _ in range(top + 1)]
    for f in facets:
        for s in subfaces(f):
            layers[card(s)].add(s)
    return [sorted(layer, key=face_key) for layer in layers]


def _boundary_columns(rows: Sequence[int], cols: Sequence[int]) -> list[list[tuple[int, int]]]:
    """Sparse columns: list of (row position, ±1)."""
    pos = {r: i for i, r in enumerate(rows)}
    out = []
    for c in cols:
        entries = []
        sign = 1
        for v in face_indices(c):
            entries.append((pos[c & ~(1 << v)], sign))
            sign = -sign
        out.append(entries)
    return out


def boundary_matrix(cx: SimplicialComplex, q: int, field: FieldSpec = QQ) -> BoundaryMatrix:
    """Matrix of the boundary map from q-faces to (q-1)-faces.

    Rows are faces of dimension q-1 (the empty face for q = 0), columns faces
    of dimension q, both in lexicographic order.  Dropping the k-th smallest
    vertex contributes (-1)^k.
    """
    layers = _faces_by_card(cx.facets)
    if q < 0 or q + 1 >= len(layers):
        rows = tuple(layers[q]) if 0 <= q < len(layers) else ()
        return BoundaryMatrix(rows, (), tuple(() for _ in rows), field)
    rows, cols = layers[q], layers[q + 1]
    dense = [[0] * len(cols) for _ in rows]
    for j, col in enumerate(_boundary_columns(rows, cols)):
        for i, s in col:
            dense[i][j] = field.reduce(s)
    return BoundaryMatrix(tuple(rows), tuple(cols), tuple(tuple(r) for r in dense), field)


# --------------------------------------------------------------------------
# rank kernels


def rank_gf2(vectors: Sequence[int]) -> int:
    """Rank over GF(2) of bit-packed vectors (XOR basis)."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def rank_mod_p(matrix: Sequence[Sequence[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in matrix]
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        inv = pow(pr[c], p - 2, p)
        pr = rows[rank] = [(x * inv) % p for x in pr]
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                ri = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(ri, pr)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals by fraction-free Bareiss elimination.

    The pivot is searched over the whole remaining submatrix; columns are
    swapped into place so every division stays exact.
    """
    a = [list(r) for r in matrix if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    prev = 1
    k = 0
    while k < min(m, n):
        piv = None
        for i in range(k, m):
            row = a[i]
            for j in range(k, n):
                if row[j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i, j = piv
        a[k], a[i] = a[i], a[k]
        if j != k:
            for row in a:
                row[k], row[j] = row[j], row[k]
        pk = a[k]
        pivot = pk[k]
        for i in range(k + 1, m):
            ri = a[i]
            f = ri[k]
            if f:
                a[i] = ri[:k + 1] + [(pivot * ri[c] - f * pk[c]) // prev for c in range(k + 1, n)]
            elif pivot != prev:
                a[i] = ri[:k + 1] + [(pivot * ri[c]) // prev for c in range(k + 1, n)]
            a[i][k] = 0
        prev = pivot
        k += 1
    return k


def matrix_rank(m: BoundaryMatrix) -> int:
    if not m.rows or not m.cols:
        return 0
    if m.field.p is None:
        return rank_bareiss(m.entries)
    if m.field.p == 2:
        cols = []
        for j in range(len(m.cols)):
            v = 0
            for i, row in enumerate(m.entries):
                if row[j] & 1:
                    v |= 1 << i
            cols.append(v)
        return rank_gf2(cols)
    return rank_mod_p(m.entries, m.field.p)


def _layer_rank(rows: Sequence[int], cols: Sequence[int], p: int | None) -> int:
    if not rows or not cols:
        return 0
    sparse = _boundary_columns(rows, cols)
    if p == 2:
        vecs = []
        for col in sparse:
            v = 0
            for i, _ in col:
                v |= 1 << i
            vecs.append(v)
        return rank_gf2(vecs)
    # transpose: one row per column face, so rank is unchanged
    dense = []
    for col in sparse:
        r = [0] * len(rows)
        for i, s in col:
            r[i] = s
        dense.append(r)
    if p is None:
        return rank_bareiss(dense)
    return rank_mod_p(dense, p)


# --------------------------------------------------------------------------
# Betti numbers


def _compress(facets: Sequence[int]) -> tuple[int, ...]:
    """Relabel the support onto the lowest bits, keeping vertex order."""
    support = 0
    for f in facets:
        support |= f
    idx = face_indices(support)
    if idx == tuple(range(len(idx))):
        return tuple(sorted(facets))
    remap = {v: i for i, v in enumerate(idx)}
    out = []
    for f in facets:
        m = 0
        for v in face_indices(f):
            m |= 1 << remap[v]
        out.append(m)
    return tuple(sorted(out))


def _common_vertex(facets: Sequence[int]) -> int:
    c = facets[0]
    for f in facets[1:]:
        c &= f
    return c


def strong_collapse(facets: Sequence[int]) -> tuple[int, ...]:
    """Delete dominated vertices until none is left.

    A vertex v is dominated when every facet through v also contains some
    other vertex u; then link(v) is a cone and deleting v keeps the homotopy
    type, so reduced homology is unchanged over every field.
    """
    facets = list(facets)
    changed = True
    while changed and len(facets) > 1:
        changed = False
        support = 0
        for f in facets:
            support |= f
        for v in face_indices(support):
            bit = 1 << v
            common = -1
            for f in facets:
                if f & bit:
                    common &= f
            if common & ~bit:
                facets = maximal_sets(f & ~bit for f in facets)
                changed = True
                break
    return tuple(facets)


@lru_cache(maxsize=200_000)
def _betti(facets: tuple[int, ...], p: int | None, shortcut: bool) -> tuple[int, ...]:
    top = max(card(f) for f in facets)
    if shortcut and top > 0:
        if _common_vertex(facets):
            return (0,) * (top + 1)
        reduced = _compress(strong_collapse(facets))
        if reduced != facets:
            inner = _betti(reduced, p, shortcut)
            return inner + (0,) * (top + 1 - len(inner))
    layers = _faces_by_card(facets)
    ranks = [_layer_rank(layers[c - 1], layers[c], p) for c in range(1, len(layers))]
    ranks.append(0)
    betti = []
    for c, layer in enumerate(layers):
        below = ranks[c - 1] if c >= 1 else 0
        betti.append(len(layer) - below - ranks[c])
    return tuple(betti)


def reduced_betti(cx: SimplicialComplex, field: FieldSpec = QQ, shortcut: bool = True) -> HomologyProfile:
    """Reduced Betti numbers for degrees -1 .. dim.

    With ``shortcut`` cones are reported acyclic outright and dominated
    vertices are collapsed away before any elimination; without it the
    numbers come from boundary ranks of the complex as given.
    """
    return HomologyProfile(_betti(_compress(cx.facets), field.p, shortcut), field)


def betti_of_facets(facets: Sequence[int], field: FieldSpec = QQ) -> tuple[int, ...]:
    """Betti tuple (degree -1 first) straight from facet bitmasks."""
    return _betti(_compress(facets), field.p, True)


def is_k_acyclic_below(cx: SimplicialComplex, bound: int, field: FieldSpec = QQ) -> bool:
    """True iff reduced homology vanishes in every degree i < bound."""
    b = reduced_betti(cx, field)
    return all(b[i] == 0 for i in range(-1, bound))


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """Sum over faces (including the empty face) of (-1)^dim."""
    return sum((-1) ** (c - 1) * len(layer) for c, layer in enumerate(_faces_by_card(cx.facets)))
