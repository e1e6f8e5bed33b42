"""Simplicial complexes, simple graphs and monomial ideals.

Faces are stored as integer bitmasks over the parent object's vertex table:
bit ``i`` set means vertex ``i`` belongs to the face.  All objects are frozen
and hashable, so they can be shared freely and used as cache keys.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

MAX_VERTICES = 64
SEPARATOR = "_"


class CmtError(Exception):
    """Base class for library errors."""


class EmptyInput(CmtError, ValueError):
    pass


class BadIndex(CmtError, IndexError):
    pass


class NotAFace(CmtError, ValueError):
    pass


class VertexClash(CmtError, ValueError):
    pass


class GhostVertex(CmtError, ValueError):
    """A declared vertex lies in no facet."""


class NotSquarefree(CmtError, ValueError):
    pass


# --------------------------------------------------------------------------
# faces as bitmasks


def face_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 0:
            raise BadIndex(f"negative vertex index {i}")
        mask |= 1 << i
    return mask


@lru_cache(maxsize=1 << 20)
def face_indices(mask: int) -> tuple[int, ...]:
    """Sorted vertex indices of a bitmask face."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def card(mask: int) -> int:
    return mask.bit_count()


def face_key(mask: int) -> tuple[int, ...]:
    """Lexicographic sort key used for every face listing."""
    return face_indices(mask)


def subfaces(mask: int) -> Iterable[int]:
    """All subsets of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal_sets(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``masks``, deduplicated, in face order."""
    uniq = sorted(set(masks), key=card, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return sorted(kept, key=face_key)


def minimal_sets(masks: Iterable[int]) -> list[int]:
    uniq = sorted(set(masks), key=card)
    kept: list[int] = []
    for m in uniq:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return sorted(kept, key=face_key)


def minimal_transversals(sets: Sequence[int]) -> list[int]:
    """Minimal hitting sets of a family of bitmasks (Berge's algorithm).

    An empty member makes the family unhittable and yields ``[]``.
    """
    current = [0]
    for s in sets:
        nxt = []
        for t in current:
            if t & s:
                nxt.append(t)
            else:
                rest = s
                while rest:
                    low = rest & -rest
                    nxt.append(t | low)
                    rest ^= low
        current = minimal_sets(nxt)
    return current


# --------------------------------------------------------------------------
# labels


@dataclass(frozen=True, order=True)
class VertexLabel:
    base: str
    copy: int | None = None

    def __post_init__(self) -> None:
        if not self.base or SEPARATOR in self.base:
            raise ValueError(f"invalid vertex base name {self.base!r}")
        if self.copy is not None and self.copy < 1:
            raise ValueError(f"copy index must be >= 1, got {self.copy}")

    def __str__(self) -> str:
        if self.copy is None:
            return self.base
        return f"{self.base}{SEPARATOR}{self.copy}"

    @classmethod
    def parse(cls, text: str) -> VertexLabel:
        base, sep, copy = text.rpartition(SEPARATOR)
        if not sep:
            return cls(text)
        if not copy.isdigit():
            raise ValueError(f"invalid vertex label {text!r}")
        return cls(base, int(copy))


def natural_key(label: VertexLabel) -> tuple:
    """Sort key putting ``x2`` before ``x10``."""
    parts = re.split(r"(\d+)", label.base)
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in parts if p), label.copy or 0


def as_labels(names: Iterable[str | VertexLabel]) -> tuple[VertexLabel, ...]:
    labels = tuple(n if isinstance(n, VertexLabel) else VertexLabel.parse(n) for n in names)
    if len(set(labels)) != len(labels):
        raise VertexClash("duplicate vertex labels")
    if len(labels) > MAX_VERTICES:
        raise BadIndex(f"at most {MAX_VERTICES} vertices are supported")
    return labels


def _index_of(labels: Sequence[VertexLabel], v: int | str | VertexLabel) -> int:
    if isinstance(v, int):
        if not 0 <= v < len(labels):
            raise BadIndex(f"vertex index {v} out of range")
        return v
    lab = v if isinstance(v, VertexLabel) else VertexLabel.parse(v)
    try:
        return labels.index(lab)
    except ValueError:
        raise BadIndex(f"unknown vertex {str(lab)!r}") from None


# --------------------------------------------------------------------------
# simplicial complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets over an ordered vertex table.

    ``facets`` is an antichain of bitmasks in lexicographic order.  The
    complex ``{∅}`` is the single facet ``0``; the void complex does not
    exist here.  Build instances with :func:`normalize_complex` or
    :meth:`from_facets`; the constructor only validates.
    """

    vertices: tuple[VertexLabel, ...]
    facets: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.facets:
            raise EmptyInput("a complex needs at least one facet")
        limit = 1 << len(self.vertices)
        for f in self.facets:
            if f < 0 or f >= limit:
                raise BadIndex(f"facet {f:#b} uses a vertex outside the table")
        if list(self.facets) != maximal_sets(self.facets):
            raise ValueError("facets must be a sorted antichain; use normalize_complex")

    @classmethod
    def trusted(cls, vertices: tuple[VertexLabel, ...], facets: tuple[int, ...]) -> SimplicialComplex:
        """Skip validation; for facets already known to be a sorted antichain."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "vertices", vertices)
        object.__setattr__(obj, "facets", facets)
        return obj

    @classmethod
    def from_facets(
        cls,
        facets: Iterable[Iterable[int | str | VertexLabel]],
        vertices: Iterable[str | VertexLabel] | None = None,
        allow_ghosts: bool = False,
    ) -> SimplicialComplex:
        """Convenience constructor from facets given by index or label.

        Without ``vertices`` the table is the sorted union of the labels.
        """
        facets = [list(f) for f in facets]
        if vertices is None:
            names = {VertexLabel.parse(v) if isinstance(v, str) else v
                     for f in facets for v in f}
            vertices = sorted(names, key=natural_key)
        labels = as_labels(vertices)
        raw = [face_from_indices(_index_of(labels, v) for v in f) for f in facets]
        return normalize_complex(raw, labels, allow_ghosts=allow_ghosts)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def support(self) -> int:
        s = 0
        for f in self.facets:
            s |= f
        return s

    def contains(self, face: int) -> bool:
        return any(face & ~f == 0 for f in self.facets)

    def face(self, vertices: Iterable[int | str | VertexLabel]) -> int:
        """Bitmask for a face named by indices or labels (no membership check)."""
        return face_from_indices(_index_of(self.vertices, v) for v in vertices)

    def names(self, face: int) -> tuple[str, ...]:
        return tuple(str(self.vertices[i]) for i in face_indices(face))

    def facet_names(self) -> list[tuple[str, ...]]:
        return [self.names(f) for f in self.facets]

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(self.names(f)) + "}" for f in self.facets)
        return f"<{body}>"


def normalize_complex(
    raw_faces: Iterable[int],
    vertices: Iterable[str | VertexLabel],
    allow_ghosts: bool = False,
) -> SimplicialComplex:
    """Keep the inclusion-maximal faces and validate the result."""
    labels = as_labels(vertices)
    raw = list(raw_faces)
    if not raw:
        raise EmptyInput("no faces given")
    limit = 1 << len(labels)
    for f in raw:
        if f < 0 or f >= limit:
            raise BadIndex(f"face {f:#b} uses a vertex outside the table")
    facets = tuple(maximal_sets(raw))
    if not allow_ghosts:
        covered = 0
        for f in facets:
            covered |= f
        ghosts = ((1 << len(labels)) - 1) & ~covered
        if ghosts:
            names = [str(labels[i]) for i in face_indices(ghosts)]
            raise GhostVertex(f"vertices in no facet: {', '.join(names)}")
    return SimplicialComplex.trusted(labels, facets)


def dim(cx: SimplicialComplex) -> int:
    return max(card(f) for f in cx.facets) - 1


def is_pure(cx: SimplicialComplex) -> bool:
    return len({card(f) for f in cx.facets}) == 1


def link(cx: SimplicialComplex, face: int) -> SimplicialComplex:
    """Link of ``face``; it keeps the parent's vertex table."""
    star = [f & ~face for f in cx.facets if face & ~f == 0]
    if not star:
        raise NotAFace(f"{cx.names(face)} is not a face")
    return SimplicialComplex.trusted(cx.vertices, tuple(maximal_sets(star)))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if set(a.vertices) & set(b.vertices):
        raise VertexClash("join needs disjoint vertex tables")
    shift = a.n
    facets = [fa | (fb << shift) for fa in a.facets for fb in b.facets]
    return SimplicialComplex.trusted(a.vertices + b.vertices, tuple(maximal_sets(facets)))


def is_cone(cx: SimplicialComplex) -> int | None:
    """Smallest vertex lying in every facet, if any."""
    common = cx.facets[0]
    for f in cx.facets[1:]:
        common &= f
    if not common:
        return None
    return face_indices(common & -common)[0]


def all_faces(cx: SimplicialComplex) -> list[int]:
    seen: set[int] = set()
    for f in cx.facets:
        seen.update(subfaces(f))
    return sorted(seen, key=lambda m: (card(m), face_key(m)))


def faces_of_card(cx: SimplicialComplex, c: int) -> list[int]:
    if c < 0:
        return []
    seen: set[int] = set()
    for f in cx.facets:
        idx = face_indices(f)
        if len(idx) >= c:
            seen.update(face_from_indices(s) for s in combinations(idx, c))
    return sorted(seen, key=face_key)


def f_vector(cx: SimplicialComplex) -> list[int]:
    """Face counts by cardinality 0..dim+1 (so index 0 counts the empty face)."""
    return [len(faces_of_card(cx, c)) for c in range(dim(cx) + 2)]


def minimal_nonfaces(cx: SimplicialComplex) -> list[int]:
    # the Stanley-Reisner ideal is the intersection of the primes on facet complements
    full = (1 << cx.n) - 1
    return minimal_transversals([full & ~f for f in cx.facets])


# --------------------------------------------------------------------------
# monomials and monomial ideals


@dataclass(frozen=True, order=True)
class Monomial:
    """Exponent vector stored as sorted ``(index, exponent)`` pairs, exponents >= 1."""

    exponents: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        idx = [i for i, _ in self.exponents]
        if idx != sorted(set(idx)):
            raise ValueError("monomial indices must be strictly increasing")
        if any(e < 1 for _, e in self.exponents):
            raise ValueError("monomial exponents must be >= 1")

    @classmethod
    def from_dict(cls, exps: dict[int, int]) -> Monomial:
        return cls(tuple(sorted((i, e) for i, e in exps.items() if e)))

    @classmethod
    def squarefree(cls, mask: int) -> Monomial:
        return cls(tuple((i, 1) for i in face_indices(mask)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.exponents)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exponents)

    @property
    def support(self) -> int:
        return face_from_indices(i for i, _ in self.exponents)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exponents)

    def divides(self, other: Monomial) -> bool:
        o = other.as_dict()
        return all(o.get(i, 0) >= e for i, e in self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        d = self.as_dict()
        for i, e in other.exponents:
            d[i] = d.get(i, 0) + e
        return Monomial.from_dict(d)


def minimalize(monomials: Iterable[Monomial]) -> list[Monomial]:
    """Divisibility-minimal elements, deduplicated and sorted."""
    uniq = sorted(set(monomials), key=lambda m: (m.degree, m))
    kept: list[Monomial] = []
    for m in uniq:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return sorted(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal through its minimal generating set G(I)."""

    ring_vertices: tuple[VertexLabel, ...]
    generators: tuple[Monomial, ...]

    def __post_init__(self) -> None:
        if list(self.generators) != minimalize(self.generators):
            raise ValueError("generators must be minimal and sorted; use MonomialIdeal.build")
        n = len(self.ring_vertices)
        for g in self.generators:
            if any(i >= n for i, _ in g.exponents):
                raise BadIndex("generator uses a variable outside the ring")

    @classmethod
    def build(cls, vertices: Iterable[str | VertexLabel], generators: Iterable[Monomial]) -> MonomialIdeal:
        return cls(as_labels(vertices), tuple(minimalize(generators)))

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def is_zero(self) -> bool:
        return not self.generators

    def format_monomial(self, m: Monomial) -> str:
        if not m.exponents:
            return "1"
        parts = []
        for i, e in m.exponents:
            name = str(self.ring_vertices[i])
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:
        return "(" + ", ".join(self.format_monomial(g) for g in self.generators) + ")"


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    gens = [Monomial.squarefree(m) for m in minimal_nonfaces(cx)]
    return MonomialIdeal.build(cx.vertices, gens)


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex of a squarefree ideal.

    Variables that are themselves generators become declared vertices in no
    facet, so the result may carry ghost vertices.
    """
    if not ideal.is_squarefree():
        raise NotSquarefree("complex_of_ideal needs a squarefree ideal")
    if any(g.degree == 0 for g in ideal.generators):
        raise EmptyInput("the unit ideal has the void complex")
    full = (1 << len(ideal.ring_vertices)) - 1
    covers = minimal_transversals([g.support for g in ideal.generators])
    return normalize_complex([full & ~c for c in covers], ideal.ring_vertices, allow_ghosts=True)


# --------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class SimpleGraph:
    vertices: tuple[VertexLabel, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        n = len(self.vertices)
        for i, j in self.edges:
            if not (0 <= i < j < n):
                raise BadIndex(f"bad edge ({i}, {j}); need 0 <= i < j < {n}")

    @classmethod
    def build(
        cls,
        vertices: Iterable[str | VertexLabel],
        edges: Iterable[tuple[int | str | VertexLabel, int | str | VertexLabel]],
    ) -> SimpleGraph:
        labels = as_labels(vertices)
        es = set()
        for a, b in edges:
            i, j = _index_of(labels, a), _index_of(labels, b)
            if i == j:
                raise ValueError(f"loop at {labels[i]}")
            es.add((min(i, j), max(i, j)))
        return cls(labels, frozenset(es))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def adjacency(self) -> list[int]:
        adj = [0] * self.n
        for i, j in self.edges:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def edge_names(self) -> list[tuple[str, str]]:
        return [(str(self.vertices[i]), str(self.vertices[j])) for i, j in sorted(self.edges)]


def _maximal_independent_sets(adj: Sequence[int], n: int) -> list[int]:
    # Bron-Kerbosch with pivoting on the complement graph
    full = (1 << n) - 1
    comp = [full & ~adj[v] & ~(1 << v) for v in range(n)]
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pu = p | x
        pivot = face_indices(pu & -pu)[0]
        best = -1
        for u in face_indices(pu):
            c = card(p & comp[u])
            if c > best:
                best, pivot = c, u
        for v in face_indices(p & ~comp[pivot]):
            bit = 1 << v
            expand(r | bit, p & comp[v], x & comp[v])
            p &= ~bit
            x |= bit

    expand(0, full, 0)
    return out


def independence_complex(g: SimpleGraph) -> SimplicialComplex:
    if g.n == 0:
        return SimplicialComplex((), (0,))
    facets = _maximal_independent_sets(g.adjacency(), g.n)
    return normalize_complex(facets, g.vertices)


def edge_ideal(g: SimpleGraph) -> MonomialIdeal:
    gens = [Monomial(((i, 1), (j, 1))) for i, j in g.edges]
    return MonomialIdeal.build(g.vertices, gens)
