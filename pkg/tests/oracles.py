"""Independent brute-force oracles.

Nothing here uses bitmask helpers or rank kernels from the package: faces
are Python frozensets enumerated from the powerset, and ranks come from
sympy's DomainMatrix.
"""

from __future__ import annotations

from itertools import chain, combinations

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, r) for r in range(len(items) + 1))


def faces_of(facets):
    """All faces of the complex generated by ``facets`` (iterables of names)."""
    out = set()
    for f in facets:
        out.update(frozenset(s) for s in powerset(f))
    return out


def link_faces(faces, face):
    face = frozenset(face)
    return {g for g in faces if not (g & face) and (g | face) in faces}


def dimension(faces):
    return max(len(f) for f in faces) - 1


def rank(rows, p=None):
    if not rows or not rows[0]:
        return 0
    dom = QQ if p is None else GF(p)
    return DomainMatrix([[dom(x) for x in r] for r in rows], (len(rows), len(rows[0])), dom).rank()


def betti(faces, p=None):
    """Reduced Betti numbers (degree -1 first) by dense elimination."""
    by_size = {}
    for f in faces:
        by_size.setdefault(len(f), []).append(tuple(sorted(f)))
    top = max(by_size)
    layers = [sorted(by_size.get(c, [])) for c in range(top + 1)]
    ranks = []
    for c in range(1, top + 1):
        rows, cols = layers[c - 1], layers[c]
        pos = {r: i for i, r in enumerate(rows)}
        m = [[0] * len(cols) for _ in rows]
        for j, col in enumerate(cols):
            for k in range(len(col)):
                m[pos[col[:k] + col[k + 1:]]][j] = (-1) ** k
        ranks.append(rank(m, p))
    ranks.append(0)
    out = []
    for c, layer in enumerate(layers):
        out.append(len(layer) - (ranks[c - 1] if c else 0) - ranks[c])
    return tuple(out)


def is_cm(faces, p=None):
    """Reisner's criterion straight from the definition."""
    for f in faces:
        lk = link_faces(faces, f)
        b = betti(lk, p)
        if any(b[i + 1] for i in range(-1, dimension(lk))):
            return False
    return True


def is_pure(faces):
    facets = [f for f in faces if not any(f < g for g in faces)]
    return len({len(f) for f in facets}) == 1


def is_cm_t(faces, t, p=None):
    if not is_pure(faces):
        return False
    return all(is_cm(link_faces(faces, f), p) for f in faces if len(f) >= t)


def min_cm_t(faces, p=None):
    if not is_pure(faces):
        return None
    t = 0
    while not is_cm_t(faces, t, p):
        t += 1
    return t


def maximal_independent_sets(vertices, edges):
    edges = {frozenset(e) for e in edges}
    indep = [frozenset(s) for s in powerset(vertices)
             if not any(frozenset(p) in edges for p in combinations(s, 2))]
    return {s for s in indep if not any(s < t for t in indep)}


def minimal_nonfaces(vertices, faces):
    non = [frozenset(s) for s in powerset(vertices) if frozenset(s) not in faces]
    return {s for s in non if not any(t < s for t in non)}
