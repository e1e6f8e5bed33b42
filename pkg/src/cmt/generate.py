"""Instance generators for sweeps: complexes, graphs, ideals and vectors.

Exhaustive complexes are produced up to relabeling: antichains of subsets of
an n-set are grown one facet at a time and deduplicated by a canonical form
(the lexicographically least sorted facet tuple over all n! relabelings).
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

import networkx as nx
import numpy as np

from .core import (
    Monomial,
    MonomialIdeal,
    SimpleGraph,
    SimplicialComplex,
    VertexLabel,
    face_indices,
    maximal_sets,
    normalize_complex,
)

MAX_EXHAUSTIVE_COMPLEX = 6


def _labels(n: int, prefix: str = "x") -> tuple[VertexLabel, ...]:
    return tuple(VertexLabel(f"{prefix}{i + 1}") for i in range(n))


@lru_cache(maxsize=None)
def _perm_table(n: int) -> np.ndarray:
    """Row p maps each subset bitmask to its image under permutation p."""
    perms = list(permutations(range(n)))
    masks = np.arange(1 << n, dtype=np.int64)
    table = np.zeros((len(perms), 1 << n), dtype=np.int64)
    for row, perm in enumerate(perms):
        img = np.zeros_like(masks)
        for i, j in enumerate(perm):
            img |= ((masks >> i) & 1) << j
        table[row] = img
    return table


def canonical_form(facets: tuple[int, ...], n: int) -> tuple[int, ...]:
    if not facets:
        return ()
    images = np.sort(_perm_table(n)[:, list(facets)], axis=1)
    best = images[np.lexsort(images.T[::-1])[0]]
    return tuple(int(x) for x in best)


@lru_cache(maxsize=None)
def antichain_classes(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical antichains of subsets of an n-set, one per relabeling class.

    Includes the empty antichain (void complex).  For n = 6 there are 16353.
    """
    if n > MAX_EXHAUSTIVE_COMPLEX:
        raise ValueError(f"exhaustive complex enumeration is limited to {MAX_EXHAUSTIVE_COMPLEX} vertices")
    universe = range(1 << n)
    seen = {()}
    frontier = [()]
    while frontier:
        nxt = []
        for ac in frontier:
            for s in universe:
                if s in ac or any(s & ~f == 0 or f & ~s == 0 for f in ac):
                    continue
                key = canonical_form(tuple(sorted(ac + (s,))), n)
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return tuple(sorted(seen, key=lambda a: (len(a), a)))


def _strip_ghosts(facets: tuple[int, ...]) -> SimplicialComplex:
    support = 0
    for f in facets:
        support |= f
    idx = face_indices(support)
    remap = {v: i for i, v in enumerate(idx)}
    out = []
    for f in facets:
        m = 0
        for v in face_indices(f):
            m |= 1 << remap[v]
        out.append(m)
    return normalize_complex(out, _labels(len(idx)))


def complexes_up_to_iso(max_vertices: int, pure_only: bool = False) -> list[SimplicialComplex]:
    """Every complex on at most ``max_vertices`` vertices, once per isomorphism type.

    Complexes carry no ghost vertices and use labels x1..xm; ``{∅}`` is included.
    """
    out = []
    for ac in antichain_classes(max_vertices):
        if not ac:
            continue
        if pure_only and len({bin(f).count("1") for f in ac}) != 1:
            continue
        out.append(_strip_ghosts(ac))
    return out


def random_complex(rng: random.Random, max_vertices: int, max_facets: int = 6) -> SimplicialComplex:
    n = rng.randint(1, max_vertices)
    raw = [rng.randrange(1, 1 << n) for _ in range(rng.randint(1, max_facets))]
    return _strip_ghosts(tuple(maximal_sets(raw)))


def alphas(n: int, entry_max: int, total_max: int | None = None) -> Iterator[tuple[int, ...]]:
    """All vectors in {1..entry_max}^n, optionally with sum <= total_max."""
    for a in product(range(1, entry_max + 1), repeat=n):
        if total_max is None or sum(a) <= total_max:
            yield a


def graphs_up_to_iso(max_vertices: int) -> list[SimpleGraph]:
    """All simple graphs on 1..max_vertices vertices up to isomorphism (max 7)."""
    if max_vertices > 7:
        raise ValueError("the graph atlas covers at most 7 vertices")
    out = []
    for g in nx.graph_atlas_g():
        if 1 <= g.number_of_nodes() <= max_vertices:
            out.append(SimpleGraph(_labels(g.number_of_nodes()),
                                   frozenset((min(a, b), max(a, b)) for a, b in g.edges())))
    return out


def random_ideal(rng: random.Random, n_vars: int, max_exp: int, max_gens: int = 4) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        exps = {i: rng.randint(0, max_exp) for i in range(n_vars)}
        if not any(exps.values()):
            exps[rng.randrange(n_vars)] = 1
        gens.append(Monomial.from_dict(exps))
    return MonomialIdeal.build(_labels(n_vars), gens)
