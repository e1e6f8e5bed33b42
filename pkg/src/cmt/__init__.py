"""Expansion and contraction of simplicial complexes, graphs and monomial ideals.

CM_t, Cohen-Macaulay and Buchsbaum tests rest on exact reduced homology of
links over GF(p) or the rationals.
"""

from .cm import CmReport, cm_t_recursive, is_buchsbaum, is_cm_t, is_cohen_macaulay, min_cm_t
from .contraction import (
    ContractionResult,
    check_dagger,
    contract_complex,
    contract_graph,
    verify_contraction_theorem,
    verify_purity_transfer,
    verify_round_trip,
)
from .core import (
    Monomial,
    MonomialIdeal,
    SimpleGraph,
    SimplicialComplex,
    VertexLabel,
    complex_of_ideal,
    dim,
    edge_ideal,
    faces_of_card,
    independence_complex,
    is_cone,
    is_pure,
    join,
    link,
    minimal_nonfaces,
    normalize_complex,
    stanley_reisner_ideal,
)
from .expansion import (
    expand_complex,
    expand_face,
    expand_graph,
    expand_ideal,
    expand_monomial,
    link_expansion_decompose,
    verify_expansion_theorem,
)
from .homology import GF2, QQ, FieldSpec, boundary_matrix, is_k_acyclic_below, matrix_rank, reduced_betti
from .io import parse_complex, parse_document, serialize

__version__ = "0.1.0"
