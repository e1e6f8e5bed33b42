import pytest
from hypothesis import strategies as st

from cmt import SimpleGraph, SimplicialComplex
from cmt.core import face_indices, maximal_sets, normalize_complex

RP2_FACETS = [
    (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
    (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6),
]


def cx(*facets):
    """Complex from facet strings like "x1x2" or lists of names."""
    out = []
    for f in facets:
        if isinstance(f, str):
            out.append(["x" + p for p in f.split("x") if p])
        else:
            out.append(list(f))
    return SimplicialComplex.from_facets(out)


@pytest.fixture
def path3():
    return cx("x1x2", "x2x3")


@pytest.fixture
def hollow_triangle():
    return cx("x1x2", "x2x3", "x1x3")


@pytest.fixture
def simplex3():
    return cx("x1x2x3")


@pytest.fixture
def two_edges():
    return SimplicialComplex.from_facets([["x1_1", "x1_2"], ["x2_1", "x2_2"]])


@pytest.fixture
def example4():
    return cx("x1x2x3", "x2x3x4", "x1x4x5", "x2x3x5")


@pytest.fixture
def rp2():
    return SimplicialComplex.from_facets([[f"v{i}" for i in f] for f in RP2_FACETS])


def graph_g2():
    # left-to-right picture: a centre, b top, c right, d bottom, e left
    return SimpleGraph.build("abcde", [("e", "a"), ("a", "c"), ("c", "d"), ("d", "e"), ("e", "b"), ("b", "c")])


def graph_g1():
    return SimpleGraph.build("abcde", [("a", "c"), ("c", "d"), ("d", "e"), ("e", "b")])


def cycle(n):
    names = [f"v{i}" for i in range(n)]
    return SimpleGraph.build(names, [(names[i], names[(i + 1) % n]) for i in range(n)])


@st.composite
def complexes(draw, max_vertices=5, max_facets=5):
    """Ghost-free complexes on 1..max_vertices vertices."""
    n = draw(st.integers(1, max_vertices))
    raw = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_facets))
    facets = maximal_sets(raw)
    support = 0
    for f in facets:
        support |= f
    idx = face_indices(support)
    remap = {v: i for i, v in enumerate(idx)}
    masks = [sum(1 << remap[v] for v in face_indices(f)) for f in facets]
    return normalize_complex(masks, [f"x{i + 1}" for i in range(len(idx))])


# ---------------------------------------------------------------- acceptance

_CRITERIA = {}


def pytest_runtest_logreport(report):
    marker = getattr(report, "acceptance_number", None)
    if marker is None or report.when not in ("call", "setup"):
        return
    if report.when == "setup" and report.passed:
        return
    _CRITERIA.setdefault(marker, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("acceptance")
    if m is not None:
        rep.acceptance_number = m.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        outcomes = _CRITERIA[number]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}")
