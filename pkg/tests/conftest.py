import random

import pytest
from hypothesis import strategies as st

from hyperutc.hypergraph import Hypergraph
from hyperutc.numth import k_subset_masks


@st.composite
def hypergraphs(draw, min_v=1, max_v=6, min_h=1, max_h=3):
    v = draw(st.integers(min_v, max_v))
    h = draw(st.integers(min_h, min(max_h, v)))
    masks = k_subset_masks(v, h)
    picks = draw(st.lists(st.booleans(), min_size=len(masks), max_size=len(masks)))
    return Hypergraph(v, h, frozenset(m for m, keep in zip(masks, picks) if keep))


def random_hypergraph(rng: random.Random, v: int, h: int, density: float = 0.5) -> Hypergraph:
    return Hypergraph(v, h, frozenset(m for m in k_subset_masks(v, h) if rng.random() < density))


def all_hypergraphs(v: int, h: int):
    masks = k_subset_masks(v, h)
    for bits in range(1 << len(masks)):
        yield Hypergraph(v, h, frozenset(m for i, m in enumerate(masks) if bits >> i & 1))


@pytest.fixture
def rng():
    return random.Random(1234)


CRITERIA: dict[int, tuple[str, str]] = {}



def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    n, title = marker.args
    CRITERIA[n] = (title, "PASS" if call.excinfo is None else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        title, status = CRITERIA[n]
        terminalreporter.write_line(f"{status} criterion {n:2d}: {title}")
