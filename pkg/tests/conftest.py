import numpy as np
import pytest
from hypothesis import settings, strategies as st

from semimatch import Graph, Matching, open_source
from semimatch.generators import random_instance

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def source_of(pairs, n, class_label="general", sides=None):
    return open_source(list(pairs), n, class_label=class_label, sides=sides)


def matching(n, pairs):
    return Matching(n, pairs)


@st.composite
def class_graphs(draw, classes=("bipartite", "triangle-free", "general"), max_n=14):
    cls = draw(st.sampled_from(classes))
    n = draw(st.integers(2, max_n))
    density = draw(st.floats(0.1, 0.9))
    seed = draw(st.integers(0, 2**31 - 1))
    g = random_instance(n, density, cls, seed)
    perm = np.random.default_rng(seed).permutation(g.m).tolist()
    return g.with_edges([g.edges[j] for j in perm])


@pytest.fixture
def p4():
    # path 0-1-2-3 streamed middle edge first
    return Graph(4, ((1, 2), (0, 1), (2, 3)), "bipartite", ("A", "B", "A", "B"))


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
