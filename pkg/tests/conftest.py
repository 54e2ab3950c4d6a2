import networkx as nx
import pytest
from hypothesis import strategies as st

from egkeyring.graph import Graph, build_graph

ACCEPTANCE_RESULTS: list[str] = []


def to_nx(G: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return g


def all_cycles(G: Graph) -> list[list[int]]:
    """Every simple cycle of G, via networkx (independent of egkeyring)."""
    return [c for c in nx.simple_cycles(to_nx(G)) if len(c) >= 3]


def circumference(G: Graph) -> int:
    return max((len(c) for c in all_cycles(G)), default=0)


def longest_path_between(G: Graph, u: int, v: int) -> int:
    return max((len(p) - 1 for p in nx.all_simple_paths(to_nx(G), u, v)), default=-1)


@st.composite
def graphs(draw, min_n=1, max_n=8, min_density=0.0):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    p = draw(st.floats(min_value=min_density, max_value=1.0))
    mask = draw(st.lists(st.floats(0, 1), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, x in zip(pairs, mask) if x < p])


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)
