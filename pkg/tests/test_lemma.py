import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from egkeyring.closure import (ClosureFamily, ClosureSet, close_under_paths, empty_family,
                               family_violations)
from egkeyring.cycles import find_long_cycle, is_cycle
from egkeyring.errors import InternalInvariantError, NotDenseError, ParameterRangeError
from egkeyring.generators import (clique, cycle, cycles_joined_by_edge, disjoint_union,
                                  figure_eight, gen_random_dense)
from egkeyring.graph import build_graph, is_dense
from egkeyring.lemma import (LemmaTrace, build_residual_closures, contract, contraction_round,
                             find_heavy_cycle, grow_family, heavy_vertex_scan, lift_cycle)

C6 = tuple(range(6))
C6B = tuple(range(6, 12))


def family_of(G, k, *vertex_sets):
    return ClosureFamily(tuple(ClosureSet(tuple(vs), tuple(vs), G) for vs in vertex_sets), k, G)


def test_residual_closures_examples():
    G = disjoint_union(cycle(6), cycle(6))
    fam = build_residual_closures(G, 6, empty_family(G, 6))
    assert [m.vertices for m in fam] == [C6, C6B]
    fam = build_residual_closures(clique(7), 6, empty_family(clique(7), 6))
    assert [m.vertices for m in fam] == [tuple(range(7))]
    assert len(build_residual_closures(cycle(5), 6, empty_family(cycle(5), 6))) == 0


def test_heavy_scan_examples():
    K7 = clique(7)
    assert heavy_vertex_scan(K7, 6, family_of(K7, 6, range(7))) == (0, 0)
    G = disjoint_union(cycle(6), cycle(6))
    assert heavy_vertex_scan(G, 6, family_of(G, 6, C6, C6B)) is None
    G = build_graph(7, list(clique(6).edges) + [(0, 6)])
    assert heavy_vertex_scan(G, 6, family_of(G, 6, range(6))) == (0, 0)


def test_contract_two_joined_cycles():
    G = cycles_joined_by_edge(6, 6)
    cg = contract(G, 6, family_of(G, 6, C6, C6B))
    assert (cg.m, cg.residual_count) == (2, 0)
    e1, e2, e3 = cg.edge_classes()
    assert e1 == [(0, 1)] and e2 == [] and e3 == []
    assert cg.provenance[(0, 1)] == (0, 6)


def test_contract_pendant():
    G = build_graph(7, list(cycle(6).edges) + [(0, 6)])
    cg = contract(G, 6, family_of(G, 6, C6))
    assert cg.plain == (6,)
    assert cg.edge_classes() == ([], [(0, 1)], [])


def test_contract_with_outside_edge():
    base = cycles_joined_by_edge(6, 6)
    G = build_graph(14, list(base.edges) + [(12, 13)])
    cg = contract(G, 6, family_of(G, 6, C6, C6B))
    e1, e2, e3 = cg.edge_classes()
    assert e1 == [(0, 1)] and e2 == [] and e3 == [(2, 3)]
    assert cg.provenance[(2, 3)] == (12, 13)
    assert cg.graph.n == cg.m + cg.residual_count == 4


def test_contract_rejects_duplicate_provenance():
    G = build_graph(12, list(cycles_joined_by_edge(6, 6).edges) + [(3, 9)])
    with pytest.raises(InternalInvariantError):
        contract(G, 6, family_of(G, 6, C6, C6B))


def test_lift_figure_eight():
    G = figure_eight(6, 6)
    fam = family_of(G, 6, C6)
    cg = contract(G, 6, fam)
    c = find_long_cycle(cg.graph, 6)
    assert c == (0, 1, 2, 3, 4, 5)
    assert lift_cycle(G, fam, cg, c) == (0, 6, 7, 8, 9, 10)


def test_lift_with_distinct_entry_and_exit():
    # two hexagons linked by the chord 3-9 and the detour 0-12-13-6
    G = build_graph(14, list(cycle(6).edges) + [(6 + u, 6 + v) for u, v in cycle(6).edges]
                    + [(0, 12), (12, 13), (13, 6), (3, 9)])
    fam = family_of(G, 6, C6, C6B)
    assert family_violations(G, fam) == []
    cg = contract(G, 6, fam)
    lifted = lift_cycle(G, fam, cg, (0, 2, 3, 1))
    assert lifted == (3, 2, 1, 0, 12, 13, 6, 7, 8, 9)
    assert is_cycle(G, lifted) and len(lifted) >= 6
    assert not any(set(lifted) <= set(m.vertices) for m in fam)


def test_contraction_round_merges_members():
    # hexagons 0..5 and 6..11 joined by 0-6; a K5 on 12..16 hangs between them
    edges = list(cycles_joined_by_edge(6, 6).edges)
    edges += [(12 + u, 12 + v) for u, v in clique(5).edges] + [(0, 12), (6, 16)]
    G = build_graph(17, edges)
    fam = build_residual_closures(G, 6, empty_family(G, 6))
    assert [m.vertices for m in fam] == [C6, C6B]
    assert heavy_vertex_scan(G, 6, fam) is None
    trace = LemmaTrace()
    grown = contraction_round(G, 6, fam, trace=trace)
    assert [m.vertices for m in grown] == [tuple(range(17))]
    (lifted,) = trace.lifted
    assert is_cycle(G, lifted) and len(lifted) >= 6
    assert lifted[:3] == (0, 6, 16)  # each supernode collapses to its attachment vertex
    assert not trace.contractions[0].dense_case
    assert trace.contractions[0].violations() == []


def test_counting_chain_on_a_dense_graph():
    # three K7s and a hexagon; a family holding just the hexagon has no heavy vertex
    G = disjoint_union(cycle(6), 7, 7, 7)
    assert is_dense(G, 6)
    fam = family_of(G, 6, C6)
    assert heavy_vertex_scan(G, 6, fam) is None
    trace = LemmaTrace()
    cg = contract(G, 6, fam, trace)
    check = trace.contractions[0]
    assert check.dense_case and check.violations() == []
    assert 2 * cg.graph.e > 5 * (cg.m + cg.residual_count)
    grown = contraction_round(G, 6, fam)
    assert len(grown.covered()) > len(fam.covered())


def test_find_heavy_cycle_k7():
    w = find_heavy_cycle(clique(7), 6)
    assert w.is_valid(clique(7))
    assert w.center == 0 and w.cycle == (0, 1, 2)


def test_find_heavy_cycle_errors():
    with pytest.raises(NotDenseError):
        find_heavy_cycle(cycle(5), 6)
    with pytest.raises(ParameterRangeError):
        find_heavy_cycle(clique(5), 2)
    with pytest.raises(InternalInvariantError):
        find_heavy_cycle(clique(7), 6, max_rounds=0)


def test_heavy_cycle_uses_dense_component():
    G = disjoint_union(cycle(6), clique(7))
    assert not is_dense(G, 6)
    w = find_heavy_cycle(G, 6)
    assert w.is_valid(G) and set(w.cycle) <= set(range(6, 13))


@settings(max_examples=60, deadline=None)
@given(st.integers(7, 14), st.sampled_from([3, 4, 5, 6, 7]), st.integers(0, 2**32 - 1))
def test_random_dense_witnesses(n, k, seed):
    if n <= k:
        return
    G = gen_random_dense(n, k, seed)
    trace = LemmaTrace()
    w = find_heavy_cycle(G, k, trace=trace)
    assert w.problems(G) == []
    for fam in trace.families:
        assert family_violations(trace.host, fam) == []
    for chk in trace.contractions:
        assert chk.violations() == []


def test_grow_family_on_sparse_graph():
    edges = list(cycles_joined_by_edge(6, 6).edges)
    edges += [(12 + u, 12 + v) for u, v in clique(5).edges] + [(0, 12), (6, 16)]
    G = build_graph(17, edges)
    trace = LemmaTrace()
    fam = grow_family(G, 6, trace=trace)
    assert [m.vertices for m in fam] == [tuple(range(17))]
    assert len(trace.contractions) == 2  # the second finds no long contracted cycle
    assert family_violations(G, fam) == []
