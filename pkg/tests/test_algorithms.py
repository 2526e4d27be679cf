from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from semimatch import Edge, Graph, Matching, collect_metrics, open_source
from semimatch.algorithms import (
    ALGORITHMS,
    ImproveMachine,
    InvariantViolation,
    PassRecord,
    greedy_augment,
    greedy_maximal_matching,
    guarantee,
    improve_matching,
    multi_pass,
    pass_caps,
    run_algorithm,
    semi_matching,
    three_pass_bipartite,
    three_pass_general,
    three_pass_triangle_free,
    two_pass_further,
    two_pass_improved,
    two_pass_simple,
)
from semimatch.algorithms.greedy import greedy_pass
from semimatch.algorithms.registry import REQUIRES, expected_passes
from semimatch.generators import path_union_instance, tight_instance
from semimatch.graph import AugmentationError, LabelMap, make_edge
from semimatch.harness.sweep import check_trial
from semimatch.oracle import max_matching, satisfies_class

from conftest import class_graphs, source_of


# --- a six-pair instance with ten support edges, cap 2 on the free side ---

def support_figure():
    """Base pairs u1v1..u6v6; free vertices l1, l2, l3 (left) and r1, r2, r3 (right).

    Support edges in arrival order. Augmenting u5v5 (through l1 and r1) blocks
    u4v4 (needs r1) and u6v6 (needs l1); u1v1 stays augmentable via l3 and r2.
    """
    lab = LabelMap()
    base = [make_edge(lab(f"u{i}"), lab(f"v{i}")) for i in range(1, 7)]
    pairs = [("u6", "l1"), ("u5", "l1"), ("u4", "l2"), ("u3", "l2"), ("v4", "r1"),
             ("v5", "r1"), ("v1", "r2"), ("u2", "r2"), ("v6", "r3"), ("l3", "u1")]
    support = [make_edge(lab(a), lab(b)) for a, b in pairs]
    return lab, base, support


def test_support_figure_is_triangle_free():
    lab, base, support = support_figure()
    assert satisfies_class(Graph(lab.n, tuple(base + support), "triangle-free"))


def test_semi_matching_keeps_all_ten_support_edges():
    lab, base, support = support_figure()
    M0 = greedy_maximal_matching(base + support, lab.n)
    assert set(M0.edges()) == set(base)
    matched = sorted(M0.vertices())
    free = [v for v in range(lab.n) if v not in M0.vertices()]
    S = semi_matching(base + support, 2, matched, free, lab.n)
    assert len(S) == 10
    assert set(S.edges) == set(support)


def test_greedy_augment_loses_two_when_u5v5_goes_first():
    lab, base, support = support_figure()
    M0 = greedy_maximal_matching(base, lab.n)
    matched = sorted(M0.vertices())
    free = [v for v in range(lab.n) if v not in M0.vertices()]
    S = semi_matching(support, 2, matched, free, lab.n)
    u5v5 = make_edge(lab("u5"), lab("v5"))
    order = [u5v5] + [e for e in base if e != u5v5]
    M = greedy_augment(M0, S, order)
    assert len(M) - len(M0) == 2
    assert make_edge(lab("u4"), lab("v4")) in M.edges()
    assert make_edge(lab("u6"), lab("v6")) in M.edges()
    # starting from u1 instead, three augmentations are possible
    best = greedy_augment(M0, S, [base[0], base[3], base[5], base[1], base[2], base[4]])
    assert len(best) - len(M0) == 3


def test_two_pass_improved_on_support_figure():
    # hand trace with caps (2, 1): v4-r1 closes u4v4 through l2, v6-r3 closes
    # u6v6 through l1, l3-u1 closes u1v1 through r2; v5-r1 is ignored
    lab, base, support = support_figure()
    g = Graph(lab.n, tuple(base + support), "triangle-free")
    M = two_pass_improved(open_source(g), checked=True)
    name = {v: k for k, v in lab.ids.items()}
    got = {frozenset((name[u], name[v])) for u, v in M.edges()}
    want = {frozenset(p) for p in [("u2", "v2"), ("u3", "v3"), ("u5", "v5"),
                                   ("r1", "v4"), ("u4", "l2"), ("r3", "v6"),
                                   ("u6", "l1"), ("l3", "u1"), ("v1", "r2")]}
    assert got == want


# --- greedy ---

@pytest.mark.parametrize("stream, want", [
    ([(0, 1), (1, 2), (2, 3)], {(0, 1), (2, 3)}),
    ([(0, 1), (0, 2), (0, 3)], {(0, 1)}),
    ([], set()),
])
def test_greedy_examples(stream, want):
    M = greedy_maximal_matching(stream, 4)
    assert set(M.edges()) == {Edge(*e) for e in want}


@given(class_graphs())
def test_greedy_is_maximal(g):
    M = greedy_maximal_matching(g.edges, g.n)
    assert all(M.covers(u) or M.covers(v) for u, v in g.edges)


# --- semi-matching and greedy augmentation ---

def test_semi_matching_free_side_cap():
    S = semi_matching([(0, 9), (1, 9), (2, 9)], 2, {0, 1, 2}, {9}, 10)
    assert set(S.edges) == {Edge(0, 9), Edge(1, 9)}


def test_semi_matching_matched_side_cap_one():
    S = semi_matching([(0, 8), (0, 9)], 2, {0}, {8, 9}, 10)
    assert set(S.edges) == {Edge(0, 8)}


def test_semi_matching_rejects_overlap():
    with pytest.raises(ValueError):
        semi_matching([], 2, {0, 1}, {1, 2}, 3)


def test_greedy_augment_examples():
    M0 = Matching(4, [(1, 2)])
    S = semi_matching([(0, 1), (2, 3)], 3, {1, 2}, {0, 3}, 4)
    assert set(greedy_augment(M0, S).edges()) == {Edge(0, 1), Edge(2, 3)}
    S = semi_matching([(0, 1)], 3, {1, 2}, {0, 3}, 4)
    assert set(greedy_augment(M0, S).edges()) == {Edge(1, 2)}


# --- two-pass simple ---

def test_two_pass_simple_single_edge():
    assert len(two_pass_simple(source_of([(0, 1)], 2, "triangle-free"))) == 1


def test_two_pass_simple_p4_middle_first(p4):
    assert len(two_pass_simple(open_source(p4), checked=True)) == 2


# --- improve-matching ---

def test_improve_forced_trace_caps_2_1():
    a, u, v, b = 0, 1, 2, 3
    M0 = Matching(4, [(u, v)])
    M = improve_matching([(a, u), (v, b)], M0, 2, 1, checked=True)
    assert set(M.edges()) == {Edge(a, u), Edge(v, b)}
    assert set(M0.edges()) == {Edge(u, v)}


def test_improve_general_triangle_then_augment():
    a, u, v, b = 0, 1, 2, 3
    M0 = Matching(4, [(u, v)])
    rec = PassRecord(M0.copy(), 4, 2, False)
    M = improve_matching([(b, u), (b, v), (a, u)], M0, 4, 2, checked=True, record=rec)
    assert set(M.edges()) == {Edge(a, u), Edge(v, b)}
    kinds = [ev.kind for ev in rec.events]
    assert kinds == ["added", "added", "augmented"]


def test_strict_gate_blocks_saturated_vertex():
    # x=0 collects two support edges to pairs (1,2) and (3,4); a third pair
    # (5,6) has support edge 6-7, so x-5 would close x-5-6-7 but deg_S(x)=2
    x = 0
    M0 = Matching(8, [(1, 2), (3, 4), (5, 6)])
    stream = [(x, 1), (x, 3), (6, 7), (x, 5)]
    loose = improve_matching(stream, M0, 2, 1)
    strict = improve_matching(stream, M0, 2, 1, strict=True)
    assert len(loose) == 4
    assert len(strict) == 3


def test_single_cap_on_triangle_still_valid():
    # base 0-2, free 1 adjacent to both: outside the proven regime, checked
    # mode flags the shared neighbour but the output stays a valid matching
    stream = [(0, 2), (1, 2), (0, 1)]
    M = two_pass_improved(source_of(stream, 3, "triangle-free"))
    assert set(M.edges()) == {Edge(0, 2)}
    with pytest.raises(InvariantViolation):
        two_pass_improved(source_of(stream, 3, "triangle-free"), checked=True)


def test_improve_rejects_bad_caps():
    with pytest.raises(ValueError):
        ImproveMachine(Matching(2), 2, 2)
    with pytest.raises(ValueError):
        ImproveMachine(Matching(2), 3, 0)


def test_improve_detects_non_maximal_base():
    with pytest.raises(InvariantViolation):
        improve_matching([(0, 1)], Matching(4, [(2, 3)]), 2, 1)


def test_duplicate_edges_are_harmless():
    a, u, v, b = 0, 1, 2, 3
    M0 = Matching(4, [(u, v)])
    M = improve_matching([(a, u), (a, u), (v, b), (v, b), (a, u)], M0, 2, 1, checked=True)
    assert set(M.edges()) == {Edge(a, u), Edge(v, b)}


def _drop_guard(self, v, x):
    nbrs = self.support.nbrs[v]
    return nbrs[0] if nbrs else -1


def test_mutation_without_triangle_guard_is_caught(monkeypatch):
    # base u-v; x joins both ends, closing a triangle
    x, u, v = 0, 1, 2
    stream = [(u, v), (x, v), (x, u)]
    assert len(two_pass_improved(source_of(stream, 3), checked=True)) == 1
    monkeypatch.setattr(ImproveMachine, "support_partner", _drop_guard)
    with pytest.raises(AugmentationError):
        two_pass_improved(source_of(stream, 3), checked=True)


def test_mutation_shows_up_in_sweep_checks(monkeypatch):
    from semimatch.harness.sweep import sweep_instance
    monkeypatch.setattr(ImproveMachine, "support_partner", _drop_guard)
    failures = 0
    for t in range(40):
        g, label = sweep_instance("general", t, seed=3)
        failures += not check_trial(g, label).ok
    assert failures > 0


# --- the two-pass variants ---

def test_two_pass_further_on_optimal_base():
    # a perfect matching first: nothing can augment
    stream = [(0, 1), (2, 3), (1, 2), (0, 3)]
    src = source_of(stream, 4, "triangle-free")
    assert set(two_pass_further(src, checked=True).edges()) == {Edge(0, 1), Edge(2, 3)}
    assert collect_metrics(src).passes == 2


def test_two_pass_further_records_both_machines():
    g, ordering = path_union_instance(1, {3: 2, 5: 1}, seed=2)
    records = []
    M = two_pass_further(open_source(g), checked=True, records=records)
    assert [(r.lambda_u, r.lambda_m, r.strict) for r in records] == [(2, 1, True), (3, 1, True)]
    assert len(M) == max(len(r.result) for r in records)


def test_two_pass_further_general_single_machine():
    records = []
    two_pass_further(source_of([(0, 1), (1, 2), (2, 3)], 4), records=records)
    assert [(r.lambda_u, r.lambda_m) for r in records] == [(4, 2)]


# --- three-pass ---

def test_three_pass_bipartite_tight():
    ti = tight_instance("alg1")
    assert len(three_pass_bipartite(ti.source(), checked=True)) == 3


def test_three_pass_bipartite_perfect_first():
    sides = ("A", "B", "A", "B")
    src = source_of([(0, 1), (2, 3), (1, 2)], 4, "bipartite", sides)
    assert set(three_pass_bipartite(src).edges()) == {Edge(0, 1), Edge(2, 3)}


def test_three_pass_bipartite_needs_sides():
    from semimatch.graph import GraphError
    src = open_source([(0, 1)], 2, class_label="triangle-free")
    with pytest.raises(GraphError):
        three_pass_bipartite(src)


def test_three_pass_bipartite_augments_path():
    # P4 with the middle edge first: a'=1 in A(M0)? sides make 1 the A end
    sides = ("B", "A", "B", "A")
    src = source_of([(1, 2), (0, 1), (2, 3)], 4, "bipartite", sides)
    assert len(three_pass_bipartite(src, checked=True)) == 2


def test_three_pass_triangle_free_tight():
    ti = tight_instance("alg4")
    assert len(three_pass_triangle_free(ti.source(), checked=True)) == 3


def test_three_pass_triangle_free_first_branch():
    # three disjoint P4s streamed middle first: the second pass closes all of
    # them and the third pass has no edges between pointers and free vertices
    g, _ = path_union_instance(0, {3: 3}, seed=5)
    M = three_pass_triangle_free(open_source(g), checked=True)
    assert len(M) == 6


def test_three_pass_general_small():
    assert len(three_pass_general(source_of([(0, 1)], 2))) == 1
    records = []
    src = source_of([(0, 1), (2, 3), (1, 2)], 4)
    M = three_pass_general(src, checked=True, records=records)
    assert len(M) == 2
    assert all(len(r.result) == 2 for r in records)
    assert [(r.lambda_u, r.lambda_m) for r in records] == [(4, 2), (5, 2)]


# --- multi-pass ---

def test_multi_pass_collapses_to_two_pass():
    g, _ = path_union_instance(2, {3: 3, 5: 2}, seed=11)
    g = Graph(g.n, g.edges, "triangle-free")
    a = multi_pass(open_source(g), Fraction(1, 3))
    b = two_pass_improved(open_source(g))
    assert set(a.edges()) == set(b.edges())


def test_multi_pass_general_caps():
    assert pass_caps(14, False) == [(i, 2) for i in range(3, 16)]
    records = []
    src = source_of([(0, 1), (1, 2), (2, 3)], 4)
    multi_pass(src, 0.1, records=records)
    assert [(r.lambda_u, r.lambda_m) for r in records] == [(i, 2) for i in range(3, 16)]
    assert collect_metrics(src).passes == 14


def test_multi_pass_rejects_nonpositive_epsilon():
    with pytest.raises(ValueError):
        multi_pass(source_of([(0, 1)], 2), 0)


def test_multi_pass_sizes_never_shrink():
    g, _ = path_union_instance(1, {3: 4, 5: 2, 7: 1}, seed=8)
    records = []
    multi_pass(open_source(g), Fraction(1, 20), records=records)
    sizes = [len(records[0].M0)] + [len(r.result) for r in records]
    assert sizes == sorted(sizes)


# --- properties over random instances ---

def _eps(alg):
    return Fraction(1, 10) if alg == "multi-pass" else None


@given(class_graphs(), st.sampled_from(sorted(ALGORITHMS)))
def test_every_algorithm_valid_and_within_guarantee(g, alg):
    allowed = REQUIRES.get(alg)
    if allowed and g.class_label not in allowed:
        return
    src = open_source(g)
    M = run_algorithm(alg, src, _eps(alg), checked=True)
    assert M.is_valid()
    assert set(M.edges()) <= set(g.edges)
    opt = len(max_matching(g))
    bound = guarantee(alg, g.class_label, _eps(alg))
    if bound is not None and opt:
        assert Fraction(len(M), opt) >= bound
    metrics = collect_metrics(src)
    assert metrics.passes == expected_passes(alg, g.class_label, _eps(alg))
    assert metrics.peak_stored_edges <= 3 * g.n


@given(class_graphs(), st.sampled_from([(2, 1), (3, 1), (4, 2), (5, 2)]), st.booleans())
def test_improve_caps_and_growth_per_arrival(g, caps, strict):
    lu, lm = caps
    if lm == 1 and g.class_label == "general":
        g = Graph(g.n, g.edges, "general")
        if not satisfies_class(g, "triangle-free"):
            return
    M0, _ = greedy_pass(g.edges, g.n)
    machine = ImproveMachine(M0, lu, lm, strict, checked=True)
    size = len(M0)
    for p, q in g.edges:
        machine.feed(p, q)
        assert len(machine.M) >= size
        size = len(machine.M)
        machine.support.check_caps(M0)
    assert machine.finish().is_valid()
    assert set(M0.edges()) == set(greedy_pass(g.edges, g.n)[0].edges())
