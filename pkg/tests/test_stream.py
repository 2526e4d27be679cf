import pytest
from hypothesis import given

from semimatch import Edge, GraphError, collect_metrics, measure, open_source, replay
from semimatch.algorithms import greedy, multi_pass
from semimatch.generators import random_instance
from semimatch.stream import StreamError

from conftest import class_graphs


def test_open_in_memory():
    src = open_source([(0, 1), (1, 2)], 3)
    assert src.passes_used == 0
    assert len(src) == 2


def test_open_file(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("n 4\ne 0 1\ne 1 2\ne 2 3\n")
    src = open_source(path)
    assert src.n == 4 and len(src) == 3


def test_open_rejects_out_of_range():
    with pytest.raises(GraphError, match="out of range"):
        open_source([(0, 5)], 3)


def test_open_rejects_self_loop():
    with pytest.raises(GraphError, match="self-loop"):
        open_source([(0, 1), (2, 2)], 3)


def test_replay_once():
    src = open_source([(0, 1), (1, 2)], 3)
    assert list(replay(src)) == [Edge(0, 1), Edge(1, 2)]
    assert src.passes_used == 1


def test_two_replays_identical():
    src = open_source([(2, 1), (0, 1)], 3)
    first, second = list(replay(src)), list(replay(src))
    assert first == second
    assert src.passes_used == 2


def test_empty_replay_counts_a_pass():
    src = open_source([], 3)
    assert list(replay(src)) == []
    assert src.passes_used == 1


def test_nested_replay_refused():
    src = open_source([(0, 1), (1, 2)], 3)
    outer = replay(src)
    next(outer)
    with pytest.raises(StreamError):
        next(replay(src))
    list(outer)
    assert src.passes_used == 1


def test_abandoned_replay_does_not_count():
    src = open_source([(0, 1), (1, 2)], 3)
    it = replay(src)
    next(it)
    it.close()
    assert src.passes_used == 0
    assert len(list(replay(src))) == 2


def test_greedy_metrics_linear():
    g = random_instance(12, 0.3, "general", 4)
    src = open_source(g.edges[:10], g.n)
    _, metrics = measure(greedy, src)
    assert metrics.passes == 1
    assert metrics.stream_length == 10
    assert metrics.update_ops <= 4 * 10


@pytest.mark.parametrize("label, passes", [("triangle-free", 7), ("general", 14)])
def test_multi_pass_pass_count(label, passes):
    g = random_instance(20, 0.2, label, 1)
    src = open_source(g)
    multi_pass(src, 0.1)
    assert collect_metrics(src).passes == passes


@given(class_graphs())
def test_replay_is_deterministic(g):
    src = open_source(g)
    digest = src.digest()
    a = list(replay(src))
    b = list(replay(src))
    assert a == b == list(g.edges)
    assert src.digest() == digest
