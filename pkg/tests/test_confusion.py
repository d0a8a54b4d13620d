import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_counts
from visemap import (ConfusionMatrix, DuplicatePhoneme, ParseError, ShapeError, parse_confusion,
                     serialize_confusion, to_graph, true_positive_only)
from visemap.confusion import load_confusion


def test_minimal_csv_is_diagonal():
    m = parse_confusion(",p,b\np,5,0\nb,0,7\n")
    assert m.labels == ("p", "b")
    assert m.count("p", "p") == 5 and m.count("b", "b") == 7
    assert m.count("p", "b") == 0 == m.count("b", "p")


def test_single_cell_gives_one_edge():
    m = parse_confusion(",p,b,m\np,1,2,0\nb,0,1,0\nm,0,0,1\n")
    g = to_graph(m)
    assert g.edges == [("b", "p")]
    assert g.weight("p", "b") == 2


def test_one_direction_is_enough():
    m = ConfusionMatrix(("a", "b"), [[0, 1], [0, 0]])
    assert to_graph(m).weight("a", "b") == 1


def test_symmetrised_weight():
    m = ConfusionMatrix(("a", "b"), [[0, 3], [2, 0]])
    assert to_graph(m).weight("b", "a") == 5


def test_edgeless_and_complete():
    assert to_graph(ConfusionMatrix(("a", "b", "c"), np.eye(3, dtype=int))).edges == []
    g = to_graph(ConfusionMatrix(tuple("abcd"), np.ones((4, 4), dtype=int)))
    assert len(g.edges) == 6


@pytest.mark.parametrize("text,error", [
    (",p,b\np,1,0\n", ShapeError),
    (",p,b,m\np,1,0,0\nb,0,1,0\n", ShapeError),
    (",p,p\np,1,0\np,0,1\n", DuplicatePhoneme),
    (",p,b\np,1,x\nb,0,1\n", ParseError),
    (",p,b\np,1,-1\nb,0,1\n", ParseError),
    (",p,b\nb,1,0\np,0,1\n", ParseError),
])
def test_bad_csv(text, error):
    with pytest.raises(error):
        parse_confusion(text)


def test_non_square_array():
    with pytest.raises(ShapeError):
        ConfusionMatrix(("a", "b"), np.zeros((2, 3), dtype=int))


def test_true_positive_only():
    assert true_positive_only(ConfusionMatrix(tuple("abc"), np.eye(3, dtype=int))) == {"a", "b", "c"}
    m = ConfusionMatrix(tuple("abc"), [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert true_positive_only(m) == {"c"}
    unseen = ConfusionMatrix(tuple("ab"), [[0, 0], [0, 4]])
    assert true_positive_only(unseen) == {"b"}


def test_canonical_sorts_labels():
    m = ConfusionMatrix(("b", "a"), [[1, 2], [3, 4]])
    c = m.canonical()
    assert c.labels == ("a", "b")
    assert c.count("b", "a") == 2 and c.count("a", "b") == 3


def test_counts_are_read_only():
    m = ConfusionMatrix(("a",), [[1]])
    with pytest.raises(ValueError):
        m.counts[0, 0] = 2


def test_load_file(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text(",a,b\na,1,0\nb,2,1\n", encoding="utf-8")
    m = load_confusion(path)
    assert m.name == str(path)
    assert m.count("b", "a") == 2


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 9), density=st.sampled_from([0.1, 0.3, 0.6]), seed=st.integers(0, 10**6))
def test_csv_round_trip_and_graph_oracle(n, density, seed):
    rng = np.random.default_rng(seed)
    labels = tuple(f"x{i}" for i in range(n))
    m = ConfusionMatrix(labels, random_counts(rng, n, density))
    assert parse_confusion(serialize_confusion(m)) == m
    g = to_graph(m)
    expected = sorted((a, b) for i, a in enumerate(labels) for b in labels[i + 1:]
                      if m.count(a, b) + m.count(b, a) > 0)
    assert g.edges == sorted(tuple(sorted(e)) for e in expected)
