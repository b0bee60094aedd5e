"""Smoke tests for the litnet python bindings."""

import math

import pytest

import litnet


def test_poisson_primitives():
    assert litnet.poisson_lambda(1000, 1000, 1000000) == pytest.approx(1.0)
    assert litnet.poisson_pmf(1.0, 1) == pytest.approx(math.exp(-1.0))
    assert litnet.poisson_threshold(1.0, 0.95) == 4
    assert litnet.poisson_threshold(0.59, 0.99) == 4
    assert litnet.poisson_threshold(3.1e-5, 0.95) == 1
    with pytest.raises(ValueError):
        litnet.poisson_threshold(1.0, 1.5)


def test_pearson():
    assert litnet.pearson([1, 2, 3, 4], [1, 3, 2, 4]) == pytest.approx(0.8)
    assert litnet.pearson([1, 2, 3], [5, 3, 1]) == pytest.approx(-1.0)


def test_edge_universe_size():
    assert litnet.edge_universe_size(3563) == 6345703


def test_index_and_networks():
    abstracts = [
        ("d1", "Insulin binds MAPK."),
        ("d2", "MAPK only."),
        ("d3", "nothing relevant"),
    ]
    lexicon = [("insulin", ["insulin"]), ("MAPK", ["MAPK"])]
    index = litnet.build_index_from_records(abstracts, lexicon)
    assert index.total_abstracts == 3
    assert index.occurrence_count("insulin") == 1
    assert index.occurrence_count("MAPK") == 2
    assert litnet.cooccurrence_count(index, "insulin", "MAPK") == 1

    table = litnet.build_cooccurrence_table(index)
    assert len(table.records) == 1
    rec = table.records[0]
    assert (rec.a, rec.b, rec.c_ab) == ("MAPK", "insulin", 1)
    assert rec.lambda_ == pytest.approx(2 / 3)

    one = litnet.k_mention_network(table, 1)
    assert len(one) == 1
    assert one.contains("insulin", "MAPK")
    # lambda = 2/3 needs 3 mentions at the 95th percentile, so c_ab = 1 is out
    assert len(litnet.poisson_network(table, 0.95)) == 0
    assert len(litnet.k_mention_network(table, 5)) == 0


def test_sif_roundtrip(tmp_path):
    edges = litnet.EdgeSet(4)
    edges.insert("b", "a")
    edges.insert("c", "d")
    path = tmp_path / "net.sif"
    litnet.write_sif(edges, str(path))
    assert path.read_text() == "a\tpp\tb\nc\tpp\td\n"
    assert litnet.read_sif(str(path)) == edges


def test_sweep_and_hypotheses():
    edges = [
        ("g1", "g2", 0.76),
        ("g1", "g3", 0.80),
        ("g2", "g3", -0.90),
        ("g3", "g4", 0.95),
        ("g4", "g5", 1.00),
    ]
    reference = litnet.EdgeSet(5)
    reference.insert("g2", "g3")

    rows = litnet.threshold_sweep(edges, reference)
    assert len(rows) == 26
    threshold, n, n_ref, pct = rows[10]
    assert threshold == pytest.approx(0.85)
    assert (n, n_ref) == (3, 1)
    assert pct == pytest.approx(100.0 / 3.0)
    assert rows[-1][1] == 1  # the |r| = 1.00 pair survives to the last bucket

    hypotheses = litnet.hypothesis_set(edges, reference)
    assert len(hypotheses) == 4
    assert hypotheses[0][:2] == ("g4", "g5")

    both = litnet.intersect_networks([edges, edges[:2]])
    assert len(both) == 2
