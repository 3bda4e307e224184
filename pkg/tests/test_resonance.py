import json
import random

import pytest

from kinkydaisy.cubes import BitString
from kinkydaisy.errors import NoPerfectMatching
from kinkydaisy.genesis import enumerate_shapes
from kinkydaisy.hexgrid import build_benzenoid
from kinkydaisy.resonance import (
    MatchingTable,
    build_resonance_graph,
    check_isometry,
    check_median,
    hasse_diagram,
    hasse_equals_digraph,
    is_connected,
    max_degree,
    to_dot,
    to_json_dict,
)

import oracles
from conftest import pipeline


def edge_labels(rg):
    labels = rg.table.labels
    return {tuple(sorted((str(labels[i]), str(labels[j])))) for i, j in rg.edges}


def arc_strings(rg):
    return {(str(a), str(b)) for a, b in rg.arc_labels()}


def test_benzene_is_k2(fx):
    _, table, rg = pipeline(fx["benzene"])
    assert len(table) == 2 and edge_labels(rg) == {("0", "1")}


def test_naphthalene_path(fx):
    _, _, rg = pipeline(fx["naphthalene"])
    assert edge_labels(rg) == {("00", "10"), ("00", "01")}
    assert arc_strings(rg) == {("00", "10"), ("00", "01")}


def test_anthracene_path(fx):
    _, _, rg = pipeline(fx["anthracene"])
    assert edge_labels(rg) == {("000", "100"), ("000", "010"), ("010", "011")}
    assert arc_strings(rg) == {("000", "100"), ("000", "010"), ("010", "011")}


def test_edges_are_hexagon_flips_by_set_oracle(fx):
    for name in ("naphthalene", "anthracene", "phenanthrene", "triphenylene"):
        b = fx[name]
        ord, table, rg = pipeline(b)
        sets = [frozenset(m.edge_ids()) for m in table.matchings]
        hex_sets = [frozenset(c) for c in b.hex_cycles]
        expected = {
            (i, j) for i in range(len(sets)) for j in range(i + 1, len(sets))
            if (sets[i] ^ sets[j]) in hex_sets
        }
        assert set(rg.edges) == expected
        for (i, j), pos in rg.edges.items():
            assert sets[i] ^ sets[j] == hex_sets[ord.order[pos]]


@pytest.mark.parametrize("n", range(1, 7))
def test_structural_invariants(n):
    for shape in enumerate_shapes(n):
        b = build_benzenoid(shape)
        ord, table, rg = pipeline(b)
        labels = table.labels
        assert len(rg.arcs) == len(rg.edges)
        for (i, j), pos in rg.edges.items():
            diff = labels[i].value ^ labels[j].value
            assert bin(diff).count("1") == 1
        for tail, head in rg.arcs:
            assert labels[tail] < labels[head]
        assert max_degree(rg) <= n
        assert is_connected(rg)
        assert check_isometry(rg)
        assert hasse_equals_digraph(rg)


@pytest.mark.parametrize(
    "labels, expected",
    [
        (["00", "10", "01"], {("00", "10"), ("00", "01")}),
        (["000", "100", "010", "011"], {("000", "100"), ("000", "010"), ("010", "011")}),
        (["0", "1"], {("0", "1")}),
    ],
)
def test_hasse_examples(labels, expected):
    got = hasse_diagram(BitString.parse(x) for x in labels)
    assert {(str(a), str(b)) for a, b in got} == expected == oracles.brute_hasse(labels)


def test_hasse_against_oracle_random():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 6)
        xs = {format(rng.randrange(1 << n), f"0{n}b") for _ in range(rng.randint(1, 12))}
        got = hasse_diagram(BitString.parse(x) for x in xs)
        assert {(str(a), str(b)) for a, b in got} == oracles.brute_hasse(xs)


@pytest.mark.parametrize("name", ["naphthalene", "anthracene", "phenanthrene"])
def test_hasse_equals_digraph_named(fx, name):
    assert hasse_equals_digraph(pipeline(fx[name])[2])


def test_digraph_is_acyclic(fx):
    _, _, rg = pipeline(fx["fibonaccene_6"])
    # every arc raises the popcount by one, so no cycle can close
    labels = rg.table.labels
    assert all(labels[b].popcount == labels[a].popcount + 1 for a, b in rg.arcs)


def test_isometry_against_hamming_oracle(fx):
    _, table, rg = pipeline(fx["triphenylene"])
    strs = [str(x) for x in table.labels]
    for s in range(len(strs)):
        dist = rg.distances_from(s)
        assert all(dist[t] == oracles.hamming(strs[s], strs[t]) for t in range(len(strs)))


@pytest.mark.parametrize("n", range(1, 6))
def test_median_property(n):
    for shape in enumerate_shapes(n):
        assert check_median(pipeline(build_benzenoid(shape))[2])


def test_no_perfect_matching_rejected(fx):
    b = fx["benzene"]
    ord, _, _ = pipeline(b)
    with pytest.raises(NoPerfectMatching):
        build_resonance_graph(b, ord, MatchingTable((), ()))


def test_dot_output(fx):
    dot = to_dot(pipeline(fx["naphthalene"])[2])
    assert dot.startswith("graph resonance {")
    for name in ('"10"', '"00"', '"01"'):
        assert f"  {name};" in dot
    assert dot.count(" -- ") == 2
    digraph = to_dot(pipeline(fx["naphthalene"])[2], digraph=True)
    assert digraph.startswith("digraph") and digraph.count(" -> ") == 2
    assert '"00" -> "10"' in digraph


def test_json_output(fx):
    b = fx["anthracene"]
    out = to_json_dict(pipeline(b)[2], b, digraph=True)
    json.dumps(out)
    assert out["labels"] == ["000", "010", "011", "100"]
    assert out["arcs"] == [["000", "010"], ["000", "100"], ["010", "011"]]
    assert all(len(edges) == 7 for edges in out["matchings"].values())

