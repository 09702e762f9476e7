import json

import pytest
from hypothesis import given, settings

from conftest import graphs, small_matroids
from rotunda import catalog as cat
from rotunda import io
from rotunda.correspondence import check_compliance, compliant_graph
from rotunda.errors import InputError
from rotunda.rotunda_graph import rotunda_graph


def test_fixture_files_load(fixtures_dir):
    want = {"u36": cat.u36(), "pabx": cat.pabx(), "w4": cat.whirl4(), "fano": cat.fano(),
            "k33-dual": cat.k33_cocycle_matroid(), "diamond": cat.diamond(),
            "k4": cat.complete_graph(4), "path": cat.path_graph(2)}
    for stem, obj in want.items():
        assert io.load(fixtures_dir / f"{stem}.json") == obj


def test_roundtrip_catalog(tmp_path):
    objs = list(cat.named_fixtures()) + list(cat.extra_matroids()) + [cat.diamond()]
    for k, obj in enumerate(objs):
        p = tmp_path / f"{k}.json"
        io.dump(obj, p)
        assert io.load(p) == obj


@settings(max_examples=50, deadline=None)
@given(small_matroids())
def test_roundtrip_random_matroids(M):
    assert io.loads(io.dumps(io.to_dict(M))) == M


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_roundtrip_random_graphs(G):
    assert io.loads(io.dumps(io.to_dict(G))) == G


@pytest.mark.parametrize("text,where", [
    ('{"type": "uniform", "rank": 2', "line 1"),
    ('{"type": "nope"}', "$"),
    ('{"type": "uniform", "rank": 2}', "$"),
    ('{"type": "uniform", "rank": "2", "size": 3}', "$"),
    ('{"type": "graphic", "edges": [["a", "b"], ["c"]]}', "$.edges[1]"),
    ('{"type": "direct_sum", "parts": [{"type": "uniform", "rank": 5, "size": 2}]}', "$.parts[0]"),
    ('{"type": "circuits", "circuits": ["ab"]}', "$.circuits[0]"),
    ('{"vertices": ["a"], "edges": [["a", "z"]]}', "$"),
])
def test_input_errors_name_location(text, where):
    with pytest.raises(InputError) as exc:
        io.loads(text)
    assert exc.value.where.startswith(where)


def test_missing_file(tmp_path):
    with pytest.raises(InputError):
        io.load(tmp_path / "nope.json")


def test_dot_output(diamond_m, k4_m):
    dot = io.rotunda_graph_dot(rotunda_graph(diamond_m))
    assert dot.count("[label=") == 3 and 'label="σ=1"' in dot
    assert "R0 -- R1" in dot
    assert io.rotunda_graph_dot(rotunda_graph(diamond_m)) == dot  # byte-stable
    single = io.rotunda_graph_dot(rotunda_graph(k4_m))
    assert "R0" in single and "--" not in single


def test_reports_are_sorted_json(diamond_m):
    text = io.dumps(io.rotunda_graph_report(rotunda_graph(diamond_m)))
    data = json.loads(text)
    assert list(data) == sorted(data)
    assert data["edges"][0]["weight"] == 1


def test_compliant_graph_json_roundtrip(diamond_m):
    G, theta = compliant_graph(diamond_m)
    d = json.loads(io.dumps(io.compliant_graph_dict(diamond_m, G, theta)))
    G2, theta2 = io.compliant_graph_from_dict(diamond_m, d)
    assert G2 == G and theta2.theta == theta.theta
    assert check_compliance(diamond_m, G2, theta2).compliant
