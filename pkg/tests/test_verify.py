import json
import warnings

import pytest

from qchroma import verify
from qchroma.graphs import SimpleGraph, is_dyck, parse_graph

SMALL_SWEEPS = [cid for cid in verify.CLAIMS if cid != "dyck-alpha-interval"]


@pytest.mark.parametrize("claim_id", SMALL_SWEEPS)
def test_claims_hold_on_small_graphs(claim_id):
    verdicts = verify.sweep(claim_id, [1, 2, 3, 4])
    assert verdicts
    failures = [v.to_json() for v in verdicts if not v.passed]
    assert failures == []


def test_dyck_alpha_statement_fails_off_dyck_graphs():
    verdicts = verify.sweep("dyck-alpha-interval", [3])
    bad = [v for v in verdicts if not v.passed]
    assert bad and all(not is_dyck(parse_graph(v.graph)) for v in bad)
    first = bad[0]
    assert first.graph == "m=3,2,3"
    assert first.witness == {"alpha": "(1,2)", "left": "2q+2q^2", "right": "2+2q"}
    summary = verify.summarize("dyck-alpha-interval", verdicts)
    assert not summary.fatal and summary.failures


def test_dyck_alpha_holds_on_dyck_graphs_of_the_interval_family():
    verdicts = verify.sweep("dyck-alpha-interval", [4], graph_filter=is_dyck)
    assert all(v.passed for v in verdicts)


def test_verdict_json_schema():
    v = verify.run_claim("mahonian", parse_graph("m=2,3,3"))
    data = v.to_json()
    assert set(data) == {"claim", "kind", "graph", "pass", "witness", "seconds"}
    assert data["pass"] is True and data["witness"] is None
    json.dumps(data)


def test_theorem_failures_are_fatal():
    v = verify.Verdict("mahonian", "theorem", "m=1", False, {"x": 1})
    assert verify.summarize("mahonian", [v]).fatal
    assert verify.summarize("forest-conjecture", [verify.Verdict("forest-conjecture", "conjecture", "m=1", False)]).fatal is False


def test_parallel_sweep_keeps_order():
    one = verify.sweep("wt-coinv", [4], jobs=1)
    two = verify.sweep("wt-coinv", [4], jobs=2)
    assert [v.graph for v in one] == [v.graph for v in two]
    assert [v.passed for v in one] == [v.passed for v in two]


def test_sampling_is_seeded():
    a = verify.select_graphs("mahonian", [5], sample=10, seed=3)
    b = verify.select_graphs("mahonian", [5], sample=10, seed=3)
    assert [g.key() for g in a] == [g.key() for g in b] and len(a) == 10


def test_family_sizes():
    assert len(verify.family_graphs("interval", 5)) == 120
    assert len(verify.family_graphs("dyck", 5)) == 42
    assert len(verify.family_graphs("complete", 5)) == 1
    with pytest.raises(ValueError):
        verify.family_graphs("other", 3)


def test_parse_range():
    assert verify.parse_range("3..6") == [3, 4, 5, 6]
    assert verify.parse_range("5") == [5]
    assert verify.parse_range("1,3") == [1, 3]
    with pytest.raises(ValueError):
        verify.parse_range("0..2")


def test_defaults_cover_every_claim():
    defaults = verify.load_defaults()
    assert set(defaults) == set(verify.CLAIMS)
    for entry in defaults.values():
        verify.parse_range(entry["n"])


def test_main_formula_sides_for_one_composition():
    g = parse_graph("m=3,2,3")
    for beta in [(1, 2), (2, 1), (3,), (1, 1, 1)]:
        lhs, rhs = verify.main_formula_sides(g, beta)
        assert lhs == rhs


def test_non_interval_counterexample():
    data = verify.non_interval_counterexample()
    assert not data["interval"]
    assert data["same_forest"] and data["phi_123"] == "[1:3<1 | 2]"
    assert data["coinv_set_123"] == [(1, 3), (2, 3)]
    assert data["coinv_set_132"] == [(1, 3)]
    assert (data["wt_phi_132"], data["coinv_132"]) == (2, 1)


def test_main_identity_outside_interval_graphs_warns():
    with pytest.warns(UserWarning):
        verify.check_main_identity(SimpleGraph(3, [(1, 3)]))


def test_nonsymmetric_witness():
    for n in (3, 4):
        g = verify.nonsymmetric_witness(n)
        assert g is not None and not is_dyck(g)
    assert verify.nonsymmetric_witness(2) is None


def test_forest_conjecture_witness_is_none_on_small_graph():
    assert verify.forest_conjecture_witness(parse_graph("m=3,2,3")) is None
