import json

import pytest

import supertrees as st


def test_single_edge_eigenvalue():
    g = st.Hypergraph(3, 3, [[0, 1, 2]])
    assert abs(st.spectral_radius(g).value - 2.0) < 1e-8


def test_enumerate_and_rank():
    classes = st.enumerate_supertrees(3, 3)
    assert len(classes) == 2
    ranked = st.rank_by_q(classes)
    assert ranked[0].q_value > ranked[1].q_value
    assert ranked[0].code == st.canonical_code(st.hyperstar(3, 3))


def test_families_and_structure():
    t = st.s1(5, 3, 3)
    assert st.diameter(t) == 3
    p, q = st.pendent_counts(t)
    assert (p, q) == (4, 9)
    assert st.is_power_hypertree(t)


def test_surgery_raises_typed_errors():
    path = st.loose_path(3, 3)
    with pytest.raises(st.Error):
        st.two_switch(path.graph, 0, 1, [0], [3])  # edges share a vertex
    released = st.edge_release(path, 1, 2)
    assert st.isomorphic(released, st.hyperstar(3, 3))


def test_json_roundtrip():
    g = st.hyperstar(4, 3).graph
    text = st.graph_to_json(g)
    parsed = json.loads(text)
    assert parsed["k"] == 3 and parsed["n"] == g.n
    back = st.graph_from_json(text)
    assert back == g


def test_verify_claim():
    report = st.verify("lem2.7", "k=3,m=2..4")
    assert report.verdict == "PASS"
    assert report.exit_code == 0
    assert len(report.rows) > 0


def test_solver_convergence_error():
    g = st.loose_path(5, 3).graph
    with pytest.raises(st.ConvergenceError):
        st.spectral_radius(g, max_iter=2)
