import pytest

import lexdom


def test_invariants_on_small_families():
    assert lexdom.invariant("path:6", "gx2") == 5
    assert lexdom.invariant("cycle:7", "gx2") == 5
    for r in range(3, 7):
        assert lexdom.invariant(f"star:{r}", "gx2") == r + 1
        assert lexdom.invariant(f"star:{r}", "gtr2") == 3
    assert set(lexdom.kinds()) == {"g", "gt", "gx2", "g2t", "rho", "gtr", "gtr2"}


def test_graph_round_trip():
    g = lexdom.Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g == lexdom.Graph("path:4")
    assert lexdom.Graph(g.graph6()) == g
    assert g.order == 4
    assert len(g.edges()) == 3


def test_witnesses_validate():
    value, w = lexdom.min_witness("cycle:6", "gx2")
    assert value == 4 == len(w)
    assert lexdom.validate("cycle:6", "gx2", w)
    assert not lexdom.validate("cycle:6", "gx2", w[:-1])
    value, f = lexdom.min_witness("path:3", "gtr2")
    assert value == sum(f) == 3
    assert lexdom.count_minimum("cycle:6", "gx2") == 3


def test_infeasible_kind_raises():
    with pytest.raises(lexdom.InfeasibleError):
        lexdom.invariant("empty:2", "gt")


def test_product_and_formula():
    p, ng, nh = lexdom.lex_product("path:7", "path:4")
    assert (p.order, ng, nh) == (28, 7, 4)
    assert lexdom.invariant(p, "gx2") == 6
    assert lexdom.formula("path:7", "path:4")["value"] == 6
    assert lexdom.formula("cycle:9", "empty:3")["value"] == 9
    b = lexdom.bounds("path:4", "empty:3")
    assert b["lower"] <= 4 <= b["upper"]
    assert any(t["source"] == "2*gamma_t(G)" for t in b["upper_terms"])
    with pytest.raises(lexdom.PremiseError):
        lexdom.formula("path:4", "empty:1")
    with pytest.raises(ValueError):
        lexdom.formula("hk:3:1,1,1", "path:3")


def test_classification():
    assert lexdom.classify_small_value("complete:3", "empty:3")["case"] == "ii"
    assert lexdom.classify_small_value("path:2", "complete:2")["value"] == "2"
    assert lexdom.classify_small_value("path:5", "empty:3")["value"] == ">=4"


def test_constructions():
    s = lexdom.path_scheme_gamma2(7, "path:4", pair=[1, 2], single=0)
    assert len(s) == lexdom.path_scheme_size(7) == 6
    assert lexdom.path_scheme_row(7) == [0, 2, 1, 0, 1, 2, 0]
    p, _, _ = lexdom.lex_product("path:7", "path:4")
    assert lexdom.validate(p, "gx2", s)
    assert lexdom.small_value_witness("path:2", "path:4", 1, pair=[1, 2]) == [1, 2, 5]
    assert len(lexdom.two_universal_witness("path:4", "complete:3")) == 4
    f = lexdom.universal_lift_witness("path:3", "path:3")
    assert lexdom.validate(lexdom.lex_product("path:3", "path:3")[0], "gtr2", f)
    assert lexdom.hk_witness(4, [3, 2, 3, 2]) == [0, 1, 2, 3]


def test_verify_small_corpus():
    cfg = {"single_max": 4, "g_max": 3, "h_max": 3, "grid_n_max": 6, "cap": 24}
    report = lexdom.verify(["V6", "V15"], config=cfg, workers=2)
    assert [c["id"] for c in report["checks"]] == ["V6", "V15"]
    for c in report["checks"]:
        assert c["verdict"] == "pass"
        assert c["tested"] + c["skipped"] == c["generated"]
    assert len(lexdom.check_ids()) == 16
    with pytest.raises(ValueError):
        lexdom.verify(["V6"], config="bogus=1")


def test_hunt():
    hits = lexdom.hunt(["cycle:4", "path:4", "complete:2"])
    graphs = [h["graph"] for h in hits]
    assert lexdom.Graph("cycle:4") in graphs
    c4 = next(h for h in hits if h["graph"] == lexdom.Graph("cycle:4"))
    assert c4["factors"] is not None
