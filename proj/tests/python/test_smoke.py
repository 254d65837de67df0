import pytest

import bergelab as bl

C5 = (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
C6 = (6, [(i, (i + 1) % 6) for i in range(6)])


def test_graph6_round_trip():
    assert bl.graph6(C5) == "Dhc"
    n, es = bl.edges("Dhc")
    assert n == 5 and sorted(map(tuple, map(sorted, es))) == sorted(map(tuple, map(sorted, C5[1])))


def test_berge_and_perfect_agree_on_small_cycles():
    r = bl.is_berge(C5)
    assert r == {"berge": False, "graph": "Dhc", "witness": {"hole": [0, 1, 2, 3, 4], "side": "G"}}
    assert bl.is_perfect(C5)["perfect"] is False
    assert bl.is_berge(C6)["berge"] is True
    assert bl.is_perfect(C6)["perfect"] is True


def test_classify_and_decompose():
    assert bl.classify(C6)["class"] == "bipartite"
    v = bl.decompose(C6)
    assert v["kind"] == "basic" and v["class"] == "bipartite"
    assert bl.decompose(C5)["berge"] is False


def test_detect_and_skew():
    prism = bl.generate("uniform(1,0)", 0)[0]
    assert bl.detect(prism, "prism")["found"] is False
    triangles = (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])
    found = bl.detect(triangles, "prism")
    assert found["found"] is True and found["witness"]["parity"] == "odd"
    s = bl.skew_partitions("Ch")
    assert s["count"] == len(s["partitions"])


def test_f_ladder():
    ladder = bl.f_ladder(C6)
    assert set(f"F{k}" for k in range(1, 12)) <= ladder.keys()
    assert bl.f_ladder(C5)["berge"] is False


def test_verify_matches_graph_counts():
    assert len(bl.claim_ids()) == 16
    r = bl.verify("spgt", exhaustive=6)
    assert r["graphs_checked"] == 156 and r["passed"] is True and r["counterexamples"] == []
    r = bl.verify("rr", generator="berge_rejection(8,0.5)", samples=50, seed=3, jobs=2)
    assert r["graphs_total"] == 50 and r["passed"] is True
    assert r == bl.verify("rr", generator="berge_rejection(8,0.5)", samples=50, seed=3)
    r = bl.verify("decomp", graphs=["Dhc", C6])
    assert r["skipped_non_berge"] == 1


def test_generate_is_deterministic():
    a = bl.generate("bicograph(2,3)", 11, samples=4)
    assert a == bl.generate("bicograph(2,3)", 11, samples=4)
    assert all(bl.classify(g)["basic"] for g in a)


def test_errors():
    with pytest.raises(ValueError):
        bl.is_berge("Dh!")
    with pytest.raises(ValueError):
        bl.verify("nosuch", exhaustive=3)
    with pytest.raises(ValueError):
        bl.verify("spgt")
    with pytest.raises(ValueError):
        bl.graph6((3, [(0, 3)]))
    with pytest.raises(bl.BudgetExceeded):
        bl.is_perfect((20, []), limit=10)
