import itertools

import pytest

import extlab


def brute_extensions(n, less):
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        if all(perm[x] < perm[y] for x, y in less):
            out.append(list(perm))
    return out


def test_parse_and_count():
    p = extlab.Poset.parse("4;0<1,2<3")
    assert len(p) == 4
    assert p.width() == 2
    assert extlab.count_extensions(p) == 6
    assert str(extlab.Poset.parse(str(p))) == str(p)
    with pytest.raises(ValueError):
        extlab.Poset.parse("3;0<1,1<x")
    with pytest.raises(ValueError):
        extlab.Poset(2, [(0, 1), (1, 0)])


def test_unlabeled_counts():
    assert [len(extlab.all_posets(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]


def test_extensions_against_permutations():
    rel = [(0, 2), (1, 2), (2, 4), (3, 4)]
    p = extlab.Poset(5, rel)
    assert sorted(extlab.extensions(p)) == brute_extensions(5, rel)


def test_correlation_table():
    p = extlab.Poset.parse("9;0<1,1<2,2<3,4<5,5<6,6<7")
    t = extlab.correlation_table(p, (0, 8, 7))
    for i in range(1, 5):
        for j in range(1, 6 - i):
            assert t[(i, j)] == 2 ** (i + j - 2)
    s = extlab.correlation_table(p, (0, 8, 7), signed=True)
    assert s[(-1, -1)] == 1
    q = extlab.correlation_table(extlab.Poset.parse("4;0<1,2<3"), (0, 1, 3), q=True)
    assert all(isinstance(v, dict) for v in q.values())
    with pytest.raises(extlab.WidthError):
        extlab.correlation_table(p, (0, 8, 7), q=True)


def test_n_matrix_and_paths():
    p = extlab.Poset.parse("5;0<1,1<2,3<4")
    assert extlab.chain_decomposition(p) == ([0, 1, 2], [3, 4])
    n = extlab.n_matrix(p)
    assert sum(map(sum, n)) == extlab.count_extensions(p)
    paths = {extlab.lattice_path(p, e) for e in extlab.extensions(p)}
    assert len(paths) == extlab.count_extensions(p) == 10
    assert all(len(s) == 5 for s in paths)
    rows = extlab.render(p)
    assert "#" not in "".join(rows)
    assert extlab.render(p, path=0) != rows


def test_equality_counterexample():
    p = extlab.Poset.parse("6;0<1,0<4,2<3,3<4,4<5")
    e = extlab.classify_equality(p, (2, 4, 5), 2, 1)
    assert e["equality"] and e["cases"] == "none" and not e["consistent"]


def test_xyz_gap_antichain():
    assert extlab.xyz_gap(extlab.Poset(3), 0, 1, 2) > 0


def test_verify_and_search():
    body = extlab.verify(max_n=4)
    assert body["ok"] is True
    assert {s["scope"] for s in body["suites"]} == set(extlab.suite_names())
    assert extlab.verify(max_n=4, seed=5) == extlab.verify(max_n=4, seed=5, jobs=2)
    with pytest.raises(ValueError):
        extlab.verify("nosuch")
    r = extlab.search("general-cpc", max_n=5)
    assert r["violations_total"] == 0
    assert extlab.search("tp-minors", budget=0)["instances_checked"] == 0
