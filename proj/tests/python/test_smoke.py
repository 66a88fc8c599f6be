import pytest

import symcone


def test_group_orders():
    assert symcone.group_order(name="PSL2(5)") == 60
    assert symcone.group_order("(1234567),(163247)", 7) == 42


def test_orbits_partition_subsets():
    orbits = symcone.orbits(name="PSL2(5)")
    assert len(orbits) == 7
    assert sum(len(o) for o in orbits) == 2**6 - 1


def test_cone_rows_are_valid_on_rays():
    labels, rows = symcone.cone(name="PSL2(5)")
    rays = symcone.rays(name="PSL2(5)")
    assert labels[0] == "O(1)"
    assert len(rays) == 8
    for r in rays:
        assert all(sum(a * x for a, x in zip(row, r)) >= 0 for row in rows)
        # extreme: tight on at least dim - 1 rows
        assert sum(1 for row in rows if sum(a * x for a, x in zip(row, r)) == 0) >= len(labels) - 1


def test_double_description_matches_brute_force():
    for gens in ["(12)(34)", "(1234)", "(12),(34)"]:
        assert symcone.rays(gens, 4) == symcone.rays(gens, 4, brute_force=True)


def test_certify():
    c = symcone.certify(name="PSL2(5)")
    assert c["status"] == "Tight"
    assert {r["status"] for r in c["rays"]} == {"AlmostEntropic"}
    c = symcone.certify(name="S3wr2C2", search_budget=1 << 12)
    assert c["status"] == "NotTight"
    assert any(r["status"] == "NonEntropic" for r in c["rays"])


def test_classify_degree_5():
    r = symcone.classify(5)
    assert r["complete"]
    assert len(r["classes"]) == 11


def test_subgroup_classes():
    assert len(symcone.subgroup_classes(4)) == 11


def test_parse_error():
    with pytest.raises(ValueError):
        symcone.orbits("(12x)", 3)
    with pytest.raises(ValueError):
        symcone.orbits(name="no such group")


def test_acceptance_subset():
    (res,) = symcone.acceptance(only=[5])
    assert res["id"] == 5 and res["passed"]


def test_module_location():
    tree = __import__("os").environ.get("SYMCONE_PYTHON_TREE")
    if tree:
        assert symcone._core.__file__.startswith(tree)
