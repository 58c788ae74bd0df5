"""Smoke tests for the python bindings."""

import json

import mirrorlat as ml


def test_lattice_and_discriminant():
    u = ml.lattice("U")
    assert u["gram"] == [[0, 1], [1, 0]]
    assert u["signature"] == (1, 1)

    a2 = ml.discriminant_form("A2")
    assert a2["orders"] == [3]
    assert a2["form"] == "w(3,1,1)"

    big = ml.lattice("M9+A2+E8")
    assert big["det"] == -27
    assert big["signature"] == (1, 11)


def test_forms():
    assert ml.forms_isomorphic("w(5,1,1)", "w(5,1,1)")
    assert not ml.forms_isomorphic("w(5,1,1)", "w(5,1,-1)")
    assert ml.forms_isomorphic("4w(3,1,1)", "4w(3,1,-1)")
    assert ml.milgram_signature("w(2,1,1)") == 1
    assert ml.milgram_signature("w(3,1,1)") == 6
    assert ml.forms_isomorphic(ml.negate_form("w(3,1,1)"), "w(3,1,-1)")


def test_mirror_map():
    m = ml.mirror_invariants(4, "w(3,1,1)")
    assert m["r"] == 16
    assert ml.forms_isomorphic(m["form"], "w(3,1,-1)")
    assert m["splits_off_u"]

    pair = ml.check_mirror_pair(13, "v+w(2,1,1)", 7, "v+w(2,1,-1)")
    assert pair["rank_ok"] and pair["form_ok"]


def test_overlattices_and_identify():
    assert ml.overlattice_count("A2") == 0
    assert ml.overlattice_count("M9+A2+E8") == 1
    assert ml.identify_lattice(1, 3, "w(3,1,1)") == "U+A2"
    assert ml.identify_lattice(1, 10, "w(2,3,-5)") == "T(2,5,6)"
    assert ml.identify_lattice(0, 2, "w(3,1,-1)") is None


def test_bhk():
    t = ml.bhk_transpose("x^2+y^3+z^9+yw^12", [9, 6, 2, 1], 18)
    assert t["polynomial"] == "x^2+y^3w+z^9+w^12"
    assert t["weights"] == [18, 11, 4, 3]
    assert t["degree"] == 36

    order, dual_order = ml.dual_group_order("x^2+y^3+z^9+yw^12", [9, 6, 2, 1], 18)
    assert order * dual_order == 648


def test_genus():
    assert ml.genus(6, 2, 1, 18) == 7
    assert ml.genus(9, 6, 2, 18) == 0


def test_orbit_lattice_and_verify():
    data = ml.data_dir()
    res = ml.orbit_lattice(data + "/configs/m9_12b.json")
    assert res["r"] == 4
    assert res["form"] == "w(3,1,1)"
    assert res["lattice"]["gram"][0] == [-6, 0, 0, 3]

    ok, report = ml.verify(data, table_m=42)
    assert ok
    parsed = json.loads(report)
    assert parsed["summary"]["failed"] == 0

    ok, report = ml.verify(data, geometry_id="method1-12b")
    assert ok
