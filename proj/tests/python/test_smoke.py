import pytest

import lieindex


def test_k_g_small_types():
    assert lieindex.k_g("A1") == 1
    assert lieindex.k_g("E8") == 8
    assert lieindex.k_g("D5") == 4


def test_cascade_f4():
    c = lieindex.cascade("F4")
    assert c["k_g"] == 4
    assert c["rank"] == 4
    assert len(c["cascade"]) == 4


def test_registry_round_trip():
    names = lieindex.registry_names()
    assert "sl(3,R)" in names
    a = lieindex.analyze("sl(3,R)")
    assert a["name"] == "sl(3,R)"
    assert a["rg_g"] == 2


def test_unknown_name_raises():
    with pytest.raises(KeyError):
        lieindex.analyze("nothing")


def test_bad_type_raises():
    with pytest.raises(ValueError):
        lieindex.cascade("H3")


def test_index_of_b_sl3():
    r = lieindex.index("sl(3,R)")
    assert r["index"] == 1


def test_minimal_parabolic_su21():
    r = lieindex.index("su(2,1)", "minimal-parabolic")
    assert r["reductive"] is True


def test_table4_g2():
    row = lieindex.table4("G2")
    assert [n["quasi_reductive"] for n in row["nodes"]] == [False, True]


def test_run_criterion_cascade():
    r = lieindex.run_criterion(1)
    assert r.id == 1
    assert r.passed
    assert 1 in lieindex.criteria_in_scope("cascade")
