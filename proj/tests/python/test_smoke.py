import json

import pytest

import nilclean


def test_zn_tables():
    r = nilclean.make_zn(6)
    assert r.order == 6 and len(r) == 6
    assert r.add(4, 5) == 3
    assert r.mul(4, 5) == 2
    assert r.neg(1) == 5
    assert r.pow(2, 3) == 2
    assert r.is_commutative()
    assert repr(r) == "<RingTable Z/6 order=6>"


def test_classify_z6():
    c = nilclean.classify(nilclean.make_zn(6))
    assert c["idempotents"] == [0, 1, 3, 4]
    assert c["units"] == [1, 5]
    assert c["nilpotents"] == [0]


def test_z5_verdicts():
    z5 = nilclean.make_zn(5)
    assert nilclean.all_squares(z5) == [0, 1, 4]
    assert nilclean.is_strongly_2_nil_clean(z5) == (False, 2)
    assert nilclean.is_zhou_nil_clean(z5) == (True, None)
    assert nilclean.check_characterization(z5, "S2NC-SQ-4E") == (True, None)
    w = nilclean.find_decomposition(z5, 4, "e,e,e,e")
    assert w == {"parts": [1, 1, 1, 1], "nilpotent": 0}
    assert nilclean.find_decomposition(z5, 4, "e,e,e") is None


def test_cross_check_report():
    rep = nilclean.cross_check(nilclean.get_ring("example3.6"))
    assert rep["classes"]["ZNC"] is False
    assert rep["predicates"]["ZNC-SQ-5P"]["holds"] is True
    assert rep["separations"]["ZNC-SQ-5P"] is True


def test_parse_and_json_round_trip():
    r = nilclean.parse_ring("Z/2 x GF(2^2)")
    assert r.order == 8
    back = nilclean.ring_from_json(json.dumps(r.to_json()))
    assert back == r


def test_lifting_and_split():
    z9 = nilclean.make_zn(9)
    lift = nilclean.lift_idempotent(nilclean.make_zn(8), 3)
    assert lift["lifted"] == 1
    p = nilclean.lift_tripotent(z9, 2)["lifted"]
    assert z9.pow(p, 3) == p
    plus, minus = nilclean.tripotent_split(z9, 8)
    assert z9.add(plus, minus) == z9.mul(8, 8)


def test_primary_decomposition():
    factors = nilclean.primary_decomposition(nilclean.make_zn(12))
    assert sorted(f["corner"].order for f in factors) == [3, 4]


def test_survey_small():
    rows = nilclean.survey(6, threads=1)
    names = [row["name"] for row in rows]
    assert "Z/4" in names
    z4 = rows[names.index("Z/4")]
    assert z4["classes"]["S2NC"] is True


def test_errors():
    with pytest.raises(nilclean.ParseError):
        nilclean.parse_ring("Z/")
    with pytest.raises(nilclean.RingError):
        nilclean.make_zn(1000, order_cap=10)
    with pytest.raises(ValueError):
        nilclean.make_gf(4, 1)
