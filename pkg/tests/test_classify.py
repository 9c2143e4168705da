import pytest

from redclass.classify import characteristic_comparison, classify
from redclass.errors import ValidationError
from redclass.fingrp import parse_group, trivial_group
from redclass.rootdata import build_root_datum

D4, A13 = build_root_datum("D4"), build_root_datum("A1*A1*A1")


def _summary(tab):
    return [(r.coupling_image, str(r.h2), r.stabilizer_order, r.orbits) for r in tab.rows]


def test_spin8_by_s3():
    tab = classify(D4, parse_group("S3"), 0)
    assert _summary(tab) == [("1", "C2 x C2", 36, 2), ("C2", "1", 12, 1), ("S3", "1", 6, 1)]
    assert tab.total == 4 and tab.iso_total == 4 and tab.equiv_total == 13
    assert tab.rows[0].orbit_sizes == [1, 3] and tab.rows[0].split_classes == 1


@pytest.mark.parametrize("p,total", [(2, 3), (3, 4), (5, 4), (7, 4)])
def test_spin8_characteristics(p, total):
    assert classify(D4, parse_group("S3"), p).total == total


def test_sl2_cubed_by_s4():
    tab = classify(A13, parse_group("S4"), 0)
    assert [r.h2.power_notation() for r in tab.rows] == ["C2^6", "C2^3", "C2^3"]
    assert [r.coupling_image for r in tab.rows] == ["1", "C2", "S3"]
    # [DERIVED] the C2-image row is 8: the whole stabilizer acts trivially on H^2
    # (re-derived from the oracle restricted to the Out image, see test_extoracle)
    assert [r.orbits for r in tab.rows] == [20, 8, 8]
    assert tab.total == 36
    assert classify(A13, parse_group("S4"), 2).total == 3


def test_adjoint_and_trivial_cases():
    assert classify(build_root_datum("A1"), trivial_group(), 0).total == 1
    assert classify(build_root_datum("A1"), parse_group("C2"), 0).total == 2
    assert classify(build_root_datum("D4", "ad"), parse_group("S3"), 0).total == \
        len(classify(build_root_datum("D4", "ad"), parse_group("S3"), 0).rows)


def test_bad_characteristic():
    with pytest.raises(ValidationError):
        classify(D4, parse_group("S3"), 4)


def test_characteristic_comparison():
    rep = characteristic_comparison(D4, parse_group("S3"), 2)
    assert rep["p_divides_kc"] and rep["total_p"] == 3 and not rep["independent"]
    rep = characteristic_comparison(D4, parse_group("S3"), 7)
    assert rep["independent"]


def test_json_projection():
    d = classify(D4, parse_group("S3"), 0, group_label="S3").to_dict()
    assert d["input"]["group"] == "S3" and d["total"] == 4
    assert [r["h2_order"] for r in d["rows"]] == [4, 1, 1]
