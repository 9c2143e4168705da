import numpy as np
import pytest

from redclass.errors import ParseError, ScopeError, ValidationError
from redclass.fingrp import describe_group, enumerate_homs, parse_group
from redclass.rootdata import (build_root_datum, cartan_determinant, cartan_matrix,
                               center_torsion_module, out_group, parse_type, root_count,
                               torsion_out_module)


def test_parse_type():
    assert parse_type("D5*A2") == [("D", 5), ("A", 2)]
    assert parse_type("A1 * T1") == [("A", 1), ("T", 1)]


@pytest.mark.parametrize("text", ["D3", "E9", "Q2", "A0", "", "A1**A1"])
def test_parse_type_errors(text):
    with pytest.raises(ParseError):
        parse_type(text)


def test_torus_is_out_of_scope():
    with pytest.raises(ScopeError):
        build_root_datum("A1*T1")


def test_bourbaki_conventions():
    # C_ij = 2(a_i, a_j)/(a_i, a_i); Bourbaki node order (B2: a1 long, G2: a1 short)
    assert cartan_matrix("B", 2).tolist() == [[2, -1], [-2, 2]]
    assert cartan_matrix("C", 2).tolist() == [[2, -2], [-1, 2]]
    assert cartan_matrix("G", 2).tolist() == [[2, -3], [-1, 2]]
    # D4 branch node is node 2
    assert (cartan_matrix("D", 4)[1] == np.array([-1, 2, -1, -1])).all()


# [DERIVED] |W|-free counts: number of roots by the closed formulas per type
@pytest.mark.parametrize("t,count", [("A1", 2), ("A2", 6), ("B3", 18), ("C3", 18), ("D4", 24),
                                     ("G2", 12), ("F4", 48), ("E6", 72), ("E7", 126),
                                     ("E8", 240), ("D5*A2", 46)])
def test_root_counts(t, count):
    rd = build_root_datum(t)
    assert len(rd.roots) == count
    assert sum(root_count(l, n) for l, n in rd.components) == count


@pytest.mark.parametrize("t,lat,det,lam,out", [
    ("D4", "sc", 4, "C2 x C2", 6), ("D4", "ad", 4, "1", 6), ("A1*A1*A1", "sc", 8, "C2 x C2 x C2", 6),
    ("A2", "sc", 3, "C3", 2), ("E6", "sc", 3, "C3", 2), ("D6", "sc", 4, "C2 x C2", 2),
    ("D5*A2", "sc", 12, "C12", 4), ("A3", "sc", 4, "C4", 2), ("E8", "sc", 1, "1", 1),
    ("B3", "sc", 2, "C2", 1)])
def test_fundamental_and_out(t, lat, det, lam, out):
    rd = build_root_datum(t, lat)
    o = out_group(rd)
    assert cartan_determinant(rd) == det
    assert str(o.fundamental.group) == lam
    assert o.group.order == out


def test_out_of_d4_is_s3():
    assert describe_group(out_group(build_root_datum("D4")).group) == "S3"


def test_custom_lattice_rejects_non_lattices():
    with pytest.raises(ValidationError):
        build_root_datum("A1", "[[3]]")


def test_custom_lattice_restricts_out():
    # SO8: X between root and weight lattice, fixed by one diagram involution only
    rd = build_root_datum("D4", "[[1,0,0,0],[0,1,0,0],[0,0,1,1],[0,0,0,2]]")
    o = out_group(rd)
    assert o.fundamental.group.order == 2
    assert o.group.order == 2


def test_center_module_of_d4_is_faithful_gl2():
    rd = build_root_datum("D4")
    out = out_group(rd)
    tmod = torsion_out_module(out, 6)
    mats = {tuple((m % 2).ravel()) for m in tmod.matrices}
    assert len(mats) == 6
    assert torsion_out_module(out, 6, p=2).base.order == 1


def test_center_torsion_respects_k():
    rd = build_root_datum("A3")
    out = out_group(rd)
    assert torsion_out_module(out, 2).base.order == 2
    H = parse_group("C2")
    phi = enumerate_homs(H, out.group)[-1]
    M = center_torsion_module(rd, phi, 2)
    assert M.base.order == 2


def test_weight_action_permutes_fundamental_weights():
    rd = build_root_datum("D4")
    o = out_group(rd)
    images = {o.act_weight(g, (1, 0, 0, 0)) for g in range(o.group.order)}
    assert images == {(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)}
    assert {o.act_weight(g, (0, 1, 0, 0)) for g in range(6)} == {(0, 1, 0, 0)}
