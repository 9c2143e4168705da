import numpy as np
import pytest

from redclass.abcoh import h2, parse_abgroup, trivial_module
from redclass.errors import ValidationError
from redclass.extoracle import (SchreierSystem, build_crossed_product,
                                classify_extensions_bruteforce, find_marked_isomorphism,
                                semidirect_equivalence_check, transported_couplings)
from redclass.fingrp import describe_group, parse_group
from redclass.rootdata import build_root_datum


def test_c2_by_c2():
    A, H = parse_abgroup("C2"), parse_group("C2")
    cen = classify_extensions_bruteforce(A, H, action=trivial_module(H, A))
    c = cen.couplings[0]
    assert c.equivalence_count == 2 and c.virtual_count == 2 and c.confirmed


def test_crossed_products_are_c4_and_klein():
    A, H = parse_abgroup("C2"), parse_group("C2")
    M = trivial_module(H, A)
    coh = h2(H, M)
    labels = sorted(describe_group(build_crossed_product(SchreierSystem(M, coh.cocycle(x))).group)
                    for x in coh.elements())
    assert labels == ["C2 x C2", "C4"]


def test_schreier_validation():
    A, H = parse_abgroup("C2"), parse_group("C2")
    M = trivial_module(H, A)
    bad = np.zeros((2, 2, 1), dtype=np.int64)
    bad[0, 1] = 1
    with pytest.raises(ValidationError):
        SchreierSystem(M, bad).validate()


def test_klein_by_s3_all_couplings():
    A, H = parse_abgroup("C2^2"), parse_group("S3")
    cen = classify_extensions_bruteforce(A, H)
    got = [(c.equivalence_count, c.iso_count, c.virtual_count) for c in cen.couplings]
    assert got == [(4, 2, 2), (1, 1, 1), (1, 1, 1)]
    assert cen.virtual_total == 4
    assert all(c.confirmed for c in cen.couplings)


def test_transported_d4():
    rd = build_root_datum("D4")
    A, H = parse_abgroup("C2^2"), parse_group("S3")
    reps, img = transported_couplings(rd, H, A)
    assert len(reps) == 3 and len(img) == 6


def test_klein_cubed_by_s4_aut_scope():
    A, H = parse_abgroup("C2^3"), parse_group("S4")
    reps, _ = transported_couplings(build_root_datum("A1*A1*A1"), H, A)
    cen = classify_extensions_bruteforce(A, H, couplings=reps, confirm=False)
    assert [c.equivalence_count for c in cen.couplings] == [64, 8, 8]
    assert [c.virtual_count for c in cen.couplings] == [5, 6, 8]
    assert cen.virtual_total == 19


def test_klein_cubed_by_s4_out_scope_confirmed():
    # raw isomorphism search on the 80 crossed products of order 192
    A, H = parse_abgroup("C2^3"), parse_group("S4")
    reps, img = transported_couplings(build_root_datum("A1*A1*A1"), H, A)
    cen = classify_extensions_bruteforce(A, H, couplings=reps, aut_subgroup=img, confirm=True)
    assert [c.virtual_count for c in cen.couplings] == [20, 8, 8]
    assert all(c.confirmed for c in cen.couplings)


def test_all_couplings_c2_cubed_by_s4():
    A, H = parse_abgroup("C2^3"), parse_group("S4")
    cen = classify_extensions_bruteforce(A, H, confirm=False)
    got = [(c.equivalence_count, c.virtual_count) for c in cen.couplings]
    assert got == [(64, 5), (8, 6), (8, 8), (4, 4), (4, 4)]
    assert cen.virtual_total == 27


def test_marked_isomorphism_distinguishes():
    A, H = parse_abgroup("C2"), parse_group("C2")
    M = trivial_module(H, A)
    coh = h2(H, M)
    E = [build_crossed_product(SchreierSystem(M, coh.cocycle(x))) for x in coh.elements()]
    assert find_marked_isomorphism(E[0], E[0]) is not None
    assert find_marked_isomorphism(E[0], E[1]) is None


def test_semidirect_complements():
    H = parse_group("S3")
    M = trivial_module(H, parse_abgroup("C2"))
    rep = semidirect_equivalence_check(M, M)
    assert rep["equal"] and rep["derivations"] == rep["complements"] == 2
