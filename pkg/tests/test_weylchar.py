import pytest
from hypothesis import given, settings, strategies as st

from oracles import clebsch_gordan, type_a_character, type_a_tensor
from redclass.errors import CapExceeded, PreconditionError, ValidationError
from redclass.fingrp import enumerate_homs, parse_group
from redclass.rootdata import build_root_datum, out_group
from redclass import caps
from redclass.weylchar import (Dominance, diagram_orbit, dominance_leq, dual_weight,
                               dominant_weights_upto, lowest_term, set_height_mode,
                               tensor_decompose, total_order_cmp, weyl_data, weyl_dim)

A1, A2, D4 = (build_root_datum(t) for t in ("A1", "A2", "D4"))


def test_dominance_examples():
    assert dominance_leq(A1, (1,), (3,)) is Dominance.LESS
    assert dominance_leq(A1, (3,), (3,)) is Dominance.GREATER_OR_EQUAL
    assert dominance_leq(A2, (1, 0), (0, 1)) is Dominance.INCOMPARABLE
    assert dominance_leq(A1, (0,), (1,)) is Dominance.INCOMPARABLE
    with pytest.raises(ValidationError):
        dominance_leq(A2, (1,), (1, 0))


def test_total_order_examples():
    assert [total_order_cmp(A1, (a,), (a + 1,)) for a in range(5)] == [-1] * 5
    # equal heights in A2, broken lexicographically
    wd = weyl_data(A2)
    assert wd.height((1, 0)) == wd.height((0, 1))
    assert total_order_cmp(A2, (1, 0), (0, 1)) == 1


def test_height_knob_keeps_refinement():
    try:
        set_height_mode("coroot-rho")
        assert total_order_cmp(A2, (1, 1), (0, 0)) == 1
    finally:
        set_height_mode("root-dot-rho")
    with pytest.raises(ValueError):
        set_height_mode("other")


def test_dual_weight_examples():
    assert dual_weight(A1, (3,)) == (3,)
    assert dual_weight(A2, (1, 0)) == (0, 1)
    for i in range(4):
        w = tuple(int(i == j) for j in range(4))
        assert dual_weight(D4, w) == w
    E6 = build_root_datum("E6")
    assert dual_weight(E6, (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    assert dual_weight(build_root_datum("D5"), (0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1)
    with pytest.raises(PreconditionError):
        dual_weight(A2, (-1, 0))


# [DERIVED] classical dimensions
@pytest.mark.parametrize("t,w,d", [("A1", (4,), 5), ("A2", (1, 1), 8), ("A2", (0, 0), 1),
                                   ("D4", (0, 1, 0, 0), 28), ("D4", (0, 0, 1, 0), 8),
                                   ("G2", (1, 0), 7), ("G2", (0, 1), 14), ("F4", (0, 0, 0, 1), 26),
                                   ("E6", (1, 0, 0, 0, 0, 0), 27), ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
                                   ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248), ("B2", (0, 1), 4),
                                   ("C3", (1, 0, 0), 6)])
def test_weyl_dimensions(t, w, d):
    assert weyl_dim(build_root_datum(t), w) == d


def test_tensor_examples():
    assert dict(tensor_decompose(A1, (2,), (3,))) == {(5,): 1, (3,): 1, (1,): 1}
    assert dict(tensor_decompose(A2, (0, 0), (2, 1))) == {(2, 1): 1}
    assert dict(tensor_decompose(A2, (1, 0), (0, 1))) == {(1, 1): 1, (0, 0): 1}


def test_lowest_term_examples():
    assert lowest_term(A1, (1,), (3,)) == (2,)
    assert (2,) in tensor_decompose(A1, (1,), (3,))
    assert lowest_term(A2, (2, 1), (1, 2)) == (0, 0)
    assert lowest_term(A2, (1, 0), (0, 0)) is None


def test_freudenthal_a1_strings():
    wd = weyl_data(A1)
    for n in range(8):
        w = wd.all_weights((n,))
        assert w == {(k,): 1 for k in range(-n, n + 1, 2)}


@pytest.mark.parametrize("lam", [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (2, 2)])
def test_multiplicities_against_tableaux(lam):
    assert weyl_data(A2).all_weights(lam) == type_a_character(lam)


def test_multiplicities_a3_against_tableaux():
    A3 = build_root_datum("A3")
    for lam in [(1, 0, 1), (0, 2, 0), (1, 1, 0)]:
        assert weyl_data(A3).all_weights(lam) == type_a_character(lam)


def test_diagram_orbit_examples():
    out = out_group(D4)
    S3 = parse_group("S3")
    surj = next(h for h in enumerate_homs(S3, out.group) if len(set(h.images)) == 6)
    orbit, stab, _ = diagram_orbit(D4, (1, 0, 0, 0), surj, out)
    assert orbit == [(0, 0, 0, 1), (0, 0, 1, 0), (1, 0, 0, 0)] and stab.order == 2
    orbit, stab, _ = diagram_orbit(D4, (0, 1, 0, 0), surj, out)
    assert orbit == [(0, 1, 0, 0)] and stab.order == 6
    triv = enumerate_homs(S3, out.group)[0]
    orbit, stab, _ = diagram_orbit(D4, (1, 0, 0, 0), triv, out)
    assert orbit == [(1, 0, 0, 0)] and stab.order == 6


def test_dominant_weights_in_order():
    ws = dominant_weights_upto(A2, count=6)
    assert ws == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_weight_orbit_cap(monkeypatch):
    monkeypatch.setattr(caps.CAPS, "weight_orbit", 5)
    with pytest.raises(CapExceeded):
        weyl_data(build_root_datum("A3")).orbit((1, 1, 1))


small = st.integers(0, 6)


@settings(max_examples=60, deadline=None)
@given(small, small)
def test_a1_clebsch_gordan(a, b):
    assert dict(tensor_decompose(A1, (a,), (b,))) == clebsch_gordan(a, b)


w2 = st.tuples(st.integers(0, 2), st.integers(0, 2))


@settings(max_examples=40, deadline=None)
@given(w2, w2)
def test_a2_against_tableau_products(lam, mu):
    assert dict(tensor_decompose(A2, lam, mu)) == type_a_tensor(lam, mu)


@settings(max_examples=60, deadline=None)
@given(w2, w2, w2)
def test_total_order_translation_and_refinement(lam, mu, xi):
    c = total_order_cmp(A2, lam, mu)
    assert c == -total_order_cmp(A2, mu, lam)
    shifted = tuple(a + b for a, b in zip(lam, xi)), tuple(a + b for a, b in zip(mu, xi))
    assert total_order_cmp(A2, *shifted) == c
    if dominance_leq(A2, lam, mu) is Dominance.LESS:
        assert c < 0


@settings(max_examples=30, deadline=None)
@given(w2, w2, w2)
def test_duality_symmetry(xi, lam, mu):
    left = tensor_decompose(A2, lam, mu).get(xi, 0)
    right = tensor_decompose(A2, xi, dual_weight(A2, lam)).get(mu, 0)
    assert left == right


@settings(max_examples=30, deadline=None)
@given(w2)
def test_dual_is_dimension_preserving_involution(lam):
    d = dual_weight(A2, lam)
    assert dual_weight(A2, d) == lam and weyl_dim(A2, d) == weyl_dim(A2, lam)
