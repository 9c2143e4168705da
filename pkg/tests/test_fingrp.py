import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import closure, count_homs_brute
from redclass.errors import CapExceeded, ConsistencyError, ParseError, ValidationError
from redclass.fingrp import (FinGroup, GroupAction, automorphism_group, character_degrees,
                             count_orbits, cyclic_group, describe_group, dihedral_group,
                             enumerate_homs, group_from_generators, hom_orbits, orbits_direct,
                             parse_group, parse_permutations, symmetric_group, trivial_group)


@pytest.mark.parametrize("text,order", [("S4", 24), ("A4", 12), ("C6", 6), ("D4", 8),
                                        ("D3", 6), ("S1", 1), ("1", 1), ("(1 2);(1 2 3)", 6),
                                        ("(1 2)(3 4);(1 3)(2 4)", 4),
                                        ("(1 2),(3 4)", 2)])
def test_parse_group_orders(text, order):
    assert parse_group(text).order == order


def test_parse_permutations_one_based():
    gens = parse_permutations("(1 2 3);(4 5)")
    assert gens[0][:3] == (1, 2, 0)
    assert gens[1][3:5] == (4, 3)


@pytest.mark.parametrize("text", ["(1 2", "S", "(1 1)", "(0 1)", "(1 2);", "X4"])
def test_parse_errors_carry_position(text):
    with pytest.raises(ParseError) as exc:
        parse_group(text)
    assert "^" in str(exc.value) or text in ("S", "X4")


def test_composition_is_right_to_left():
    # (1 2)*(1 3): apply (1 3) first, so 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1
    G = group_from_generators(parse_permutations("(1 2);(1 3)"))
    a = G.perms.index((1, 0, 2))
    b = G.perms.index((2, 1, 0))
    assert G.perms[G.mul(a, b)] == (2, 0, 1)


def test_rejects_non_group_tables():
    with pytest.raises(ValidationError):
        FinGroup(np.array([[0, 1], [1, 1]]))


def test_group_order_cap():
    with pytest.raises(CapExceeded):
        symmetric_group(6)


@pytest.mark.parametrize("text,label", [("1", "1"), ("C2", "C2"), ("(1 2);(3 4)", "C2 x C2"),
                                        ("S3", "S3"), ("D4", "D4"), ("S4", "S4"), ("A4", "A4"),
                                        ("C6", "C6")])
def test_describe_group(text, label):
    assert describe_group(parse_group(text)) == label


def test_quaternion_is_recognized():
    Q = group_from_generators(parse_permutations("(1 2 3 4)(5 6 7 8);(1 5 3 7)(2 8 4 6)"))
    assert Q.order == 8 and describe_group(Q) == "Q8"


def test_closure_matches_oracle():
    gens = parse_permutations("(1 2 3 4);(1 2)")
    assert len(closure(gens)) == group_from_generators(gens).order == 24


@pytest.mark.parametrize("a,b", [("S3", "S3"), ("C4", "C2"), ("C2", "S3"), ("C3", "S3")])
def test_hom_counts_against_brute_force(a, b):
    H, K = parse_group(a), parse_group(b)
    assert len(enumerate_homs(H, K)) == count_homs_brute(H.table.tolist(), K.table.tolist())


@pytest.mark.parametrize("text,aut", [("S3", 6), ("S4", 24), ("C2", 1), ("(1 2);(3 4)", 6),
                                      ("D4", 8), ("C6", 2), ("A4", 24)])
def test_automorphism_group_orders(text, aut):
    A = automorphism_group(parse_group(text))
    assert A.group.order == aut
    assert A.action[A.group.identity].tolist() == list(range(parse_group(text).order))


# [DERIVED] character degrees by the Dixon method, checked by sum of squares and
# the number of linear characters
@pytest.mark.parametrize("text,degrees", [("1", [1]), ("C6", [1] * 6), ("S3", [1, 1, 2]),
                                          ("D4", [1, 1, 1, 1, 2]), ("A4", [1, 1, 1, 3]),
                                          ("S4", [1, 1, 2, 3, 3])])
def test_character_degrees(text, degrees):
    G = parse_group(text)
    d = character_degrees(G)
    assert d == degrees
    assert sum(x * x for x in d) == G.order
    assert len(d) == len(G.conjugacy_classes[0])


def test_character_degrees_a5():
    G = group_from_generators(parse_permutations("(1 2 3 4 5);(1 2 3)"))
    assert G.order == 60
    assert character_degrees(G) == [1, 3, 3, 4, 5]


def test_hom_orbits_stabilizers():
    H, K = parse_group("S3"), parse_group("S3")
    homs = enumerate_homs(H, K)
    orbs = hom_orbits(homs, K, automorphism_group(H))
    sizes = sorted(len(o.members) for o in orbs)
    # trivial; three maps onto C2; six isomorphisms
    assert sizes == [1, 3, 6]
    for o in orbs:
        assert len(o.members) * o.stabilizer.order == 36


def test_count_orbits_detects_inconsistency():
    C2 = cyclic_group(2)
    bad = GroupAction(C2, (0, 1), np.array([[0, 1, 2], [1, 0, 0]]))
    with pytest.raises(ConsistencyError):
        count_orbits(bad)


def test_trivial_group():
    T = trivial_group()
    assert T.order == 1 and T.exponent == 1 and character_degrees(T) == [1]


perm_st = st.permutations(list(range(5))).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.lists(perm_st, min_size=1, max_size=2))
def test_generated_groups_are_groups(gens):
    G = group_from_generators(gens)
    elems = closure(gens)
    assert G.order == len(elems)
    T = G.table
    # associativity on a slice; identity; inverses
    idx = np.arange(G.order)
    left = T[T[:, :, None], idx[None, None, :]]
    right = T[idx[:, None, None], T[None, :, :]]
    assert (left == right).all()
    assert (T[G.identity] == idx).all()
    assert (T[idx, G.inv] == G.identity).all()
    assert G.order % G.exponent == 0


@settings(max_examples=40, deadline=None)
@given(st.lists(perm_st, min_size=1, max_size=2))
def test_burnside_equals_direct_on_points(gens):
    G = group_from_generators(gens)
    table = np.array([list(p) for p in G.perms], dtype=np.int64)
    action = GroupAction(G, tuple(range(G.order)), table)
    action.check()
    assert count_orbits(action) == len(orbits_direct(action))


def test_dihedral_convention():
    assert dihedral_group(4).order == 8
    assert dihedral_group(3).order == 6
