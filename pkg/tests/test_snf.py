import numpy as np
from hypothesis import given, settings, strategies as st

from redclass.snf import (ModSNF, cokernel_mod, determinant, invariant_factors, kernel_mod,
                          smith_normal_form)

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-30, 30), min_size=c, max_size=c),
                           min_size=r, max_size=r)))


def test_small_example():
    D, U, V = smith_normal_form([[2, 4], [6, 8]])
    assert D == [[2, 0], [0, 4]]
    assert invariant_factors([[2, 4], [6, 8]]) == [2, 4]


def test_cartan_determinants():
    # [DERIVED] |det| of Cartan matrices by cofactor expansion
    assert determinant([[2, -1], [-1, 2]]) == 3
    assert determinant([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 4
    assert determinant([[2, -1, 0, 0], [-1, 2, -1, -1], [0, -1, 2, 0], [0, -1, 0, 2]]) == 4


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_form_certificate(M):
    A = np.array(M, dtype=object)
    D, U, V = smith_normal_form(M)
    assert (np.array(U, dtype=object) @ A @ np.array(V, dtype=object) == np.array(D)).all()
    diag = [D[i][i] for i in range(min(len(M), len(M[0])))]
    nz = [d for d in diag if d]
    assert all(d > 0 for d in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
    off = [D[i][j] for i in range(len(M)) for j in range(len(M[0])) if i != j]
    assert not any(off)


@settings(max_examples=100, deadline=None)
@given(matrices, st.sampled_from([2, 4, 6, 8, 12]))
def test_modular_smith_form(M, E):
    A = np.array(M, dtype=np.int64) % E
    S = ModSNF(A, E, left=True, right=True)
    S.check(A)
    d = [int(x) for x in S.diag]
    nz = [x for x in d if x % E]
    assert all(E % x == 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))


@settings(max_examples=60, deadline=None)
@given(matrices, st.sampled_from([2, 3, 4, 6]))
def test_kernel_mod_is_kernel(M, E):
    A = np.array(M, dtype=np.int64) % E
    gens = kernel_mod(A, E)[0]
    assert not ((A @ gens) % E).any()
    # size of the kernel by enumeration
    n = A.shape[1]
    vecs = np.array(np.meshgrid(*[np.arange(E)] * n, indexing="ij")).reshape(n, -1)
    size = int((((A @ vecs) % E) == 0).all(axis=0).sum())
    span = {tuple(np.zeros(n, dtype=np.int64))}
    frontier = list(span)
    while frontier:
        nxt = []
        for v in frontier:
            for j in range(gens.shape[1]):
                w = tuple((np.array(v) + gens[:, j]) % E)
                if w not in span:
                    span.add(w)
                    nxt.append(w)
        frontier = nxt
    assert len(span) == size


def test_cokernel_mod():
    orders, U, Uinv = cokernel_mod(np.array([[2], [0]]), 4)
    assert sorted(orders) == [2, 4]
