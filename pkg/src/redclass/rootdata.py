"""Semisimple root data in fundamental-weight coordinates.

Weights are integer row vectors in the basis of fundamental weights; the
simple root ``alpha_j`` is column ``j`` of the Cartan matrix, where
``C[i, j] = <alpha_j, alpha_i^vee>``.  The lattice ``X`` is the row span of a
basis matrix ``B`` (``B = I`` for simply connected, ``B = C^T`` for adjoint).
"""

from __future__ import annotations

import dataclasses
import functools
import json
import re
from fractions import Fraction

import numpy as np

from .abcoh import AbGroup, AbHModule, restrict_module, torsion_part
from .errors import ParseError, ScopeError, ValidationError
from .fingrp import FinGroup, group_from_maps
from .snf import determinant, smith_normal_form

__all__ = [
    "RootDatum", "OutData", "build_root_datum", "cartan_matrix", "parse_type",
    "cartan_determinant", "fundamental_group", "out_group", "center_torsion_module",
    "gram_matrix", "root_count",
]

_IRR = re.compile(r"([A-GT])(\d+)")


def parse_type(text):
    """Split ``"A2*B3"`` into ``[("A", 2), ("B", 3)]``; torus factors ``T<n>`` kept."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty Dynkin type", text, 0)
    out = []
    pos = 0
    for part in s.split("*"):
        m = _IRR.fullmatch(part)
        if not m:
            raise ParseError("expected an irreducible type like A2, D4, E6 or a torus T1",
                             s, pos)
        letter, n = m.group(1), int(m.group(2))
        ok = {"A": n >= 1, "B": n >= 2, "C": n >= 2, "D": n >= 4, "E": 6 <= n <= 8,
              "F": n == 4, "G": n == 2, "T": n >= 1}[letter]
        if not ok:
            raise ParseError(f"no irreducible type {letter}{n}", s, pos)
        out.append((letter, n))
        pos += len(part) + 1
    return out


def gram_matrix(letter, n):
    """Symmetric form on simple roots, scaled to be integral (Bourbaki order)."""
    G = np.zeros((n, n), dtype=np.int64)

    def bond(i, j, v):
        G[i, j] = G[j, i] = v

    if letter == "A":
        np.fill_diagonal(G, 2)
        for i in range(n - 1):
            bond(i, i + 1, -1)
    elif letter == "B":
        np.fill_diagonal(G, 2)
        G[n - 1, n - 1] = 1
        for i in range(n - 1):
            bond(i, i + 1, -1)
    elif letter == "C":
        np.fill_diagonal(G, 2)
        G[n - 1, n - 1] = 4
        for i in range(n - 2):
            bond(i, i + 1, -1)
        bond(n - 2, n - 1, -2)
    elif letter == "D":
        np.fill_diagonal(G, 2)
        for i in range(n - 2):
            bond(i, i + 1, -1)
        bond(n - 3, n - 1, -1)
    elif letter == "E":
        np.fill_diagonal(G, 2)
        bond(0, 2, -1)
        bond(1, 3, -1)
        for i in range(2, n - 1):
            bond(i, i + 1, -1)
    elif letter == "F":
        G[:] = np.diag([4, 4, 2, 2])
        bond(0, 1, -2)
        bond(1, 2, -2)
        bond(2, 3, -1)
    elif letter == "G":
        G[:] = np.diag([2, 6])
        bond(0, 1, -3)
    else:
        raise ValidationError(f"unknown type letter {letter}")
    return G


def cartan_matrix(letter, n):
    G = gram_matrix(letter, n)
    d = np.diag(G)
    C = 2 * G // d[:, None]
    if ((2 * G) % d[:, None]).any():
        raise ValidationError("Cartan entries are not integral")
    return C


def root_count(letter, n):
    return {"A": n * (n + 1), "B": 2 * n * n, "C": 2 * n * n, "D": 2 * n * (n - 1),
            "E": {6: 72, 7: 126, 8: 240}.get(n, 0), "F": 48, "G": 12}[letter]


def _block_diag(blocks):
    n = sum(b.shape[0] for b in blocks)
    out = np.zeros((n, n), dtype=np.int64)
    k = 0
    for b in blocks:
        m = b.shape[0]
        out[k:k + m, k:k + m] = b
        k += m
    return out


def _inverse_rational(M):
    n = len(M)
    A = [[Fraction(int(x)) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [x / piv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [row[n:] for row in A]


@dataclasses.dataclass(frozen=True, eq=False)
class RootDatum:
    """Semisimple root datum; ``basis`` rows span ``X`` in weight coordinates."""

    label: str
    components: tuple
    cartan: np.ndarray
    gram: np.ndarray
    basis: np.ndarray
    lattice_label: str = "sc"

    @property
    def rank(self):
        return self.cartan.shape[0]

    @property
    def simple_roots(self):
        """Rows: simple roots in fundamental-weight coordinates."""
        return self.cartan.T.copy()

    @functools.cached_property
    def basis_inverse(self):
        return _inverse_rational(self.basis.tolist())

    def to_lattice(self, weight):
        """Coordinates of a weight with respect to the basis of ``X``
        (as Fractions; integral iff the weight lies in ``X``)."""
        Binv = self.basis_inverse
        n = self.rank
        return [sum(Fraction(int(weight[i])) * Binv[i][j] for i in range(n)) for j in range(n)]

    @property
    def simple_roots_in_X(self):
        Rc = [[int(c) for c in self.to_lattice(a)] for a in self.simple_roots]
        return np.array(Rc, dtype=np.int64)

    @property
    def simple_coroots(self):
        """Rows: coroots in the dual basis of ``X``."""
        return self.basis.T.copy()

    def pairing(self, x, coroot):
        return int(np.dot(x, coroot))

    @functools.cached_property
    def roots(self):
        """All roots in weight coordinates, generated by simple reflections."""
        C = self.cartan
        seen = {tuple(int(v) for v in a) for a in self.simple_roots}
        frontier = list(seen)
        while frontier:
            nxt = []
            for lam in frontier:
                for i in range(self.rank):
                    a = C[:, i]
                    mu = tuple(int(v) for v in np.array(lam) - lam[i] * a)
                    if mu not in seen:
                        seen.add(mu)
                        nxt.append(mu)
            frontier = nxt
        return sorted(seen)

    @property
    def symmetrizer(self):
        """``d_i`` with ``(alpha_i, alpha_j) = d_i C_ij`` (as Fractions)."""
        return [Fraction(int(self.gram[i, i]), 2) for i in range(self.rank)]

    def validate(self):
        C, n = self.cartan, self.rank
        expected = _block_diag([cartan_matrix(l, k) for l, k in self.components])
        if (C != expected).any():
            raise ValidationError("Cartan matrix does not match the declared type")
        Rx = self.simple_roots_in_X
        if any(any(f.denominator != 1 for f in self.to_lattice(a)) for a in self.simple_roots):
            raise ValidationError("lattice does not contain the root lattice")
        cor = self.simple_coroots
        for i in range(n):
            if int(np.dot(Rx[i], cor[i])) != 2:
                raise ValidationError("<alpha, alpha^vee> != 2")
            for j in range(n):
                if int(np.dot(Rx[j], cor[i])) != int(C[i, j]):
                    raise ValidationError("pairing disagrees with the Cartan matrix")
        if n <= 8:
            roots = set(self.roots)
            for lam in roots:
                for i in range(n):
                    mu = tuple(int(v) for v in np.array(lam) - lam[i] * C[:, i])
                    if mu not in roots:
                        raise ValidationError("simple reflections do not permute the roots")
            if len(roots) != sum(root_count(l, k) for l, k in self.components):
                raise ValidationError("root count does not match the type")
        if determinant(self.basis.tolist()) == 0:
            raise ValidationError("lattice basis is singular")


def build_root_datum(type_text, lattice="sc"):
    """Root datum of the given semisimple type and lattice ("sc", "ad", or basis rows)."""
    comps = parse_type(type_text)
    if any(l == "T" for l, _ in comps):
        raise ScopeError(
            "positive-dimensional central torus: the outer automorphism group is then "
            "infinite (integral representations of H), which is out of scope; "
            "pass the semisimple part only")
    C = _block_diag([cartan_matrix(l, k) for l, k in comps])
    G = _block_diag([gram_matrix(l, k) for l, k in comps])
    n = C.shape[0]
    if isinstance(lattice, str) and lattice.strip() in ("sc", "ad"):
        B = np.eye(n, dtype=np.int64) if lattice.strip() == "sc" else C.T.copy()
        lab = lattice.strip()
    else:
        if isinstance(lattice, str):
            try:
                lattice = json.loads(lattice)
            except json.JSONDecodeError as exc:
                raise ParseError(f"lattice must be 'sc', 'ad' or a JSON matrix ({exc.msg})",
                                 lattice, exc.pos) from None
        B = np.array(lattice)
        if B.shape != (n, n) or B.dtype.kind not in "iu":
            raise ValidationError(f"lattice basis must be an integer {n}x{n} matrix")
        B = B.astype(np.int64)
        lab = "custom"
    label = "*".join(f"{l}{k}" for l, k in comps)
    rd = RootDatum(label, tuple(comps), C, G, B, lab)
    rd.validate()
    return rd


def cartan_determinant(rd):
    return int(determinant(rd.cartan.tolist()))


@dataclasses.dataclass(frozen=True)
class FundamentalGroup:
    """``Lambda = X / Z[Phi]`` with the quotient map ``x -> (x V)[keep] mod d``."""

    group: AbGroup
    V: np.ndarray
    keep: tuple

    def project(self, x):
        q = np.asarray(x, dtype=np.int64) @ self.V
        return self.group.reduce(q[list(self.keep)]) if self.keep else np.zeros(0, dtype=np.int64)


def fundamental_group(rd):
    D, U, V = smith_normal_form(rd.simple_roots_in_X.tolist())
    n = rd.rank
    diag = [abs(D[i][i]) for i in range(n)]
    if any(d == 0 for d in diag):
        raise ScopeError("root lattice has infinite index: not semisimple")
    keep = tuple(i for i, d in enumerate(diag) if d > 1)
    return FundamentalGroup(AbGroup(tuple(diag[i] for i in keep)),
                            np.array(V, dtype=np.int64), keep)


@dataclasses.dataclass
class OutData:
    """Diagram automorphisms stabilizing ``X``.

    ``perms[g][i]`` is the image of node ``i``; ``weight_mats[g]`` acts on
    weight row vectors (``lam -> lam @ P``); ``lattice_mats[g]`` likewise on
    ``X`` coordinates; ``center`` is the module of ``Out`` on the centre model.
    """

    group: FinGroup
    perms: list
    weight_mats: np.ndarray
    lattice_mats: np.ndarray
    fundamental: FundamentalGroup
    lambda_mats: np.ndarray     # column convention on Lambda
    center: AbHModule           # dual of Lambda, column convention

    def act_weight(self, g, lam):
        return tuple(int(v) for v in np.asarray(lam, dtype=np.int64) @ self.weight_mats[g])


def _diagram_perms(C):
    n = C.shape[0]
    # prune by degree signatures before testing all bijections
    sig = [tuple(sorted(C[i])) + tuple(sorted(C[:, i])) for i in range(n)]
    options = [[j for j in range(n) if sig[j] == sig[i]] for i in range(n)]
    out = []

    def rec(i, used, sigma):
        if i == n:
            out.append(tuple(sigma))
            return
        for j in options[i]:
            if j in used:
                continue
            if all(C[j, sigma[k]] == C[i, k] and C[sigma[k], j] == C[k, i] for k in range(i)):
                sigma.append(j)
                used.add(j)
                rec(i + 1, used, sigma)
                used.discard(j)
                sigma.pop()

    rec(0, set(), [])
    return out


def out_group(rd):
    n = rd.rank
    B = rd.basis
    Binv = rd.basis_inverse
    keep = []
    for sigma in _diagram_perms(rd.cartan):
        P = np.zeros((n, n), dtype=np.int64)
        for i, j in enumerate(sigma):
            P[i, j] = 1
        # x -> x B P B^{-1} on X coordinates
        BP = B @ P
        M = [[sum(Fraction(int(BP[i, k])) * Binv[k][j] for k in range(n)) for j in range(n)]
             for i in range(n)]
        if all(f.denominator == 1 for row in M for f in row):
            keep.append((sigma, P, np.array([[int(f) for f in row] for row in M], dtype=np.int64)))
    ident = tuple(range(n))
    keep.sort(key=lambda t: (t[0] != ident, t[0]))
    perms = [k[0] for k in keep]
    grp, _ = group_from_maps(perms, n)
    # group_from_maps composes (a*b)(i) = a(b(i)), matching left action on weights
    W = np.array([k[1] for k in keep], dtype=np.int64)
    L = np.array([k[2] for k in keep], dtype=np.int64)
    fg = fundamental_group(rd)
    r = fg.group.rank
    V = np.array(fg.V, dtype=np.int64)
    Vinv = np.array([[int(f) for f in row] for row in _inverse_rational(V.tolist())],
                    dtype=np.int64)
    kk = list(fg.keep)
    lam = np.zeros((len(perms), r, r), dtype=np.int64)
    for g in range(len(perms)):
        N = Vinv @ L[g] @ V
        lam[g] = N[np.ix_(kk, kk)].T
    base = fg.group
    lam_mod = AbHModule(base, grp, lam)
    d = base.factors
    cen = np.zeros_like(lam)
    for g in range(len(perms)):
        Nt = lam[int(grp.inv[g])]   # column convention: N_{g^-1}^T
        N = Nt.T
        for i in range(r):
            for j in range(r):
                num = d[i] * int(N[i, j])
                if num % d[j]:
                    raise ValidationError("Lambda action is not well defined")
                cen[g, i, j] = num // d[j]
    center = AbHModule(base, grp, cen)
    return OutData(grp, perms, W, L, fg, lam_mod.matrices, center)


def torsion_out_module(out, k, p=0):
    """``t_k`` of the centre model (prime-to-``p`` part) as an ``Out``-module."""
    T, J = torsion_part(out.center.base, k, p)
    return restrict_module(out.center, T, J)


def center_torsion_module(rd, coupling, k, p=0, out=None):
    """``t_k`` of the centre (prime-to-``p`` part) as a module over the
    coupling's source, acting through ``Out``."""
    out = out or out_group(rd)
    if coupling.target.order != out.group.order or \
            not np.array_equal(coupling.target.table, out.group.table):
        raise ValidationError("coupling target is not the out group of this datum")
    tmod = torsion_out_module(out, k, p)
    mats = tmod.matrices[np.asarray(coupling.images, dtype=np.int64)]
    return AbHModule(tmod.base, coupling.source, mats)
