"""Finite abelian H-modules and second cohomology.

Modules are ``Z/d1 + ... + Z/dr`` with ``d1 | ... | dr``; group elements act
by integer matrices on column vectors, with ``A[gh] = A[g] @ A[h]``.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
import re

import numpy as np

from . import caps
from .errors import ConsistencyError, ParseError, PreconditionError, ValidationError
from .snf import cokernel_mod, kernel_mod, smith_normal_form
from .snf import smith_normal_form as _snf

__all__ = [
    "AbGroup", "AbHModule", "CohomologyGroup", "smith_normal_form",
    "torsion_part", "h2", "act_on_h2", "h2_action_matrix", "trivial_module",
    "parse_abgroup", "module_from_generators", "linear_map_kernel_size",
]


@dataclasses.dataclass(frozen=True)
class AbGroup:
    """Finite abelian group in invariant-factor form."""

    factors: tuple = ()

    def __post_init__(self):
        f = tuple(int(d) for d in self.factors)
        object.__setattr__(self, "factors", f)
        if any(d < 2 for d in f):
            raise ValidationError(f"invariant factors must be at least 2: {f}")
        if any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValidationError(f"invariant factors must form a divisibility chain: {f}")

    @classmethod
    def from_cyclic_orders(cls, orders):
        """Canonical form of ``sum Z/n_i`` for arbitrary orders."""
        orders = [int(n) for n in orders if int(n) != 1]
        if not orders:
            return cls(())
        D, _, _ = _snf(np.diag(orders).tolist())
        diag = [abs(D[i][i]) for i in range(len(orders))]
        return cls(tuple(d for d in diag if d > 1))

    @property
    def rank(self):
        return len(self.factors)

    @property
    def order(self):
        return math.prod(self.factors)

    @property
    def exponent(self):
        return self.factors[-1] if self.factors else 1

    def elements(self):
        """All elements as an ``(order, rank)`` array in lexicographic order."""
        caps.check("h2_materialize", self.order, "group too large to enumerate")
        if not self.factors:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.meshgrid(*[np.arange(d) for d in self.factors], indexing="ij")
        return np.stack([g.ravel() for g in grids], axis=1).astype(np.int64)

    def index(self, vecs):
        """Row index in ``elements()`` of each coordinate vector."""
        vecs = np.atleast_2d(np.asarray(vecs, dtype=np.int64))
        idx = np.zeros(vecs.shape[0], dtype=np.int64)
        for i, d in enumerate(self.factors):
            idx = idx * d + vecs[:, i] % d
        return idx

    def reduce(self, vec):
        return np.asarray(vec, dtype=np.int64) % np.array(self.factors, dtype=np.int64)

    def __str__(self):
        if not self.factors:
            return "1"
        return " x ".join(f"C{d}" for d in self.factors)

    def power_notation(self):
        """Compact label such as ``C2^6`` or ``C2 x C4``."""
        if not self.factors:
            return "1"
        parts = []
        for d, grp in itertools.groupby(self.factors):
            k = len(list(grp))
            parts.append(f"C{d}" if k == 1 else f"C{d}^{k}")
        return " x ".join(parts)


_AB_TOKEN = re.compile(r"\s*(?:C(\d+)(?:\^(\d+))?|(1))\s*")


def parse_abgroup(text):
    """Parse ``"C2 x C2 x C4"``, ``"C2^3"``, ``"C2xC2"`` or ``"1"``."""
    s = text.strip()
    if s.lower() in ("", "1", "trivial"):
        return AbGroup(())
    orders = []
    pos = 0
    for part in re.split(r"[x*]", s):
        m = _AB_TOKEN.fullmatch(part)
        if not m:
            raise ParseError("expected factors like C2, C4^2 separated by 'x'", text,
                             text.find(part.strip(), pos))
        pos += len(part) + 1
        if m.group(3):
            continue
        n = int(m.group(1))
        k = int(m.group(2) or 1)
        if n < 1:
            raise ParseError("cyclic order must be positive", text, pos - len(part) - 1)
        orders += [n] * k
    return AbGroup.from_cyclic_orders(orders)


def _compatible(mat, factors):
    """``mat`` induces a well-defined endomorphism of ``sum Z/d_i``."""
    for i, di in enumerate(factors):
        for j, dj in enumerate(factors):
            if (int(mat[i, j]) * dj) % di:
                return False
    return True


class AbHModule:
    """A finite abelian group with a left action of a FinGroup."""

    def __init__(self, base, group, matrices, check=True):
        self.base = base
        self.group = group
        r = base.rank
        mats = np.asarray(matrices, dtype=np.int64).reshape(group.order, r, r)
        mod = np.array(base.factors, dtype=np.int64).reshape(r, 1) if r else None
        if r:
            mats = mats % mod[None, :, :]
        self.matrices = mats
        self.matrices.setflags(write=False)
        if check:
            self.validate()

    @property
    def factors(self):
        return self.base.factors

    def act(self, g, vec):
        return self.base.reduce(self.matrices[g] @ np.asarray(vec, dtype=np.int64))

    def is_trivial(self):
        r = self.base.rank
        return bool((self.matrices == np.eye(r, dtype=np.int64)[None]).all())

    def validate(self):
        G, A, r = self.group, self.matrices, self.base.rank
        if r == 0:
            return
        mod = np.array(self.factors, dtype=np.int64).reshape(r, 1)
        eye = np.eye(r, dtype=np.int64)
        if ((A[G.identity] - eye) % mod).any():
            raise ValidationError("identity does not act as the identity matrix")
        for g in range(G.order):
            if not _compatible(A[g], self.factors):
                raise ValidationError(f"action matrix of element {g} ignores the invariant factors")
        pairs = (itertools.product(range(G.order), repeat=2) if G.order <= 64
                 else itertools.product(range(G.order), G.generators))
        for g, h in pairs:
            if ((A[G.table[g, h]] - A[g] @ A[h]) % mod).any():
                raise ValidationError("action matrices do not form a homomorphism")

    def __repr__(self):
        return f"AbHModule({self.base}, |H|={self.group.order})"


def trivial_module(group, base):
    r = base.rank
    mats = np.broadcast_to(np.eye(r, dtype=np.int64), (group.order, r, r))
    return AbHModule(base, group, mats, check=False)


def module_from_generators(group, base, gen_matrices):
    """Extend matrices given on ``group.generators`` along the BFS tree."""
    r = base.rank
    gen_matrices = [np.asarray(m, dtype=np.int64).reshape(r, r) for m in gen_matrices]
    if len(gen_matrices) != len(group.generators):
        raise ValidationError(
            f"need {len(group.generators)} generator matrices, got {len(gen_matrices)}")
    parent, via, order = group.spanning_tree
    mats = np.zeros((group.order, r, r), dtype=np.int64)
    mats[group.identity] = np.eye(r, dtype=np.int64)
    mod = np.array(base.factors, dtype=np.int64).reshape(r, 1) if r else 1
    for x in order[1:]:
        mats[x] = mats[parent[x]] @ gen_matrices[via[x]] % mod
    return AbHModule(base, group, mats)


def torsion_part(A, k, p=0):
    """Elements killed by ``k``, with the ``p``-primary part removed.

    Returns ``(T, J)``: ``T`` an AbGroup and ``J`` the ``rank(A) x rank(T)``
    inclusion matrix (columns are images of the generators of ``T``).
    """
    keep = []
    for i, d in enumerate(A.factors):
        g = math.gcd(k, d)
        if p:
            while g % p == 0:
                g //= p
        if g > 1:
            keep.append((i, g))
    T = AbGroup(tuple(g for _, g in keep))
    J = np.zeros((A.rank, T.rank), dtype=np.int64)
    for col, (i, g) in enumerate(keep):
        J[i, col] = A.factors[i] // g
    return T, J


def restrict_module(M, T, J):
    """Action of ``M`` restricted to an invariant subgroup ``J: T -> M.base``."""
    n = M.group.order
    r = T.rank
    mats = np.zeros((n, r, r), dtype=np.int64)
    scale = np.array([J[:, c].max() for c in range(r)], dtype=np.int64)
    rows = [int(np.nonzero(J[:, c])[0][0]) for c in range(r)]
    for g in range(n):
        img = M.matrices[g] @ J  # columns in M coordinates
        img %= np.array(M.factors, dtype=np.int64).reshape(-1, 1)
        if r and (np.delete(img, rows, axis=0) != 0).any():
            raise ValidationError("subgroup is not invariant under the action")
        for c in range(r):
            col = img[rows, c]
            if (col % scale).any():
                raise ValidationError("subgroup is not invariant under the action")
            mats[g, :, c] = (col // scale) % np.array(T.factors)
    return AbHModule(T, M.group, mats)


def linear_map_kernel_size(mat, factors):
    """Number of ``x`` in ``sum Z/d_i`` with ``mat @ x = 0`` (square ``mat``).

    For an endomorphism of a finite group, |kernel| = |cokernel|, and the
    cokernel is presented by ``[diag(d) | mat]``.
    """
    r = len(factors)
    if r == 0:
        return 1
    E = factors[-1]
    P = np.concatenate([np.diag(factors), np.asarray(mat, dtype=np.int64)], axis=1) % E
    orders, _, _ = cokernel_mod(P, E)
    return math.prod(orders)


# -- second cohomology -----------------------------------------------------

@dataclasses.dataclass
class _CochainSetup:
    """Coordinates of normalized 2-cochains restricted to ``(x, s)``."""

    n: int
    r: int
    gens: tuple
    E: int
    col_index: np.ndarray   # (n, |S|, r) -> column or -1 when x is identity
    lift: np.ndarray        # (n, n, r, N) full cochain as linear map of F


def _setup(M):
    G = M.group
    n, r = G.order, M.base.rank
    gens = G.generators
    E = M.base.exponent
    col = np.full((n, len(gens), r), -1, dtype=np.int64)
    N = 0
    for x in range(n):
        if x == G.identity:
            continue
        for j in range(len(gens)):
            for i in range(r):
                col[x, j, i] = N
                N += 1
    parent, via, order = G.spanning_tree
    lift = np.zeros((n, n, r, N), dtype=np.int64)
    for x in range(n):
        if x == G.identity:
            continue
        for j in range(len(gens)):
            for i in range(r):
                lift[x, gens[j], i, col[x, j, i]] = 1
    A = M.matrices
    xs = np.arange(n)
    for y in order[1:]:
        p, j = int(parent[y]), int(via[y])
        s = gens[j]
        if p == G.identity:
            continue
        # f(x, p s) = f(x, p) + f(x p, s) - x . f(p, s)
        term = lift[:, p] + lift[G.table[xs, p], s]
        term = term - np.einsum("xab,bn->xan", A, lift[p, s])
        lift[:, y] = term % E
    lift[G.identity] = 0
    return _CochainSetup(n, r, gens, E, col, lift)


def _scale_rows(mat, factors, E):
    # row i of coordinate i is an equation mod d_i; rescale to mod E
    r = len(factors)
    sc = np.array([E // d for d in factors], dtype=np.int64)
    rows = mat.reshape(-1, r, mat.shape[-1])
    return (rows * sc[None, :, None] % E).reshape(-1, mat.shape[-1])


class CohomologyGroup:
    """H^2(H, M) with representative cocycles and a coordinate map."""

    def __init__(self, module, structure, representatives, coord_fn):
        self.module = module
        self.structure = structure
        self.representatives = representatives
        self._coord = coord_fn

    @property
    def order(self):
        return self.structure.order

    def coordinates(self, cocycle):
        """Class coordinates of a normalized 2-cocycle ``(n, n, r)`` array."""
        return self._coord(np.asarray(cocycle, dtype=np.int64))

    def cocycle(self, coords):
        """A representative cocycle of the class with the given coordinates."""
        out = np.zeros_like(self.representatives[0]) if self.representatives else \
            np.zeros((self.module.group.order,) * 2 + (self.module.base.rank,), dtype=np.int64)
        for c, rep in zip(coords, self.representatives):
            out = out + int(c) * rep
        return out % np.array(self.module.factors or (1,), dtype=np.int64)

    def elements(self):
        return self.structure.elements()

    def __repr__(self):
        return f"CohomologyGroup({self.structure})"


def cocycle_defect(M, f):
    """Maximal violation count of the 2-cocycle identity (0 means cocycle)."""
    G = M.group
    n = G.order
    t = G.table
    mod = np.array(M.factors, dtype=np.int64)
    # x.f(y,z) - f(xy,z) + f(x,yz) - f(x,y)
    xf = np.einsum("xab,yzb->xyza", M.matrices, f)
    fxy_z = f[t]                      # [x, y] -> f(xy, .), shape (n, n, n, r)
    f_x_yz = f[np.arange(n)[:, None, None], t[None, :, :]]  # f(x, yz)
    fxy = f[:, :, None, :]
    d = (xf - fxy_z + f_x_yz - fxy) % mod
    return int((d != 0).any(axis=-1).sum())


def is_normalized(M, f):
    e = M.group.identity
    return not (f[e].any() or f[:, e].any())


def h2(H, M):
    """Second cohomology of ``H`` with coefficients in ``M``.

    Normalized cochains are parametrized by ``F(x, s)`` for ``x != 1`` and
    ``s`` a generator; the full cochain follows from the cocycle identity
    along the BFS tree, and cocycles are the solutions of the identity at
    ``(x, y, s)``.
    """
    if M.group is not H and M.group.order != H.order:
        raise ValidationError("module is over a different group")
    caps.check("group_order", H.order)
    n, r = H.order, M.base.rank
    if r == 0 or n == 1:
        return CohomologyGroup(M, AbGroup(()), [], lambda f: ())
    S = _setup(M)
    E, gens, lift = S.E, S.gens, S.lift
    N = lift.shape[-1]
    t = H.table
    factors = M.factors
    xs = [x for x in range(n) if x != H.identity]
    xi = np.array(xs)
    # d2 at (x, y, s): x.f(y,s) - f(xy,s) + f(x,ys) - f(x,y)
    blocks = []
    for s in gens:
        xf = np.einsum("xab,ybn->xyan", M.matrices[xi], lift[xi, s])
        f_xy_s = lift[t[np.ix_(xi, xi)], s]
        f_x_ys = lift[xi[:, None], t[xi, s][None, :]]
        f_x_y = lift[np.ix_(xi, xi)]
        blocks.append((xf - f_xy_s + f_x_ys - f_x_y) % E)
    D2 = np.concatenate([b.reshape(-1, r, N) for b in blocks], axis=0).reshape(-1, N)
    D2 = _scale_rows(D2, factors, E)
    D2 = D2[D2.any(axis=1)]
    if D2.shape[0] == 0:
        D2 = np.zeros((1, N), dtype=np.int64)
    _, V, Vinv, orders = kernel_mod(D2, E)
    # coboundaries of normalized 1-cochains c, restricted to (x, s)
    col = S.col_index
    B = np.zeros((N, (n - 1) * r), dtype=np.int64)
    bcol = 0
    for g in xs:
        for i in range(r):
            c = np.zeros((n, r), dtype=np.int64)
            c[g, i] = 1
            for j, s in enumerate(gens):
                # dc(x, s) = x.c(s) - c(xs) + c(x)
                vals = (M.matrices[:, :, :] @ c[s]) - c[t[:, s]] + c
                for x in xs:
                    B[col[x, j], bcol] = (B[col[x, j], bcol] + vals[x]) % E
            bcol += 1
    # coordinate i only lives mod d_i
    Drel = np.zeros((N, N), dtype=np.int64)
    for x in xs:
        for j in range(len(gens)):
            for i in range(r):
                Drel[col[x, j, i], col[x, j, i]] = factors[i]
    rel = np.concatenate([B, Drel], axis=1) % E
    # pass to kernel coordinates z: y = Vinv f, y_k = (E/g_k) z_k
    y = Vinv @ rel % E
    scale = np.array([E // g for g in orders], dtype=np.int64)
    if (y % scale[:, None]).any():
        raise ConsistencyError("coboundaries do not lie in the cocycle kernel")
    z = y // scale[:, None]
    P = np.concatenate([np.diag(orders).astype(np.int64), z % E], axis=1) % E
    qorders, U, Uinv = cokernel_mod(P, E)
    nontriv = [k for k, d in enumerate(qorders) if d > 1]
    structure_raw = [qorders[k] for k in nontriv]
    # the chain from the SNF is already d1 | d2 | ...
    structure = AbGroup(tuple(structure_raw))
    reps = []
    for k in nontriv:
        zk = Uinv[:, k] % E
        fk = V @ (zk * scale % E) % E
        full = np.einsum("xyin,n->xyi", lift, fk) % np.array(factors, dtype=np.int64)
        reps.append(full)

    mod_f = np.array(factors, dtype=np.int64)
    sel = [k for k in nontriv]

    def coords(f):
        if f.shape != (n, n, r):
            raise ValidationError(f"cocycle must have shape {(n, n, r)}")
        F = np.zeros(N, dtype=np.int64)
        for x in xs:
            for j, s in enumerate(gens):
                F[col[x, j]] = f[x, s] % mod_f
        yy = Vinv @ F % E
        if (yy % scale).any():
            raise ValidationError("not a normalized 2-cocycle")
        c = U @ (yy // scale) % E
        return tuple(int(c[k]) % qorders[k] for k in sel)

    result = CohomologyGroup(M, structure, reps, coords)
    for rep in reps:
        if cocycle_defect(M, rep) or not is_normalized(M, rep):
            raise ConsistencyError("representative fails the cocycle identity")
    if structure.exponent and n % structure.exponent:
        raise ConsistencyError("exponent of H^2 does not divide |H|")
    return result


def _check_pair(M, gamma, delta):
    G = M.group
    dinv = np.argsort(np.asarray(delta))
    mod = np.array(M.factors, dtype=np.int64).reshape(-1, 1)
    for h in range(G.order):
        lhs = gamma @ M.matrices[dinv[h]]
        rhs = M.matrices[h] @ gamma
        if ((lhs - rhs) % mod).any():
            raise PreconditionError(
                "pair does not stabilize the coupling datum: gamma A(delta^-1 h) != A(h) gamma")


def transport_cocycle(M, gamma, delta, f):
    """``(x, y) -> gamma f(delta^-1 x, delta^-1 y)``."""
    dinv = np.argsort(np.asarray(delta))
    g = f[np.ix_(dinv, dinv)]
    out = np.einsum("ab,xyb->xya", np.asarray(gamma, dtype=np.int64), g)
    return out % np.array(M.factors, dtype=np.int64)


def h2_action_matrix(coh, gamma, delta, check=True):
    """Matrix of the induced automorphism on class coordinates (columns are
    images of the generators)."""
    M = coh.module
    gamma = np.asarray(gamma, dtype=np.int64).reshape(M.base.rank, M.base.rank)
    if check:
        if not _compatible(gamma, M.factors):
            raise PreconditionError("gamma is not an endomorphism of the module")
        _check_pair(M, gamma, delta)
    cols = [coh.coordinates(transport_cocycle(M, gamma, delta, rep))
            for rep in coh.representatives]
    k = coh.structure.rank
    return np.array(cols, dtype=np.int64).reshape(k, k).T


def act_on_h2(coh, pair, cls):
    """Image of the class ``cls`` (coordinates) under ``(gamma, delta)``."""
    gamma, delta = pair
    T = h2_action_matrix(coh, gamma, delta)
    v = np.asarray(cls, dtype=np.int64)
    if coh.structure.rank == 0:
        return ()
    return tuple(int(c) for c in coh.structure.reduce(T @ v))
