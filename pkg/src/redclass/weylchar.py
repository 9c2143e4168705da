"""Weights, Weyl groups and tensor products for a semisimple root datum.

Weights are tuples of integers in the fundamental-weight basis.
"""

from __future__ import annotations

import enum
import threading
from fractions import Fraction

import numpy as np

from . import caps
from .errors import PreconditionError, ValidationError

__all__ = [
    "WeightChar", "Dominance", "WeylData", "weyl_data", "dominance_leq", "total_order_cmp",
    "dual_weight", "weyl_dim", "tensor_decompose", "lowest_term", "diagram_orbit",
    "dominant_weights_upto", "set_height_mode",
]


class Dominance(enum.Enum):
    LESS = "less"
    INCOMPARABLE = "incomparable"
    GREATER_OR_EQUAL = "greater-or-equal"


# height functional: "root-dot-rho" (default) or "coroot-rho" (<lambda, 2 rho^vee>)
_HEIGHT_MODE = {"mode": "root-dot-rho"}


def set_height_mode(mode):
    """Choose the linear functional used by :func:`total_order_cmp`."""
    if mode not in ("root-dot-rho", "coroot-rho"):
        raise ValueError(f"unknown height mode {mode!r}")
    _HEIGHT_MODE["mode"] = mode


class WeightChar(dict):
    """Finitely supported map dominant weight -> integer multiplicity."""

    def __init__(self, items=None):
        super().__init__()
        if items:
            for k, v in dict(items).items():
                self.add(k, v)

    def add(self, weight, mult):
        w = tuple(int(x) for x in weight)
        v = self.get(w, 0) + int(mult)
        if v:
            self[w] = v
        else:
            self.pop(w, None)

    def __add__(self, other):
        out = WeightChar(self)
        for k, v in other.items():
            out.add(k, v)
        return out

    def scaled(self, c):
        return WeightChar({k: c * v for k, v in self.items()})

    def sorted_items(self, wd=None):
        if wd is None:
            return sorted(self.items())
        return sorted(self.items(), key=lambda kv: wd.sort_key(kv[0]))


class WeylData:
    """Cached Weyl-group data for one Cartan matrix."""

    def __init__(self, rd):
        self.rd = rd
        C = np.asarray(rd.cartan, dtype=np.int64)
        self.C = C
        self.n = C.shape[0]
        self.d = rd.symmetrizer
        n = self.n
        self.Cinv = _rational_inverse(C)  # weight -> simple-root coordinates: lam @ Cinv^T
        # rho = sum of fundamental weights
        self.rho = (1,) * n
        self.positive_roots = self._positive_roots()
        self._lock = threading.Lock()
        self._weights_cache = {}

    # -- coordinates ----------------------------------------------------
    def root_coords(self, lam):
        """Coordinates of ``lam`` in the basis of simple roots (Fractions)."""
        # lam = sum_j c_j alpha_j and alpha_j = column j of C  =>  c = Cinv lam
        return [sum(self.Cinv[i][j] * int(lam[j]) for j in range(self.n)) for i in range(self.n)]

    def form(self, lam, mu):
        """Invariant form with ``(alpha_i, alpha_j) = d_i C_ij``."""
        a = self.root_coords(lam)
        # (lam, mu) = sum_i a_i (alpha_i, mu) = sum_i a_i d_i mu_i
        return sum(a[i] * self.d[i] * int(mu[i]) for i in range(self.n))

    def reflect(self, lam, i):
        lam = list(lam)
        k = lam[i]
        return tuple(lam[j] - k * int(self.C[j, i]) for j in range(self.n))

    def _positive_roots(self):
        n = self.n
        simple = [tuple(int(v) for v in self.C[:, j]) for j in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for lam in frontier:
                for i in range(n):
                    mu = self.reflect(lam, i)
                    if mu not in seen:
                        seen.add(mu)
                        nxt.append(mu)
            frontier = nxt
        pos = [r for r in seen if all(c >= 0 for c in self.root_coords(r))]
        return sorted(pos)

    def height(self, lam):
        mode = _HEIGHT_MODE["mode"]
        a = self.root_coords(lam)
        if mode == "root-dot-rho":
            r = self.root_coords(self.rho)
            return sum(x * y for x, y in zip(a, r))
        # <lam, 2 rho^vee> = 2 * sum of simple-root coordinates
        return 2 * sum(a)

    def sort_key(self, lam):
        return (self.height(lam), tuple(int(x) for x in lam))

    # -- Weyl group ------------------------------------------------------
    def to_dominant(self, lam):
        """``(dominant weight, parity of reflections used)``."""
        lam = tuple(int(x) for x in lam)
        parity = 0
        while True:
            for i in range(self.n):
                if lam[i] < 0:
                    lam = self.reflect(lam, i)
                    parity ^= 1
                    break
            else:
                return lam, parity

    def orbit(self, lam):
        lam = tuple(int(x) for x in lam)
        seen = {lam}
        frontier = [lam]
        limit = caps.CAPS.weight_orbit
        while frontier:
            nxt = []
            for mu in frontier:
                for i in range(self.n):
                    if mu[i] == 0:
                        continue
                    nu = self.reflect(mu, i)
                    if nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
                        if len(seen) > limit:
                            caps.check("weight_orbit", len(seen),
                                       "Weyl orbit too large; raise weight_orbit in REDCLASS_CAPS")
            frontier = nxt
        return seen

    def longest_element_image(self, lam):
        """``w0(lam)``: the antidominant element of the orbit of dominant ``lam``."""
        mu = tuple(-x for x in lam)
        dom, _ = self.to_dominant(mu)
        return tuple(-x for x in dom)

    # -- characters -------------------------------------------------------
    def dominant_weights_of(self, lam):
        """Dominant weights ``mu <= lam`` (same coset of the root lattice)."""
        lam = tuple(int(x) for x in lam)
        seen = {lam}
        frontier = [lam]
        out = [lam]
        pos = self.positive_roots
        while frontier:
            nxt = []
            for mu in frontier:
                for a in pos:
                    nu = tuple(m - x for m, x in zip(mu, a))
                    if all(c >= 0 for c in nu) and nu not in seen:
                        seen.add(nu)
                        nxt.append(nu)
                        out.append(nu)
            frontier = nxt
        return out

    def dominant_multiplicities(self, lam):
        """Freudenthal multiplicities on dominant weights of ``L(lam)``."""
        lam = tuple(int(x) for x in lam)
        with self._lock:
            cached = self._weights_cache.get(lam)
        if cached is not None:
            return cached
        doms = sorted(self.dominant_weights_of(lam), key=lambda m: -self.height_key(lam, m))
        mult = {lam: 1}
        rho = self.rho
        lr = tuple(a + b for a, b in zip(lam, rho))
        norm_lr = self.form(lr, lr)

        def m_of(mu):
            d, _ = self.to_dominant(mu)
            return mult.get(d, 0)

        for mu in doms:
            if mu == lam:
                continue
            mr = tuple(a + b for a, b in zip(mu, rho))
            denom = norm_lr - self.form(mr, mr)
            total = Fraction(0)
            for a in self.positive_roots:
                k = 1
                while True:
                    nu = tuple(m + k * x for m, x in zip(mu, a))
                    d, _ = self.to_dominant(nu)
                    if not self._is_weight_of(lam, d):
                        break
                    c = mult.get(d, 0)
                    total += c * self.form(nu, a)
                    k += 1
            val = 2 * total / denom
            if val.denominator != 1 or val < 0:
                raise ValidationError("Freudenthal recursion produced a non-integer")
            if val:
                mult[mu] = int(val)
        with self._lock:
            self._weights_cache[lam] = mult
        return mult

    def height_key(self, lam, mu):
        # depth of mu below lam: sum of simple-root coordinates of lam - mu
        diff = [a - b for a, b in zip(lam, mu)]
        return -sum(self.root_coords(diff))

    def _is_weight_of(self, lam, dom):
        diff = [a - b for a, b in zip(lam, dom)]
        c = self.root_coords(diff)
        return all(x.denominator == 1 and x >= 0 for x in c)

    def all_weights(self, lam):
        """Full weight multiset of ``L(lam)`` as a dict weight -> multiplicity."""
        out = {}
        for mu, m in self.dominant_multiplicities(lam).items():
            for nu in self.orbit(mu):
                out[nu] = m
        return out


def _rational_inverse(C):
    n = C.shape[0]
    A = [[Fraction(int(C[i, j])) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
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


_CACHE = {}
_CACHE_LOCK = threading.Lock()


def weyl_data(rd):
    key = np.asarray(rd.cartan, dtype=np.int64).tobytes()
    with _CACHE_LOCK:
        wd = _CACHE.get(key)
        if wd is None:
            wd = WeylData(rd)
            _CACHE[key] = wd
    return wd


def _check(wd, *weights):
    for w in weights:
        if len(w) != wd.n:
            raise ValidationError(f"weight {tuple(w)} has length {len(w)}, rank is {wd.n}")


def _dominant(w):
    return all(int(x) >= 0 for x in w)


def dominance_leq(rd, lam, mu):
    """Tri-state comparison in the dominance order."""
    wd = weyl_data(rd)
    _check(wd, lam, mu)
    diff = [int(b) - int(a) for a, b in zip(lam, mu)]
    c = wd.root_coords(diff)
    if all(x.denominator == 1 and x >= 0 for x in c):
        return Dominance.GREATER_OR_EQUAL if not any(diff) else Dominance.LESS
    neg = [-x for x in c]
    if all(x.denominator == 1 and x >= 0 for x in neg):
        return Dominance.GREATER_OR_EQUAL
    return Dominance.INCOMPARABLE


def total_order_cmp(rd, lam, mu):
    """-1, 0, 1: height first, then lexicographic in weight coordinates."""
    wd = weyl_data(rd)
    _check(wd, lam, mu)
    a, b = wd.sort_key(lam), wd.sort_key(mu)
    return (a > b) - (a < b)


_MINUS_W0 = {
    "A": lambda n: list(range(n - 1, -1, -1)),
    "D": lambda n: list(range(n)) if n % 2 == 0 else list(range(n - 2)) + [n - 1, n - 2],
    "E": lambda n: [5, 1, 4, 3, 2, 0] if n == 6 else list(range(n)),
}


def dual_weight(rd, lam):
    """``lam^T = -w0(lam)`` via the ``-w0`` diagram involution per factor."""
    wd = weyl_data(rd)
    _check(wd, lam)
    if not _dominant(lam):
        raise PreconditionError(f"{tuple(lam)} is not dominant")
    out = []
    k = 0
    for letter, n in rd.components:
        perm = _MINUS_W0.get(letter, lambda m: list(range(m)))(n)
        block = [int(x) for x in lam[k:k + n]]
        out += [block[perm[i]] for i in range(n)]
        k += n
    out = tuple(out)
    # cross-check against the Weyl group
    if out != tuple(-x for x in wd.longest_element_image(lam)):
        raise ValidationError("-w0 table disagrees with the Weyl group")
    return out


def weyl_dim(rd, lam):
    wd = weyl_data(rd)
    _check(wd, lam)
    if not _dominant(lam):
        raise PreconditionError(f"{tuple(lam)} is not dominant")
    lr = tuple(int(a) + 1 for a in lam)
    num, den = Fraction(1), Fraction(1)
    for a in wd.positive_roots:
        num *= wd.form(lr, a)
        den *= wd.form(wd.rho, a)
    val = num / den
    if val.denominator != 1:
        raise ValidationError("Weyl dimension is not an integer")
    return int(val)


def tensor_decompose(rd, lam, mu):
    """``L(lam) x L(mu)`` as a WeightChar (Brauer-Klimyk)."""
    wd = weyl_data(rd)
    _check(wd, lam, mu)
    if not (_dominant(lam) and _dominant(mu)):
        raise PreconditionError("tensor_decompose needs dominant weights")
    lam = tuple(int(x) for x in lam)
    mu = tuple(int(x) for x in mu)
    # iterate over the smaller module
    if weyl_dim(rd, mu) > weyl_dim(rd, lam):
        lam, mu = mu, lam
    out = WeightChar()
    for nu, m in wd.all_weights(mu).items():
        v = tuple(a + b + 1 for a, b in zip(lam, nu))
        if any(c == 0 for c in v):
            continue
        d, parity = _reflect_regular(wd, v)
        if d is None:
            continue
        out.add(tuple(c - 1 for c in d), -m if parity else m)
    return out


def _reflect_regular(wd, v):
    """Move ``v`` to the dominant chamber; ``None`` on a wall."""
    v = tuple(v)
    parity = 0
    while True:
        if any(c == 0 for c in v):
            return None, 0
        for i in range(wd.n):
            if v[i] < 0:
                v = wd.reflect(v, i)
                parity ^= 1
                break
        else:
            return v, parity


def lowest_term(rd, lam, mu):
    """``mu - lam^T`` when dominant, else ``None``."""
    nu = tuple(int(a) - int(b) for a, b in zip(mu, dual_weight(rd, lam)))
    return nu if _dominant(nu) else None


def diagram_orbit(rd, lam, coupling, out=None):
    """Orbit of ``lam`` under ``H`` acting through Out, and the stabilizer."""
    from .rootdata import out_group

    out = out or out_group(rd)
    H = coupling.source
    lam = tuple(int(x) for x in lam)
    _check(weyl_data(rd), lam)
    if not _dominant(lam):
        raise PreconditionError(f"{lam} is not dominant")
    images = {}
    for h in range(H.order):
        images[h] = out.act_weight(coupling.images[h], lam)
    orbit = sorted(set(images.values()))
    stab = [h for h in range(H.order) if images[h] == lam]
    sub, emb = H.subgroup(stab)
    return orbit, sub, emb


def dominant_weights_upto(rd, count=None, max_height=None):
    """Dominant weights in increasing total order (height, then lexicographic)."""
    wd = weyl_data(rd)
    n = wd.n
    # heights of fundamental weights are positive, so bounded height is a finite box
    hs = [wd.height(tuple(int(i == j) for j in range(n))) for i in range(n)]
    if max_height is None:
        if count is None:
            raise ValueError("give count or max_height")
        max_height = Fraction(0)
        while True:
            pts = _box(hs, max_height)
            if len(pts) >= count:
                break
            max_height += min(hs)
    pts = _box(hs, max_height)
    pts.sort(key=wd.sort_key)
    return pts[:count] if count is not None else pts


def _box(hs, H):
    out = []
    n = len(hs)

    def rec(i, acc, h):
        if i == n:
            out.append(tuple(acc))
            return
        k = 0
        while h + k * hs[i] <= H:
            rec(i + 1, acc + [k], h + k * hs[i])
            k += 1

    rec(0, [], Fraction(0))
    return out
