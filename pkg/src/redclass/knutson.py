"""Knutson-index certificates: truncated inverses and divisibility bounds."""

from __future__ import annotations

import dataclasses
import math
import re
import threading
from functools import reduce


from ._dixon import character_degrees
from .abcoh import AbGroup, h2, trivial_module
from .errors import PreconditionError, ValidationError
from .fingrp import cyclic_group, enumerate_homs
from .weylchar import (WeightChar, diagram_orbit, dominant_weights_upto, dual_weight,
                       tensor_decompose, total_order_cmp, weyl_data, weyl_dim)

__all__ = ["TruncatedInverse", "greedy_inverse", "verify_truncation", "knutson_bound",
           "KnutsonBound", "projective_degrees", "semisimple_reduction_note",
           "select_leading", "weights_below", "sample_weights"]


@dataclasses.dataclass
class TruncatedInverse:
    module: WeightChar
    cutoff: tuple
    leading: tuple              # lambda_1
    shift: tuple                # lambda_1^T
    inverse: WeightChar
    certificate: list           # (nu, achieved, target)

    @property
    def passed(self):
        return all(a == t for _, a, t in self.certificate)

    def coefficients(self, rd):
        """``(weight, X)`` pairs of the inverse in increasing total order."""
        wd = weyl_data(rd)
        return sorted(self.inverse.items(), key=lambda kv: wd.sort_key(kv[0]))

    def to_dict(self):
        return {
            "module": [[list(k), v] for k, v in sorted(self.module.items())],
            "cutoff": list(self.cutoff),
            "leading": list(self.leading),
            "shift": list(self.shift),
            "inverse": [[list(k), v] for k, v in self.inverse.items()],
            "certificate": [{"nu": list(n), "achieved": a, "target": t}
                            for n, a, t in self.certificate],
            "passed": self.passed,
        }


def weights_below(rd, cutoff):
    """Dominant weights ``nu <= cutoff`` in increasing total order."""
    wd = weyl_data(rd)
    cutoff = tuple(int(x) for x in cutoff)
    if len(cutoff) != wd.n or any(x < 0 for x in cutoff):
        raise ValidationError(f"cutoff {cutoff} is not a dominant weight of rank {wd.n}")
    pts = dominant_weights_upto(rd, max_height=wd.height(cutoff))
    return [p for p in pts if total_order_cmp(rd, p, cutoff) <= 0]


def select_leading(rd, M):
    """The unique ``lambda_1`` whose dual is strictly maximal, multiplicity 1."""
    if not M:
        raise PreconditionError("module character is empty")
    wd = weyl_data(rd)
    for lam, m in M.items():
        if m < 0:
            raise PreconditionError(f"module has negative multiplicity at {lam}")
    duals = sorted(((wd.sort_key(dual_weight(rd, lam)), lam) for lam in M), reverse=True)
    top = duals[0][1]
    if len(duals) > 1 and duals[1][0] == duals[0][0]:
        raise PreconditionError(f"duals of {top} and {duals[1][1]} tie in the total order")
    if M[top] != 1:
        raise PreconditionError(
            f"leading weight {top} has multiplicity {M[top]}, need 1")
    return top


def greedy_inverse(rd, M, cutoff):
    """Build ``V`` with ``(M x V)_{<= cutoff}`` equal to the regular character."""
    M = WeightChar(M)
    lam1 = select_leading(rd, M)
    shift = dual_weight(rd, lam1)
    targets = weights_below(rd, cutoff)
    acc = {}
    V = WeightChar()
    for nu in targets:
        need = weyl_dim(rd, nu) - acc.get(nu, 0)
        mu = tuple(a + b for a, b in zip(nu, shift))
        if any(c < 0 for c in mu):
            # cannot adjust at nu; it must already be correct
            if need:
                raise ValidationError(f"shifted weight {mu} is not dominant and nu={nu} is short")
            continue
        if need:
            V.add(mu, need)
            for lam, m in M.items():
                for xi, c in tensor_decompose(rd, lam, mu).items():
                    acc[xi] = acc.get(xi, 0) + m * need * c
    ok, report = verify_truncation(rd, M, V, cutoff)
    if not ok:
        raise ValidationError(f"greedy inverse failed its own check: {report}")
    return TruncatedInverse(M, tuple(int(x) for x in cutoff), lam1, shift, V, report)


def verify_truncation(rd, M, V, cutoff):
    """``(ok, certificate)``; ``ok`` is false at the first mismatch, and the
    certificate ends there."""
    prod = {}
    for lam, m in WeightChar(M).items():
        for mu, x in WeightChar(V).items():
            for xi, c in tensor_decompose(rd, lam, mu).items():
                prod[xi] = prod.get(xi, 0) + m * x * c
    cert = []
    for nu in weights_below(rd, cutoff):
        got, want = prod.get(nu, 0), weyl_dim(rd, nu)
        cert.append((nu, got, want))
        if got != want:
            return False, cert
    return True, cert


# -- projective degrees --------------------------------------------------------

_PROJ_CACHE = {}
_PROJ_LOCK = threading.Lock()


def _multiplier_exponent(S):
    """Exponent of the Schur multiplier from ``|H^2(S, Z/m)| / |Hom(S, Z/m)|``."""
    n = S.order
    divisors = [m for m in range(1, n + 1) if n % m == 0]

    def quotient(m):
        if m == 1:
            return 1
        A = AbGroup((m,))
        top = h2(S, trivial_module(S, A)).order
        return top // len(enumerate_homs(S, cyclic_group(m)))

    full = quotient(n)
    if full == 1:
        return 1
    return next(m for m in divisors if quotient(m) == full)


def projective_degrees(S):
    """Degrees of irreducible projective representations of ``S``, over all
    cocycle classes, as a sorted list of distinct values."""
    from .extoracle import SchreierSystem, build_crossed_product

    key = S.table.tobytes()
    with _PROJ_LOCK:
        hit = _PROJ_CACHE.get(key)
    if hit is not None:
        return hit
    degs = set(character_degrees(S))
    m = _multiplier_exponent(S) if S.order > 1 else 1
    if m > 1:
        # every class of order dividing m lifts to Z/m; central extensions
        # by Z/m realize all of them
        M = trivial_module(S, AbGroup((m,)))
        coh = h2(S, M)
        for coords in coh.elements():
            f = coh.cocycle(coords)
            E = build_crossed_product(SchreierSystem(M, f))
            degs.update(character_degrees(E.group))
    out = sorted(degs)
    with _PROJ_LOCK:
        _PROJ_CACHE[key] = out
    return out


# -- bounds ----------------------------------------------------------------------

@dataclasses.dataclass
class KnutsonBound:
    bound: int
    mode: str
    group_order: int
    entries: list       # per sampled weight: orbit, stabilizer order, degrees
    connected_type: bool

    def to_dict(self):
        return {"bound": self.bound, "mode": self.mode, "group_order": self.group_order,
                "divides_group_order": self.group_order % self.bound == 0,
                "connected_type": self.connected_type,
                "entries": self.entries}


def _set_partitions(n):
    def rec(i, blocks):
        if i == n:
            yield list(blocks)
            return
        for b in range(len(blocks)):
            blocks[b].append(i)
            yield from rec(i + 1, blocks)
            blocks[b].pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(0, [])


def sample_weights(rd, kind):
    """``fundamental``: the fundamental weights; ``all``: one weight per
    partition of the nodes, which realizes every stabilizer of a dominant
    weight under diagram automorphisms."""
    n = rd.rank
    if kind == "fundamental":
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    if kind == "all":
        out = []
        for blocks in _set_partitions(n):
            lam = [0] * n
            for b, block in enumerate(blocks):
                for i in block:
                    lam[i] = b
            out.append(tuple(lam))
        return sorted(set(out))
    raise ValidationError(f"unknown weight sample {kind!r}")


def knutson_bound(rd, H, coupling, sample, mode="split", out=None):
    """lcm over sampled weights of the representation degrees of ``H^lambda``.

    ``mode="split"`` uses ordinary degrees (untwisted case); ``"projective"``
    uses projective degrees over every cocycle class, valid for any extension.
    """
    if mode not in ("split", "projective"):
        raise PreconditionError(f"unknown bound mode {mode!r}")
    if isinstance(sample, str):
        sample = sample_weights(rd, sample)
    sample = [tuple(int(x) for x in lam) for lam in sample]
    if not sample:
        raise PreconditionError("weight sample is empty")
    degree_fn = character_degrees if mode == "split" else projective_degrees
    entries = []
    seen = {}
    for lam in sample:
        orbit, stab, _ = diagram_orbit(rd, lam, coupling, out)
        dims = {weyl_dim(rd, mu) for mu in orbit}
        if len(dims) != 1:
            raise ValidationError(f"diagram orbit of {lam} has unequal dimensions")
        key = stab.table.tobytes()
        if key not in seen:
            seen[key] = degree_fn(stab)
        degs = seen[key]
        entries.append({"weight": list(lam), "orbit": [list(o) for o in orbit],
                        "stabilizer_order": stab.order, "degrees": degs,
                        "lcm": reduce(math.lcm, degs, 1)})
    acts_trivially = all(int(coupling.target.identity) == int(x) for x in coupling.images)
    if acts_trivially and mode == "split":
        bound = 1
    else:
        bound = reduce(math.lcm, (e["lcm"] for e in entries), 1)
    if H.order % bound:
        raise ValidationError(f"bound {bound} does not divide |H| = {H.order}")
    return KnutsonBound(bound, mode, H.order, entries, bound == 1)


def semisimple_reduction_note(spec):
    """Drop central torus factors ``T<n>`` from a type string.

    Returns ``(semisimple spec or "", note)``; an empty spec means a torus.
    """
    parts = [p.strip() for p in re.split(r"[*x×]", spec.replace(" ", "")) if p.strip()]
    if not parts:
        raise ValidationError("empty type")
    keep = [p for p in parts if not re.fullmatch(r"T\d+", p)]
    if len(keep) == len(parts):
        return spec.replace(" ", ""), None
    note = ("central torus factors removed: the Knutson index of a connected reductive "
            "group equals that of its derived subgroup")
    if not keep:
        note = "pure torus: every character is invertible, so the Knutson index is 1"
    return "*".join(keep), note
