"""Classification of disconnected groups with given identity component and
component group, as a table of coupling orbits and H^2 orbit counts."""

from __future__ import annotations

import dataclasses
import math

import numpy as np

from . import caps
from .abcoh import AbGroup, AbHModule, h2, h2_action_matrix, linear_map_kernel_size
from .errors import CapExceeded, ConsistencyError, ValidationError
from .fingrp import (AutomorphismGroup, GroupAction, automorphism_group,
                     burnside_count, count_orbits, describe_group, enumerate_homs,
                     hom_orbits, orbits_direct, trivial_group)
from .rootdata import cartan_determinant, out_group, torsion_out_module

__all__ = ["ClassificationRow", "ClassificationTable", "classify",
           "stabilizer_action_on_h2", "characteristic_comparison"]


@dataclasses.dataclass
class ClassificationRow:
    coupling: object            # GroupHom H -> Out
    coupling_orbit_size: int
    coupling_image: str
    image_order: int
    h2: AbGroup
    stabilizer_order: int
    orbits: int
    orbit_sizes: list           # None when only Burnside counting was possible
    split_flags: list           # per orbit: contains the zero class
    iso_orbits: int = None      # up to Out only, summed over Out-orbits in this row
    equiv_classes: int = None   # all couplings in the row times |H^2|

    @property
    def split_classes(self):
        return sum(self.split_flags) if self.split_flags is not None else 1

    def to_dict(self):
        return {
            "coupling_image": self.coupling_image,
            "coupling_images": [int(x) for x in self.coupling.images],
            "coupling_orbit_size": self.coupling_orbit_size,
            "h2": str(self.h2),
            "h2_order": self.h2.order,
            "stabilizer_order": self.stabilizer_order,
            "orbits": self.orbits,
            "orbit_sizes": self.orbit_sizes,
            "split_classes": self.split_classes,
            "iso_orbits": self.iso_orbits,
            "equiv_classes": self.equiv_classes,
        }


@dataclasses.dataclass
class ClassificationTable:
    type_label: str
    lattice: str
    group_label: str
    group_order: int
    p: int
    k: int
    c: int
    rows: list

    @property
    def total(self):
        return sum(r.orbits for r in self.rows)

    @property
    def iso_total(self):
        if any(r.iso_orbits is None for r in self.rows):
            return None
        return sum(r.iso_orbits for r in self.rows)

    @property
    def equiv_total(self):
        return sum(r.equiv_classes for r in self.rows)

    def to_dict(self):
        return {
            "input": {"type": self.type_label, "lattice": self.lattice,
                      "group": self.group_label, "group_order": self.group_order,
                      "char": self.p, "k": self.k, "cartan_det": self.c},
            "rows": [r.to_dict() for r in self.rows],
            "total": self.total,
            "iso_total": self.iso_total,
            "equiv_total": self.equiv_total,
        }


def _pair_matrix(coh, tmod, autH, prod, x):
    gam, dl = prod.pair(x)
    return h2_action_matrix(coh, tmod.matrices[gam], autH.action[dl])


def stabilizer_action_on_h2(coh, stabilizer, tmod, autH):
    """Action of the stabilizer ``(Out x Aut(H))_phi`` on the elements of H^2."""
    if coh.order > caps.CAPS.h2_materialize:
        raise CapExceeded("h2_materialize", coh.order,
                          "H^2 too large to materialize; use the Burnside-only path")
    prod = stabilizer.parent
    elems = coh.elements()
    mod = np.array(coh.structure.factors, dtype=np.int64)
    table = np.zeros((stabilizer.order, len(elems)), dtype=np.int64)
    for row, x in enumerate(stabilizer.elements):
        if coh.structure.rank == 0:
            continue
        T = _pair_matrix(coh, tmod, autH, prod, x)
        img = (elems @ T.T) % mod
        table[row] = coh.structure.index(img)
    action = GroupAction(stabilizer, stabilizer.elements, table)
    action.check()
    if (table[:, 0] != 0).any():
        raise ConsistencyError("the zero class is not fixed")
    return action


def _burnside_only(coh, stabilizer, tmod, autH):
    prod = stabilizer.parent
    factors = coh.structure.factors
    fixed = []
    for x in stabilizer.elements:
        T = _pair_matrix(coh, tmod, autH, prod, x)
        fixed.append(linear_map_kernel_size(T - np.eye(len(factors), dtype=np.int64), factors))
    return burnside_count(fixed, stabilizer.order)


def _orbit_count(coh, stabilizer, tmod, autH):
    if coh.order <= caps.CAPS.h2_materialize:
        action = stabilizer_action_on_h2(coh, stabilizer, tmod, autH)
        n = count_orbits(action)
        orbs = orbits_direct(action)
        sizes = [len(o) for o in orbs]
        flags = [0 in o for o in orbs]
        return n, sizes, flags
    return _burnside_only(coh, stabilizer, tmod, autH), None, None


def _trivial_aut(H):
    return AutomorphismGroup(trivial_group(), np.arange(H.order, dtype=np.int64)[None, :], H)


def classify(rd, H, p=0, group_label=None, extra=True):
    """Table of coupling orbits with H^2 orbit counts; ``total`` counts groups.

    ``extra`` also computes the counts up to Out only (``iso_total``).
    """
    if p and (p < 2 or any(p % q == 0 for q in range(2, math.isqrt(p) + 1))):
        raise ValidationError(f"characteristic must be 0 or a prime, got {p}")
    out = out_group(rd)
    K = out.group
    k = H.order
    tmod = torsion_out_module(out, k, p)
    homs = enumerate_homs(H, K)
    autH = automorphism_group(H)
    orbits = hom_orbits(homs, K, autH)
    iso_orbits = hom_orbits(homs, K, _trivial_aut(H)) if extra else []
    triv = _trivial_aut(H)
    rows = []
    for orb in orbits:
        phi = orb.representative
        M = AbHModule(tmod.base, H, tmod.matrices[np.asarray(phi.images)], check=False)
        coh = h2(H, M)
        n, sizes, flags = _orbit_count(coh, orb.stabilizer, tmod, autH)
        if flags is not None and not any(flags):
            raise ConsistencyError("no orbit contains the zero class")
        image = K.subgroup(phi.image_set())[0]
        iso = None
        if extra:
            members = set(orb.members)
            iso = 0
            for io in iso_orbits:
                if io.members[0] in members:
                    psi = io.representative
                    Mi = AbHModule(tmod.base, H, tmod.matrices[np.asarray(psi.images)],
                                   check=False)
                    ci = h2(H, Mi)
                    iso += _orbit_count(ci, io.stabilizer, tmod, triv)[0]
        rows.append(ClassificationRow(
            coupling=phi,
            coupling_orbit_size=len(orb.members),
            coupling_image=describe_group(image),
            image_order=image.order,
            h2=coh.structure,
            stabilizer_order=orb.stabilizer.order,
            orbits=n,
            orbit_sizes=sizes,
            split_flags=flags,
            iso_orbits=iso,
            equiv_classes=len(orb.members) * coh.order,
        ))
    return ClassificationTable(
        type_label=rd.label, lattice=rd.lattice_label,
        group_label=group_label or describe_group(H), group_order=H.order,
        p=p, k=k, c=cartan_determinant(rd), rows=rows)


def characteristic_comparison(rd, H, p, group_label=None):
    """Compare totals at ``p`` and at 0; raises on a violated inequality."""
    t0 = classify(rd, H, 0, group_label, extra=False)
    tp = classify(rd, H, p, group_label, extra=False)
    kc = t0.k * t0.c
    divides = kc % p == 0
    same_rows = [r.orbits for r in t0.rows] == [r.orbits for r in tp.rows]
    if not divides and (tp.total != t0.total or not same_rows):
        raise ConsistencyError(
            f"p={p} does not divide k*c={kc} but totals differ ({tp.total} vs {t0.total})")
    if tp.total > t0.total:
        raise ConsistencyError(f"total at p={p} exceeds the characteristic-zero total")
    return {
        "p": p, "kc": kc, "p_divides_kc": divides,
        "total_p": tp.total, "total_0": t0.total,
        "independent": tp.total == t0.total and same_rows,
        "smaller_or_equal": tp.total <= t0.total,
    }
