"""Brute-force oracle for extensions of a finite abelian group A by H.

Extensions are crossed products ``(a, g)(b, h) = (a + g.b + f(g, h), gh)``.
Cocycles come from a linear solve with a transversal and generating set
different from the one used by :func:`redclass.abcoh.h2`; classes are then
enumerated explicitly and classified by group actions, with an optional
raw isomorphism search as a second opinion.
"""

from __future__ import annotations

import dataclasses
import itertools
from collections import deque

import numpy as np

from . import caps
from .abcoh import AbGroup, AbHModule, _setup, _scale_rows, cocycle_defect, is_normalized
from .errors import ConsistencyError, PreconditionError, ValidationError
from .fingrp import (FinGroup, GroupHom, ProductGroup, SubgroupView, automorphism_group,
                     enumerate_homs, hom_orbits, _search_homs)
from .snf import ModSNF, kernel_mod

__all__ = [
    "SchreierSystem", "ExtensionCensus", "CouplingCensus", "build_crossed_product",
    "classify_extensions_bruteforce", "semidirect_equivalence_check", "abelian_fingroup",
    "aut_matrices", "find_marked_isomorphism", "transported_couplings",
]


@dataclasses.dataclass
class SchreierSystem:
    module: AbHModule
    cocycle: np.ndarray

    def validate(self):
        f = np.asarray(self.cocycle, dtype=np.int64)
        n, r = self.module.group.order, self.module.base.rank
        if f.shape != (n, n, r):
            raise ValidationError(f"cocycle must have shape {(n, n, r)}")
        if not is_normalized(self.module, f):
            raise ValidationError("cocycle is not normalized")
        if cocycle_defect(self.module, f):
            raise ValidationError("cocycle identity fails (multiplication not associative)")


@dataclasses.dataclass
class CrossedProduct:
    group: FinGroup
    kernel: tuple        # indices of {(a, 1)}
    projection: np.ndarray

    @property
    def kernel_set(self):
        return frozenset(self.kernel)


def build_crossed_product(s):
    """Multiplication table of the crossed product; element ``(a, g)`` has
    index ``g * |A| + index(a)``."""
    s.validate()
    M = s.module
    H = M.group
    A = M.base
    elems = A.elements()
    na, nh = len(elems), H.order
    caps.check("oracle_order", na * nh, "extension too large for the oracle")
    mod = np.array(A.factors, dtype=np.int64) if A.rank else np.ones(0, dtype=np.int64)
    f = np.asarray(s.cocycle, dtype=np.int64)
    table = np.empty((nh * na, nh * na), dtype=np.int64)
    for g in range(nh):
        gb = (elems @ M.matrices[g].T) % mod if A.rank else elems
        for h in range(nh):
            gh = int(H.table[g, h])
            # (a, g)(b, h): a + g.b + f(g, h)
            vals = (elems[:, None, :] + gb[None, :, :] + f[g, h][None, None, :])
            idx = A.index(vals.reshape(-1, A.rank) % mod if A.rank else
                          np.zeros((na * na, 0), dtype=np.int64)).reshape(na, na)
            table[g * na:(g + 1) * na, h * na:(h + 1) * na] = gh * na + idx
    ident = H.identity * na
    G = FinGroup(table, identity=ident)
    kernel = tuple(H.identity * na + i for i in range(na))
    proj = np.repeat(np.arange(nh), na)
    return CrossedProduct(G, kernel, proj)


# -- abelian groups as FinGroups and their automorphisms --------------------

def abelian_fingroup(A):
    """``A`` as a FinGroup whose generators are the standard basis vectors."""
    elems = A.elements()
    n = len(elems)
    if A.rank == 0:
        return FinGroup(np.zeros((1, 1), dtype=np.int64), generators=[], check=False), elems
    mod = np.array(A.factors, dtype=np.int64)
    table = A.index(((elems[:, None, :] + elems[None, :, :]) % mod).reshape(-1, A.rank))
    table = table.reshape(n, n)
    gens = [int(A.index(np.eye(A.rank, dtype=np.int64)[j])[0]) for j in range(A.rank)]
    return FinGroup(table, generators=gens, identity=0), elems


def aut_matrices(A):
    """``(AutomorphismGroup of A as FinGroup, matrices)``; column ``j`` of a
    matrix is the image of the ``j``-th basis vector."""
    GA, elems = abelian_fingroup(A)
    aut = automorphism_group(GA)
    mats = np.zeros((aut.group.order, A.rank, A.rank), dtype=np.int64)
    for a in range(aut.group.order):
        for j, g in enumerate(GA.generators):
            mats[a, :, j] = elems[aut.action[a, g]]
    return aut, mats


# -- cochain solve with an independent parametrization ----------------------

def _alt_generators(H):
    """A generating set unlike ``H.generators``: reversed, plus one product."""
    gens = list(reversed(H.generators))
    if len(gens) >= 2:
        extra = int(H.table[gens[0], gens[1]])
        if extra != H.identity and extra not in gens:
            gens.append(extra)
    return gens


@dataclasses.dataclass
class _CocycleSpace:
    setup: object
    z_gens: np.ndarray        # columns: generators of Z^2 in F-coordinates
    key_U: np.ndarray         # canonical coset coordinates: (U x) mod orders
    key_orders: list
    group: FinGroup


def _cocycle_space(M):
    H = M.group
    Halt = FinGroup(H.table, generators=_alt_generators(H), identity=H.identity, check=False)
    Malt = AbHModule(M.base, Halt, M.matrices, check=False)
    S = _setup(Malt)
    E, lift = S.E, S.lift
    n, r = H.order, M.base.rank
    N = lift.shape[-1]
    t = H.table
    xs = [x for x in range(n) if x != H.identity]
    rows = []
    # full cocycle identity at (x, y, s) for s in the alternative generators
    for s in S.gens:
        for x in xs:
            xf = np.einsum("ab,ybn->yan", M.matrices[x], lift[:, s])
            d = xf - lift[t[x, :], s] + lift[x, t[:, s]] - lift[x, :]
            rows.append(d[xs] % E)
    D2 = _scale_rows(np.concatenate([b.reshape(-1, r, N) for b in rows]).reshape(-1, N),
                     M.factors, E)
    D2 = D2[D2.any(axis=1)]
    if D2.shape[0] == 0:
        D2 = np.zeros((1, N), dtype=np.int64)
    Z, _, _, _ = kernel_mod(D2, E)
    # coboundaries and the per-coordinate moduli, in F-coordinates
    cols = []
    for g in xs:
        for i in range(r):
            c = np.zeros((n, r), dtype=np.int64)
            c[g, i] = 1
            v = np.zeros(N, dtype=np.int64)
            for j, s in enumerate(S.gens):
                vals = np.einsum("xab,b->xa", M.matrices, c[s]) - c[t[:, s]] + c
                for x in xs:
                    v[S.col_index[x, j]] = vals[x]
            cols.append(v % E)
    for x in xs:
        for j in range(len(S.gens)):
            for i in range(r):
                v = np.zeros(N, dtype=np.int64)
                v[S.col_index[x, j, i]] = M.factors[i]
                cols.append(v)
    Bmat = np.stack(cols, axis=1) % E
    snf = ModSNF(Bmat, E, left=True, right=False)
    orders = [snf.diag[i] if i < len(snf.diag) else E for i in range(N)]
    return _CocycleSpace(S, Z, snf.U, orders, Halt)


def _key(space, F):
    y = space.key_U @ (np.asarray(F, dtype=np.int64) % space.setup.E) % space.setup.E
    return tuple(int(v) % d for v, d in zip(y, space.key_orders) if d > 1)


def _full_cocycle(space, M, F):
    lift = space.setup.lift
    return np.einsum("xyin,n->xyi", lift, F) % np.array(M.factors, dtype=np.int64)


def _restrict(space, M, f):
    S = space.setup
    N = S.lift.shape[-1]
    F = np.zeros(N, dtype=np.int64)
    for x in range(S.n):
        if x == M.group.identity:
            continue
        for j, s in enumerate(S.gens):
            F[S.col_index[x, j]] = f[x, s]
    return F


# -- census -------------------------------------------------------------------

@dataclasses.dataclass
class CouplingCensus:
    coupling: object                 # GroupHom H -> Aut(A) or None
    module: AbHModule
    class_cocycles: list             # one representative per equivalence class
    class_size: int                  # cocycles per class (= |B^2|)
    z2_order: int
    iso_classes: list                # partition of class indices
    virtual_classes: list
    confirmed: bool = None           # raw isomorphism search outcome
    coupling_orbit_size: int = 1

    @property
    def equivalence_count(self):
        return len(self.class_cocycles)

    @property
    def iso_count(self):
        return len(self.iso_classes)

    @property
    def virtual_count(self):
        return len(self.virtual_classes)


@dataclasses.dataclass
class ExtensionCensus:
    kernel: AbGroup
    group_order: int
    couplings: list

    @property
    def equivalence_total(self):
        return sum(c.equivalence_count * c.coupling_orbit_size for c in self.couplings)

    @property
    def virtual_total(self):
        return sum(c.virtual_count for c in self.couplings)

    @property
    def iso_total(self):
        return sum(c.iso_count for c in self.couplings)


def _enumerate_classes(space, M):
    """Coset representatives of B^2 in Z^2 by breadth-first closure."""
    E = space.setup.E
    zero = np.zeros(space.z_gens.shape[0], dtype=np.int64)
    keys = {_key(space, zero): 0}
    reps = [zero]
    queue = deque([zero])
    gens = [space.z_gens[:, k] for k in range(space.z_gens.shape[1])
            if space.z_gens[:, k].any()]
    gen_keys = [np.array(_key(space, g), dtype=np.int64) for g in gens]
    rep_keys = [np.array(_key(space, zero), dtype=np.int64)]
    orders = np.array([d for d in space.key_orders if d > 1], dtype=np.int64)
    while queue:
        F = queue.popleft()
        kF = rep_keys[keys[_key(space, F)]]
        for g, kg in zip(gens, gen_keys):
            k = tuple(int(v) for v in (kF + kg) % orders) if len(orders) else ()
            if k not in keys:
                Fn = (F + g) % E
                keys[k] = len(reps)
                reps.append(Fn)
                rep_keys.append(np.array(k, dtype=np.int64))
                queue.append(Fn)
                caps.check("h2_materialize", len(reps), "too many extension classes")
    return reps, keys


def _transport(M, gamma, delta, f):
    dinv = np.argsort(np.asarray(delta))
    g = f[np.ix_(dinv, dinv)]
    return np.einsum("ab,xyb->xya", gamma, g) % np.array(M.factors, dtype=np.int64)


def _class_orbits(space, M, reps, keys, pairs):
    """Partition class indices under the given ``(gamma, delta)`` generators."""
    n = len(reps)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    fulls = [_full_cocycle(space, M, F) for F in reps]
    for gamma, delta in pairs:
        for i, f in enumerate(fulls):
            g = _transport(M, gamma, delta, f)
            # spot check: the last class is a nonzero cocycle when n > 1
            if i == n - 1 and cocycle_defect(M, g):
                raise ConsistencyError("transported cocycle is not a cocycle")
            j = keys.get(_key(space, _restrict(space, M, g)))
            if j is None:
                raise ConsistencyError("transported cocycle left the enumerated classes")
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values())


def _census_one(M, pairs_iso, pairs_virtual, confirm, allowed_alpha):
    space = _cocycle_space(M)
    reps, keys = _enumerate_classes(space, M)
    cocycles = [_full_cocycle(space, M, F) for F in reps]
    for f in cocycles:
        if cocycle_defect(M, f) or not is_normalized(M, f):
            raise ConsistencyError("enumerated class representative is not a cocycle")
    iso = _class_orbits(space, M, reps, keys, pairs_iso)
    virt = _class_orbits(space, M, reps, keys, pairs_virtual)
    n = M.group.order
    class_size = M.base.order ** (n - 1) // _z1_order(M)
    cen = CouplingCensus(None, M, cocycles, class_size, class_size * len(cocycles), iso, virt)
    if confirm:
        cen.confirmed = _confirm_virtual(M, cocycles, virt, allowed_alpha)
    return cen


def _z1_order(M):
    return len(derivations(M))


def derivations(M):
    """All crossed homomorphisms ``c(xy) = c(x) + x.c(y)`` as ``(n, r)`` arrays."""
    H, A = M.group, M.base
    elems = A.elements()
    mod = np.array(A.factors, dtype=np.int64) if A.rank else np.ones(0, dtype=np.int64)
    gens = H.generators
    caps.check("h2_materialize", len(elems) ** max(len(gens), 1), "too many derivation candidates")
    out = []
    for vals in itertools.product(range(len(elems)), repeat=len(gens)):
        c = {H.identity: np.zeros(A.rank, dtype=np.int64)}
        queue = deque([H.identity])
        ok = True
        while queue and ok:
            x = queue.popleft()
            for j, s in enumerate(gens):
                y = int(H.table[x, s])
                v = (c[x] + M.matrices[x] @ elems[vals[j]]) % mod
                if y in c:
                    if (c[y] != v).any():
                        ok = False
                        break
                else:
                    c[y] = v
                    queue.append(y)
        if ok:
            out.append(np.array([c[x] for x in range(H.order)], dtype=np.int64).reshape(
                H.order, A.rank))
    return out


def _pairs_from_stabilizer(stab, autA_mats, autH):
    prod = stab.parent
    out = []
    for x in stab.generators:
        a, d = prod.pair(x)
        out.append((autA_mats[a], autH.action[d]))
    return out


def classify_extensions_bruteforce(A, H, action=None, aut_subgroup=None, couplings=None,
                                   confirm=None):
    """Census of extensions of ``A`` by ``H``.

    ``action``: a single module (census for that coupling only, acting group
    ``(Aut(A))_phi x Aut(H)`` restricted to the stabilizer).  Otherwise all
    couplings ``H -> Aut(A)`` up to conjugation and ``Aut(H)``; ``couplings``
    may restrict this to a given list of homs into the automorphism group.
    ``aut_subgroup``: element indices of the automorphism group allowed for
    virtual isomorphisms (default: all of ``Aut(A)``).
    """
    caps.check("oracle_order", A.order * H.order, "extension too large for the oracle")
    aut, mats = aut_matrices(A)
    K = aut.group
    autH = automorphism_group(H)
    if confirm is None:
        confirm = A.order * H.order <= caps.CAPS.oracle_order
    if aut_subgroup is None:
        outer, embed = K, np.arange(K.order)
    else:
        outer, embed = K.subgroup(aut_subgroup)
    if action is not None:
        phi = _module_to_hom(action, K, mats)
        stab = _stabilizer_of(phi, outer, embed, autH)
        items = [(phi, stab, stab.parent.order // stab.order)]
    else:
        full = enumerate_homs(H, K)
        orbs = hom_orbits(full, outer, autH, outer_embed=embed)
        if couplings is not None:
            index = {h.images: i for i, h in enumerate(full)}
            wanted = {index[tuple(c.images if isinstance(c, GroupHom) else c)] for c in couplings}
            orbs = [o for o in orbs if wanted & set(o.members)]
        items = [(o.representative, o.stabilizer, len(o.members)) for o in orbs]
    allowed = {tuple(int(v) for v in aut.action[int(a)]) for a in embed}
    result = []
    for phi, stab, orbit_size in items:
        M = AbHModule(A, H, mats[np.asarray(phi.images)], check=False)
        prod = stab.parent
        virt_pairs = [(mats[int(embed[prod.pair(x)[0]])], autH.action[prod.pair(x)[1]])
                      for x in stab.generators]
        ident = autH.action[autH.group.identity]
        iso_sub = SubgroupView(prod, [x for x in stab.elements
                                      if prod.pair(x)[1] == autH.group.identity])
        iso_pairs = [(mats[int(embed[prod.pair(x)[0]])], ident) for x in iso_sub.generators]
        cen = _census_one(M, iso_pairs, virt_pairs, confirm, allowed)
        cen.coupling = phi
        cen.coupling_orbit_size = orbit_size
        result.append(cen)
    return ExtensionCensus(A, H.order, result)


def _stabilizer_of(phi, outer, embed, autH):
    K = phi.target
    prod = ProductGroup(outer, autH.group)
    img = np.asarray(phi.images)
    stab = []
    for x in prod.elements():
        g, d = prod.pair(x)
        k = int(embed[g])
        pre = autH.action[int(autH.group.inv[d])]
        new = K.table[K.table[k, img[pre]], int(K.inv[k])]
        if (new == img).all():
            stab.append(x)
    return SubgroupView(prod, stab)


def _module_to_hom(M, K, mats):
    lookup = {}
    for a in range(K.order):
        lookup[mats[a].tobytes()] = a
    mod = np.array(M.factors, dtype=np.int64).reshape(-1, 1)
    images = []
    for h in range(M.group.order):
        key = (M.matrices[h] % mod).astype(np.int64).tobytes()
        if key not in lookup:
            raise ValidationError("action matrix is not an automorphism of A")
        images.append(lookup[key])
    return GroupHom(M.group, K, tuple(images))


# -- raw isomorphism search -------------------------------------------------

def _invariants(G, kernel):
    """Per-element invariants preserved by isomorphisms that keep the kernel."""
    kset = set(kernel)
    classes, label = G.conjugacy_classes
    orders = G.element_orders
    kern = np.asarray(sorted(kset), dtype=np.int64)
    base = []
    for x in range(G.order):
        # order of the image in G/A: least k with x^k in A
        y, k = x, 1
        while y not in kset:
            y = int(G.table[y, x])
            k += 1
        # orders over the coset xA
        profile = tuple(sorted(int(v) for v in orders[G.table[x, kern]]))
        base.append((int(orders[x]), x in kset, k, len(classes[label[x]]), profile))
    # refine once through the square map
    return [base[x] + (base[int(G.table[x, x])],) for x in range(G.order)]


def _kernel_alphas(E1, E2):
    """All bijections of kernel positions induced by group isomorphisms."""
    K1, emb1 = E1.group.subgroup(E1.kernel)
    K2, emb2 = E2.group.subgroup(E2.kernel)
    pos2 = {int(x): i for i, x in enumerate(E2.kernel)}
    o1, o2 = K1.element_orders, K2.element_orders
    cands = [[y for y in range(K2.order) if o2[y] == o1[g]] for g in K1.generators]
    out = set()
    for table in _search_homs(K1, K2, cands, bijective=True):
        img = {int(emb1[i]): pos2[int(emb2[t])] for i, t in enumerate(table)}
        out.add(tuple(img[int(x)] for x in E1.kernel))
    return out


def find_marked_isomorphism(E1, E2, allowed_alpha=None, inv1=None, inv2=None):
    """An isomorphism ``E1.group -> E2.group`` mapping the marked kernel onto
    the marked kernel, or ``None``.  ``allowed_alpha`` restricts the induced
    automorphism of the kernel (as images of kernel positions)."""
    G1, G2 = E1.group, E2.group
    if G1.order != G2.order or len(E1.kernel) != len(E2.kernel):
        return None
    inv1 = inv1 or _invariants(G1, E1.kernel)
    inv2 = inv2 or _invariants(G2, E2.kernel)
    if sorted(inv1) != sorted(inv2):
        return None
    k1, k2 = E1.kernel_set, E2.kernel_set
    alphas = sorted(allowed_alpha if allowed_alpha is not None else _kernel_alphas(E1, E2))
    # kernel generators, then lifts of generators of the quotient
    kgens = [x for x in greedy_generators_of(G1, E1.kernel)]
    lifts, span = [], set(G1.closure(kgens))
    counts = {}
    for v in inv2:
        counts[v] = counts.get(v, 0) + 1
    for x in sorted(range(G1.order), key=lambda y: (counts.get(inv1[y], 0), y)):
        if len(span) == G1.order:
            break
        if x not in span:
            lifts.append(x)
            span = set(G1.closure(kgens + lifts))
    cands = [[y for y in range(G2.order) if inv2[y] == inv1[g]] for g in lifts]
    gens = kgens + lifts
    images = [0] * len(gens)

    def extend(prefix):
        mapping = {G1.identity: G2.identity}
        queue = deque([G1.identity])
        while queue:
            x = queue.popleft()
            fx = mapping[x]
            for j in range(prefix):
                y = int(G1.table[x, gens[j]])
                val = int(G2.table[fx, images[j]])
                old = mapping.get(y)
                if old is None:
                    if (y in k1) != (val in k2):
                        return None
                    mapping[y] = val
                    queue.append(y)
                elif old != val:
                    return None
        return mapping

    nk = len(kgens)
    kpos = {int(x): i for i, x in enumerate(E1.kernel)}

    def rec(i):
        if i == len(gens):
            m = extend(len(gens))
            if m is None or len(set(m.values())) != G1.order:
                return None
            return m
        for c in cands[i - nk]:
            images[i] = c
            if extend(i + 1) is None:
                continue
            m = rec(i + 1)
            if m is not None:
                return m
        return None

    for alpha in alphas:
        for j, g in enumerate(kgens):
            images[j] = int(E2.kernel[alpha[kpos[g]]])
        m = extend(nk) if nk else {G1.identity: G2.identity}
        if m is None or any(int(m[x]) != int(E2.kernel[alpha[kpos[int(x)]]]) for x in E1.kernel):
            continue
        if nk and len(m) != len(E1.kernel):
            continue
        m = rec(nk)
        if m is not None:
            return m
    return None


def greedy_generators_of(G, elements):
    """Generators of the subgroup on ``elements`` (assumed closed)."""
    target = set(int(x) for x in elements)
    gens, span = [], {G.identity}
    for x in sorted(target):
        if x not in span:
            gens.append(x)
            span = set(G.closure(gens))
            if span == target:
                break
    return gens


def _confirm_virtual(M, cocycles, virt, allowed_alpha):
    """Same class: isomorphic; different classes: no marked isomorphism."""
    groups = [build_crossed_product(SchreierSystem(M, f)) for f in cocycles]
    invs = [_invariants(E.group, E.kernel) for E in groups]
    allowed = allowed_alpha
    for cls in virt:
        r0 = cls[0]
        for j in cls[1:]:
            if find_marked_isomorphism(groups[r0], groups[j], allowed, invs[r0], invs[j]) is None:
                raise ConsistencyError("classes merged by the action are not isomorphic")
    roots = [cls[0] for cls in virt]
    for a, b in itertools.combinations(roots, 2):
        if find_marked_isomorphism(groups[a], groups[b], allowed, invs[a], invs[b]) is not None:
            raise ConsistencyError("distinct virtual classes are isomorphic")
    return True


def semidirect_equivalence_check(phi, psi):
    """Derivations versus complements in the semidirect product.

    ``phi`` and ``psi`` are modules for the same coupling (same matrices).
    Returns a report with ``equal``, ``derivations`` and ``complements``.
    """
    if phi.group is not psi.group and phi.group.order != psi.group.order:
        raise PreconditionError("modules are over different groups")
    if phi.base != psi.base:
        raise PreconditionError("modules have different kernels")
    mod = np.array(phi.factors, dtype=np.int64).reshape(-1, 1)
    same = bool(((phi.matrices - psi.matrices) % mod == 0).all()) if phi.base.rank else True
    H = phi.group
    der = derivations(phi)
    n, r = H.order, phi.base.rank
    E = build_crossed_product(SchreierSystem(phi, np.zeros((n, n, r), dtype=np.int64)))
    comps = _complements(E, H)
    if len(comps) != len(der):
        raise ConsistencyError(
            f"{len(comps)} complements but {len(der)} derivations")
    return {"equal": same, "derivations": len(der), "complements": len(comps)}


def _complements(E, H):
    """Subgroups meeting the kernel trivially and mapping onto ``H``."""
    G = E.group
    kset = E.kernel_set
    na = len(E.kernel)
    found = set()
    cosets = [[int(s) * na + i for i in range(na)] for s in H.generators]
    for choice in itertools.product(*cosets):
        sub = G.closure(choice)
        if len(sub) == H.order and not (set(sub) & kset) - {G.identity}:
            found.add(tuple(sub))
    return sorted(found)


def transported_couplings(rd, H, A, p=0):
    """Couplings ``H -> Out -> Aut(A)`` for the centre torsion of ``rd``.

    Returns ``(homs into Aut(A), indices of the Out-image in Aut(A))``; one
    hom per ``Out x Aut(H)`` orbit, in the order used by ``classify``.
    """
    from .rootdata import out_group, torsion_out_module

    out = out_group(rd)
    tmod = torsion_out_module(out, H.order, p)
    if tmod.base != A:
        raise ValidationError(f"kernel {A} is not the centre torsion {tmod.base} of {rd.label}")
    aut, mats = aut_matrices(A)
    lookup = {m.tobytes(): a for a, m in enumerate(mats)}
    to_aut = [lookup[np.asarray(m, dtype=np.int64).tobytes()] for m in tmod.matrices]
    homs = enumerate_homs(H, out.group)
    orbs = hom_orbits(homs, out.group, automorphism_group(H))
    reps = [GroupHom(H, aut.group, tuple(to_aut[y] for y in o.representative.images))
            for o in orbs]
    return reps, sorted(set(to_aut))
