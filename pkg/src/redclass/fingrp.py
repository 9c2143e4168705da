"""Finite groups as dense multiplication tables.

Elements are integers ``0 .. order-1``; ``mul[a, b]`` is the index of ``a*b``.
Permutations compose right to left: ``(x*y)(i) = x(y(i))``.
"""

from __future__ import annotations

import dataclasses
import functools
import math
import re
from collections import deque

import numpy as np

from . import caps
from .errors import ConsistencyError, ParseError, ValidationError


class FinGroup:
    """A finite group given by its full multiplication table.

    ``generators`` must generate the whole group; they drive every
    backtracking search (homomorphisms, automorphisms).
    """

    def __init__(self, table, generators=None, identity=0, names=None,
                 perms=None, check=True):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise ValidationError("multiplication table must be square")
        n = table.shape[0]
        if n == 0:
            raise ValidationError("a group has at least one element")
        self.order = n
        self.table = table
        self.table.setflags(write=False)
        self.identity = int(identity)
        self.names = None if names is None else tuple(names)
        self.perms = None if perms is None else tuple(tuple(p) for p in perms)
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(table == self.identity)
        inv[rows] = cols
        if (inv < 0).any():
            raise ValidationError("some element has no right inverse")
        self.inv = inv
        self.inv.setflags(write=False)
        if check:
            self._validate()
        if generators is None:
            generators = self._greedy_generators()
        self.generators = tuple(int(g) for g in generators)
        if check and len(self.closure(self.generators)) != n:
            raise ValidationError("generators do not generate the group")

    # -- basic arithmetic -------------------------------------------------

    def mul(self, a, b):
        return int(self.table[a, b])

    def power(self, a, k):
        result = self.identity
        base = a
        if k < 0:
            base, k = int(self.inv[a]), -k
        while k:
            if k & 1:
                result = int(self.table[result, base])
            base = int(self.table[base, base])
            k >>= 1
        return result

    def _validate(self):
        t, e, n = self.table, self.identity, self.order
        if (t[e] != np.arange(n)).any() or (t[:, e] != np.arange(n)).any():
            raise ValidationError("identity is not two-sided")
        if (t[self.inv, np.arange(n)] != e).any():
            raise ValidationError("inverse table is not two-sided")
        for row in t:
            if len(np.unique(row)) != n:
                raise ValidationError("table is not a Latin square")
        if n <= caps.CAPS.assoc_check:
            # (ab)c == a(bc) for all triples
            lhs = t[t[:, :, None], np.arange(n)[None, None, :]]
            rhs = t[np.arange(n)[:, None, None], t[None, :, :]]
            if (lhs != rhs).any():
                raise ValidationError("multiplication is not associative")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, 4096))
            if (t[t[a, b], c] != t[a, t[b, c]]).any():
                raise ValidationError("multiplication is not associative")

    @functools.cached_property
    def element_orders(self):
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        for k in range(1, n + 1):
            hit = (cur == self.identity) & (orders == 0)
            orders[hit] = k
            if (orders > 0).all():
                break
            cur = self.table[cur, np.arange(n)]
        return orders

    @property
    def exponent(self):
        return math.lcm(*(int(o) for o in self.element_orders))

    def is_abelian(self):
        return bool((self.table == self.table.T).all())

    def closure(self, elements):
        """Subgroup generated by ``elements`` as a sorted list of indices."""
        elements = [int(x) for x in elements]
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for g in elements:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def _greedy_generators(self):
        gens = []
        span = {self.identity}
        # prefer elements of large order: fewer generators
        for x in sorted(range(self.order), key=lambda x: (-int(self.element_orders[x]), x)):
            if x not in span:
                gens.append(x)
                span = set(self.closure(gens))
                if len(span) == self.order:
                    break
        return gens

    @functools.cached_property
    def spanning_tree(self):
        """BFS words: ``parent[x] * generators[via[x]] == x``; BFS order list."""
        parent = np.full(self.order, -1, dtype=np.int64)
        via = np.full(self.order, -1, dtype=np.int64)
        order = [self.identity]
        seen = np.zeros(self.order, dtype=bool)
        seen[self.identity] = True
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for j, g in enumerate(self.generators):
                y = int(self.table[x, g])
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    via[y] = j
                    order.append(y)
                    queue.append(y)
        return parent, via, order

    @functools.cached_property
    def conjugacy_classes(self):
        n = self.order
        t = self.table
        label = np.full(n, -1, dtype=np.int64)
        classes = []
        xs = np.arange(n)
        for g in range(n):
            if label[g] >= 0:
                continue
            conj = np.unique(t[t[xs, g], self.inv])
            label[conj] = len(classes)
            classes.append(tuple(int(c) for c in conj))
        return tuple(classes), label

    def name(self, x):
        if self.names is not None:
            return self.names[x]
        if self.perms is not None:
            return cycle_string(self.perms[x])
        return str(x)

    def __repr__(self):
        return f"FinGroup(order={self.order})"

    # -- derived constructions --------------------------------------------

    def subgroup(self, elements):
        """Materialize a subgroup; returns ``(FinGroup, embedding array)``."""
        elements = sorted(set(int(x) for x in elements))
        if elements[0] != self.identity:
            elements = sorted(set(elements) | {self.identity})
        pos = {x: i for i, x in enumerate(elements)}
        emb = np.array(elements, dtype=np.int64)
        try:
            sub = np.vectorize(pos.__getitem__, otypes=[np.int64])(self.table[np.ix_(emb, emb)])
        except KeyError:
            raise ValidationError("element set is not closed under multiplication") from None
        names = None if self.names is None else [self.names[x] for x in elements]
        perms = None if self.perms is None else [self.perms[x] for x in elements]
        return FinGroup(sub, identity=pos[self.identity], names=names, perms=perms,
                        check=False), emb


def trivial_group():
    return FinGroup(np.zeros((1, 1), dtype=np.int64), generators=[], check=False)


# -- permutations ---------------------------------------------------------

def cycle_string(perm):
    """1-based cycle notation of a permutation tuple (0-based images)."""
    seen = set()
    cycles = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            seen.add(i)
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


def _compose(x, y):
    return tuple(x[i] for i in y)


def group_from_generators(gens, degree=None):
    """Close permutations under composition.

    Elements are numbered breadth-first from the identity, multiplying on the
    right by generators in the given order.
    """
    gens = [tuple(int(i) for i in g) for g in gens]
    if degree is None:
        degree = max((len(g) for g in gens), default=0)
    padded = []
    for g in gens:
        if sorted(g) != list(range(len(g))):
            raise ValidationError(f"not a permutation: {g}")
        padded.append(g + tuple(range(len(g), degree)))
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    queue = deque([ident])
    limit = caps.CAPS.group_order
    while queue:
        x = queue.popleft()
        for g in padded:
            y = _compose(x, g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                if len(elems) > limit:
                    caps.check("group_order", len(elems), "closure of the generators is too large")
                queue.append(y)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for a, x in enumerate(elems):
        for b, y in enumerate(elems):
            table[a, b] = index[_compose(x, y)]
    gen_idx = []
    for g in padded:
        i = index[g]
        if i != 0 and i not in gen_idx:
            gen_idx.append(i)
    return FinGroup(table, generators=gen_idx, perms=elems)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutations(text):
    """Parse ``"(1 2);(1 2 3 4)"`` into 0-based permutation tuples.

    Generators are separated by ``;``; within one generator, cycles may be
    juxtaposed or separated by commas.
    """
    gens_cycles = []
    offset = 0
    for chunk in text.split(";"):
        stripped = chunk.strip()
        start = offset + (len(chunk) - len(chunk.lstrip()))
        offset += len(chunk) + 1
        if not stripped:
            raise ParseError("empty generator", text, start)
        cycles = []
        pos = 0
        body = stripped
        while pos < len(body):
            if body[pos] in " ,":
                pos += 1
                continue
            m = _CYCLE_RE.match(body, pos)
            if not m:
                raise ParseError("expected a cycle '(a b ...)'", text, start + pos)
            items = m.group(1).replace(",", " ").split()
            try:
                pts = [int(s) for s in items]
            except ValueError:
                raise ParseError("cycle entries must be integers", text, start + pos) from None
            if any(p < 1 for p in pts) or len(set(pts)) != len(pts):
                raise ParseError("cycle points must be distinct positive integers", text, start + pos)
            cycles.append(pts)
            pos = m.end()
        gens_cycles.append(cycles)
    degree = max((p for cyc in gens_cycles for c in cyc for p in c), default=0)
    perms = []
    for cycles in gens_cycles:
        img = list(range(degree))
        for c in reversed(cycles):
            # cycles act right to left like any product of permutations
            step = list(range(degree))
            for a, b in zip(c, c[1:] + c[:1]):
                step[a - 1] = b - 1
            img = [step[i] for i in img]
        perms.append(tuple(img))
    return perms


def symmetric_group(n):
    if n <= 1:
        return trivial_group()
    gens = [(1, 0) + tuple(range(2, n)), tuple(range(1, n)) + (0,)]
    if n == 2:
        gens = gens[:1]
    return group_from_generators(gens, degree=n)


def alternating_group(n):
    if n <= 2:
        return trivial_group()
    gens = [tuple([1, 2, 0] + list(range(3, n)))]
    for k in range(3, n):
        p = list(range(n))
        p[0], p[1], p[k] = 1, k, 0
        gens.append(tuple(p))
    return group_from_generators(gens, degree=n)


def cyclic_group(n):
    if n == 1:
        return trivial_group()
    return group_from_generators([tuple(range(1, n)) + (0,)], degree=n)


def dihedral_group(n):
    """Symmetries of the regular n-gon (order 2n)."""
    if n == 1:
        return cyclic_group(2)
    if n == 2:
        return group_from_generators([(1, 0, 3, 2), (2, 3, 0, 1)], degree=4)
    rot = tuple(range(1, n)) + (0,)
    ref = tuple((-i) % n for i in range(n))
    return group_from_generators([rot, ref], degree=n)


_NAMED_RE = re.compile(r"^([SACD])(\d+)$")


def parse_group(text):
    """Named group (``S4``, ``A4``, ``C6``, ``D5``) or permutation generators."""
    s = text.strip()
    m = _NAMED_RE.match(s)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if n < 1:
            raise ParseError("group index must be positive", text, len(text) - len(m.group(2)))
        return {"S": symmetric_group, "A": alternating_group,
                "C": cyclic_group, "D": dihedral_group}[kind](n)
    if s in ("1", "trivial", "()"):
        return trivial_group()
    if not s.startswith("("):
        raise ParseError("expected a group name (Sn, An, Cn, Dn) or permutations", text, 0)
    return group_from_generators(parse_permutations(s))


# -- products and subgroup views -----------------------------------------

class ProductGroup:
    """Direct product ``G1 x G2`` without a materialized table.

    Element ``(a, b)`` has index ``a * |G2| + b``.
    """

    def __init__(self, first, second):
        self.first = first
        self.second = second
        self.order = first.order * second.order
        self.identity = self.index(first.identity, second.identity)
        self.generators = tuple(
            [self.index(g, second.identity) for g in first.generators]
            + [self.index(first.identity, g) for g in second.generators])

    def index(self, a, b):
        return int(a) * self.second.order + int(b)

    def pair(self, x):
        return divmod(int(x), self.second.order)

    def mul(self, x, y):
        a1, b1 = self.pair(x)
        a2, b2 = self.pair(y)
        return self.index(self.first.mul(a1, a2), self.second.mul(b1, b2))

    def inv(self, x):
        a, b = self.pair(x)
        return self.index(self.first.inv[a], self.second.inv[b])

    def elements(self):
        return range(self.order)


class SubgroupView:
    """A subgroup of a group-like object, kept as a sorted element list."""

    def __init__(self, parent, elements):
        self.parent = parent
        self.elements = tuple(sorted(set(int(x) for x in elements)))
        self.order = len(self.elements)
        self.identity = parent.identity
        self.generators = self._generators()

    def mul(self, x, y):
        return self.parent.mul(x, y)

    def inv(self, x):
        return self.parent.inv(x) if callable(self.parent.inv) else int(self.parent.inv[x])

    def _generators(self):
        members = set(self.elements)
        gens = []
        span = {self.identity}
        for x in self.elements:
            if x in span:
                continue
            gens.append(x)
            # extend the span by right multiplication with all current gens
            span = set(span)
            queue = deque(span)
            while queue:
                y = queue.popleft()
                for g in gens:
                    z = self.parent.mul(y, g)
                    if z not in span:
                        if z not in members:
                            raise ValidationError("element set is not a subgroup")
                        span.add(z)
                        queue.append(z)
            if len(span) == self.order:
                break
        return tuple(gens)


# -- homomorphisms and automorphisms -------------------------------------

@dataclasses.dataclass(frozen=True)
class GroupHom:
    source: FinGroup
    target: FinGroup
    images: tuple

    def __call__(self, x):
        return self.images[x]

    def image_set(self):
        return sorted(set(self.images))

    def kernel(self):
        return [x for x, y in enumerate(self.images) if y == self.target.identity]

    def is_trivial(self):
        return all(y == self.target.identity for y in self.images)

    def check(self):
        src, tgt = self.source, self.target
        img = np.asarray(self.images)
        if img[src.identity] != tgt.identity:
            return False
        return bool((img[src.table] == tgt.table[img[:, None], img[None, :]]).all())


def _extend_map(G, K, gen_images, prefix):
    """Extend generator images to the subgroup generated by the first
    ``prefix`` generators; ``None`` if some relation fails."""
    gens = G.generators[:prefix]
    mapping = {G.identity: K.identity}
    queue = deque([G.identity])
    while queue:
        x = queue.popleft()
        fx = mapping[x]
        for j, g in enumerate(gens):
            y = int(G.table[x, g])
            val = int(K.table[fx, gen_images[j]])
            old = mapping.get(y)
            if old is None:
                mapping[y] = val
                queue.append(y)
            elif old != val:
                return None
    return mapping


def _search_homs(G, K, candidates, bijective=False):
    """Backtracking over generator images with relation pruning."""
    n = len(G.generators)
    results = []
    images = [0] * n

    def rec(i):
        if i == n:
            m = _extend_map(G, K, images, n)
            if m is None or len(m) != G.order:
                return
            table = tuple(m[x] for x in range(G.order))
            if bijective and len(set(table)) != G.order:
                return
            results.append(table)
            return
        for c in candidates[i]:
            images[i] = c
            if i + 1 < n and _extend_map(G, K, images, i + 1) is None:
                continue
            rec(i + 1)

    rec(0)
    return results


def enumerate_homs(H, K):
    """All homomorphisms ``H -> K`` in a deterministic order."""
    caps.check("group_order", H.order)
    caps.check("group_order", K.order)
    if not H.generators:
        return [GroupHom(H, K, (K.identity,) * H.order)]
    Kord = K.element_orders
    candidates = []
    for g in H.generators:
        o = int(H.element_orders[g])
        candidates.append([y for y in range(K.order) if o % int(Kord[y]) == 0])
    tables = _search_homs(H, K, candidates)
    return [GroupHom(H, K, t) for t in sorted(set(tables))]


@dataclasses.dataclass(frozen=True)
class AutomorphismGroup:
    """``group`` is abstract; ``action[a, x]`` is the image of ``x`` under ``a``."""

    group: FinGroup
    action: np.ndarray
    base: FinGroup

    def hom(self, a):
        return GroupHom(self.base, self.base, tuple(int(v) for v in self.action[a]))

    def index_of(self, images):
        return self._lookup[tuple(int(v) for v in images)]

    @functools.cached_property
    def _lookup(self):
        return {tuple(int(v) for v in row): a for a, row in enumerate(self.action)}


def group_from_maps(maps, degree):
    """Group of bijections of ``range(degree)`` given as a complete list
    (identity first).  Composition ``(a*b)(x) = a(b(x))``."""
    maps = [tuple(int(v) for v in m) for m in maps]
    index = {m: i for i, m in enumerate(maps)}
    n = len(maps)
    arr = np.array(maps, dtype=np.int64).reshape(n, degree)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        comp = arr[a][arr]  # row b -> a(b(x))
        for b in range(n):
            table[a, b] = index[tuple(comp[b])]
    return FinGroup(table, identity=0, check=False), arr


def automorphism_group(G):
    """Full automorphism group of ``G`` with its action on ``G``."""
    caps.check("group_order", G.order)
    if not G.generators:
        grp = trivial_group()
        return AutomorphismGroup(grp, np.array([[G.identity]], dtype=np.int64), G)
    orders = G.element_orders
    classes, label = G.conjugacy_classes
    size = np.array([len(classes[label[x]]) for x in range(G.order)])
    candidates = []
    for g in G.generators:
        candidates.append([y for y in range(G.order)
                           if orders[y] == orders[g] and size[y] == size[g]])
    tables = _search_homs(G, G, candidates, bijective=True)
    ident = tuple(range(G.order))
    tables = [ident] + sorted(t for t in set(tables) if t != ident)
    caps.check("group_order", len(tables), "automorphism group too large")
    grp, arr = group_from_maps(tables, G.order)
    arr.setflags(write=False)
    return AutomorphismGroup(grp, arr, G)


# -- actions and orbit counting ------------------------------------------

@dataclasses.dataclass
class GroupAction:
    """``table[g, x]``: image of point ``x`` under group element ``g``.

    ``group`` is any group-like object (``FinGroup``, ``ProductGroup``,
    ``SubgroupView``); rows are indexed by position in ``elements``.
    """

    group: object
    elements: tuple
    table: np.ndarray

    @property
    def npoints(self):
        return self.table.shape[1]

    def check(self):
        pos = {g: i for i, g in enumerate(self.elements)}
        e = pos[self.group.identity]
        if (self.table[e] != np.arange(self.npoints)).any():
            raise ConsistencyError("identity does not act trivially")
        for s in self.group.generators:
            rs = self.table[pos[s]]
            for g in self.elements:
                gs = pos[self.group.mul(g, s)]
                if (self.table[gs] != self.table[pos[g]][rs]).any():
                    raise ConsistencyError("action table does not respect multiplication")


def orbits_direct(action):
    """Orbits by union-find over the generators; sorted by least element."""
    n = action.npoints
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pos = {g: i for i, g in enumerate(action.elements)}
    for s in action.group.generators:
        row = action.table[pos[s]]
        for x in range(n):
            a, b = find(x), find(int(row[x]))
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return sorted(groups.values())


def burnside_count(fixed_counts, group_order):
    total = int(sum(int(c) for c in fixed_counts))
    if total % group_order:
        raise ConsistencyError(
            f"Burnside sum {total} is not divisible by the group order {group_order}")
    return total // group_order


def count_orbits(action):
    """Number of orbits, by Burnside averaging and by direct enumeration.

    Raises ConsistencyError if the two disagree.
    """
    fixed = (action.table == np.arange(action.npoints)[None, :]).sum(axis=1)
    if len(action.elements) != action.group.order:
        raise ConsistencyError("action table rows do not cover the group")
    by_burnside = burnside_count(fixed, action.group.order)
    by_orbits = len(orbits_direct(action))
    if by_burnside != by_orbits:
        raise ConsistencyError(
            f"Burnside count {by_burnside} != direct orbit count {by_orbits}")
    return by_orbits


@dataclasses.dataclass
class HomOrbit:
    representative: GroupHom
    members: list          # indices into the hom list
    stabilizer: SubgroupView


def hom_orbits(homs, outer, autH, outer_embed=None):
    """Orbits of ``(gamma, delta) * phi = gamma phi(delta^-1 -) gamma^-1``.

    ``outer`` acts on the common target ``K`` by conjugation through
    ``outer_embed`` (default: ``outer`` is ``K``); ``autH`` is an
    ``AutomorphismGroup`` of the common source ``H``.  Stabilizers are
    subgroups of ``ProductGroup(outer, autH.group)``.
    """
    if not homs:
        return []
    K = homs[0].target
    if outer_embed is None:
        outer_embed = np.arange(outer.order)
    outer_embed = np.asarray(outer_embed)
    prod = ProductGroup(outer, autH.group)
    index = {h.images: i for i, h in enumerate(homs)}
    Kt = K.table
    aut_inv = [int(autH.group.inv[d]) for d in range(autH.group.order)]

    def act(x, images):
        gam, dl = prod.pair(x)
        g = int(outer_embed[gam])
        ginv = int(K.inv[g])
        pre = autH.action[aut_inv[dl]]
        img = np.asarray(images)[pre]
        return tuple(int(v) for v in Kt[Kt[g, img], ginv])

    seen = [False] * len(homs)
    result = []
    for i, h in enumerate(homs):
        if seen[i]:
            continue
        members = [i]
        seen[i] = True
        queue = deque([h.images])
        while queue:
            cur = queue.popleft()
            for s in prod.generators:
                nxt = act(s, cur)
                j = index.get(nxt)
                if j is None:
                    raise ValidationError("hom list is not closed under the action")
                if not seen[j]:
                    seen[j] = True
                    members.append(j)
                    queue.append(nxt)
        stab = [x for x in prod.elements() if act(x, h.images) == h.images]
        if len(members) * len(stab) != prod.order:
            raise ConsistencyError("orbit-stabilizer relation fails")
        result.append(HomOrbit(h, sorted(members), SubgroupView(prod, stab)))
    return result


# -- description ----------------------------------------------------------

def abelian_invariants(G):
    """Invariant factors of an abelian group via its element-order census."""
    if not G.is_abelian():
        raise ValueError("group is not abelian")
    # p-part of each cyclic factor from counts of elements of order dividing p^k
    n = G.order
    orders = G.element_orders
    factors = []
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, int(p**0.5) + 1))]
    per_prime = {}
    for p in primes:
        # number of elements with order dividing p^k is p^(sum_i min(k, e_i))
        exps = []
        k = 1
        prev = 0
        counts = []
        while True:
            c = int(sum(1 for o in orders if (p**k) % int(o) == 0))
            lg = round(math.log(c, p))
            counts.append(lg)
            if lg == prev:
                counts.pop()
                break
            prev = lg
            k += 1
        # r_k = number of cyclic factors with exponent >= k
        r = [counts[0]] + [counts[i] - counts[i - 1] for i in range(1, len(counts))]
        for kk in range(len(r)):
            nxt = r[kk + 1] if kk + 1 < len(r) else 0
            exps += [kk + 1] * (r[kk] - nxt)
        per_prime[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in per_prime.values()), default=0)
    for i in range(width):
        d = 1
        for p, exps in per_prime.items():
            if i < len(exps):
                d *= p ** exps[i]
        factors.append(d)
    return sorted(factors)


def describe_group(G):
    """Short isomorphism-type label for small groups, else ``order n``."""
    n = G.order
    if n == 1:
        return "1"
    if G.is_abelian():
        inv = abelian_invariants(G)
        return " x ".join(f"C{d}" for d in inv)
    ords = sorted(int(o) for o in G.element_orders)
    invol = ords.count(2)
    m = n // 2
    if n % 2 == 0 and max(ords) == m and invol == m + (1 - m % 2):
        return "S3" if m == 3 else f"D{m}"
    if n == 8 and invol == 1:
        return "Q8"
    if n == 12 and invol == 3 and max(ords) == 3:
        return "A4"
    if n == 24 and invol == 9 and max(ords) == 4:
        return "S4"
    return f"group of order {n}"


from ._dixon import character_degrees  # noqa: E402  (re-export)

__all__ = [
    "FinGroup", "GroupHom", "GroupAction", "AutomorphismGroup", "ProductGroup",
    "SubgroupView", "HomOrbit", "group_from_generators", "parse_group",
    "parse_permutations", "automorphism_group", "enumerate_homs", "hom_orbits",
    "count_orbits", "character_degrees", "symmetric_group", "alternating_group",
    "cyclic_group", "dihedral_group", "trivial_group", "describe_group",
]
