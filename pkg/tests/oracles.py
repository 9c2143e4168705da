"""Small independent oracles used to freeze expected values.

Nothing here imports the package's algorithms; only plain Python and numpy.
"""

import itertools

import numpy as np


# -- permutations ---------------------------------------------------------------

def compose(x, y):
    """``(x*y)(i) = x(y(i))``."""
    return tuple(x[i] for i in y)


def closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = compose(a, g)
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def table_of(elements):
    pos = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    return np.array([[pos[compose(elements[a], elements[b])] for b in range(n)]
                     for a in range(n)], dtype=np.int64)


def count_homs_brute(T1, T2):
    """Homomorphisms between tables by trying every map."""
    n1, n2 = len(T1), len(T2)
    count = 0
    for f in itertools.product(range(n2), repeat=n1):
        if all(f[T1[a][b]] == T2[f[a]][f[b]] for a in range(n1) for b in range(n1)):
            count += 1
    return count


# -- cohomology over F_p by dense ranks ---------------------------------------------

def rank_mod_p(M, p):
    M = np.array(M, dtype=np.int64) % p
    rows, cols = M.shape
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if M[i, c]:
                piv = i
                break
        if piv is None:
            continue
        M[[r, piv]] = M[[piv, r]]
        M[r] = (M[r] * pow(int(M[r, c]), -1, p)) % p
        nz = np.nonzero(M[:, c])[0]
        for i in nz:
            if i != r:
                M[i] = (M[i] - M[i, c] * M[r]) % p
        r += 1
        if r == rows:
            break
    return r


def h2_dim_trivial_fp(T, p):
    """``dim H^2(G, F_p)`` for the trivial module from the inhomogeneous complex."""
    T = np.asarray(T)
    n = len(T)
    # d1: C^1 -> C^2, (dc)(g,h) = c(h) - c(gh) + c(g)
    d1 = np.zeros((n * n, n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            row = g * n + h
            d1[row, h] += 1
            d1[row, T[g, h]] -= 1
            d1[row, g] += 1
    # d2: C^2 -> C^3, (df)(g,h,k) = f(h,k) - f(gh,k) + f(g,hk) - f(g,h)
    d2 = np.zeros((n ** 3, n * n), dtype=np.int64)
    for g in range(n):
        for h in range(n):
            for k in range(n):
                row = (g * n + h) * n + k
                d2[row, h * n + k] += 1
                d2[row, T[g, h] * n + k] -= 1
                d2[row, g * n + T[h, k]] += 1
                d2[row, g * n + h] -= 1
    z2 = n * n - rank_mod_p(d2, p)
    b2 = rank_mod_p(d1, p)
    return z2 - b2


# -- type A characters by semistandard tableaux ---------------------------------------

def _ssyt_contents(shape, n):
    """Content vectors (length ``n``) of semistandard tableaux of ``shape``."""
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    out = []
    filling = {}

    def rec(i):
        if i == len(cells):
            content = [0] * n
            for v in filling.values():
                content[v] += 1
            out.append(tuple(content))
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = max(lo, filling[(r, c - 1)])
        if r > 0:
            lo = max(lo, filling[(r - 1, c)] + 1)
        for v in range(lo, n):
            filling[(r, c)] = v
            rec(i + 1)
        filling.pop((r, c), None)

    rec(0)
    return out


def type_a_character(lam):
    """Weight multiset of ``L(lam)`` for ``A_n`` in fundamental-weight coordinates."""
    n = len(lam) + 1
    shape = [sum(lam[i:]) for i in range(len(lam))]
    shape = [s for s in shape if s]
    char = {}
    for content in _ssyt_contents(shape, n):
        w = tuple(content[i] - content[i + 1] for i in range(n - 1))
        char[w] = char.get(w, 0) + 1
    return char


def product_character(c1, c2):
    out = {}
    for a, x in c1.items():
        for b, y in c2.items():
            w = tuple(i + j for i, j in zip(a, b))
            out[w] = out.get(w, 0) + x * y
    return out


def peel(char, character_of, root_height):
    """Decompose a character by repeatedly removing a highest dominant weight."""
    char = {k: v for k, v in char.items() if v}
    out = {}
    while char:
        top = max(char, key=lambda w: (root_height(w), w))
        m = char[top]
        out[top] = m
        for w, c in character_of(top).items():
            char[w] = char.get(w, 0) - m * c
            if not char[w]:
                del char[w]
    return out


def a_height(w):
    """A height for type A_n in fundamental coordinates that is positive on simple roots."""
    n = len(w)
    # <w, 2 rho^vee> with rho^vee in fundamental-coweight basis: sum_i i(n+1-i) w_i
    return sum((i + 1) * (n - i) * x for i, x in enumerate(w))


def type_a_tensor(lam, mu):
    prod = product_character(type_a_character(lam), type_a_character(mu))
    return peel(prod, type_a_character, a_height)


def clebsch_gordan(a, b):
    """``L(a) x L(b)`` for A1 as ``{c: 1}``."""
    return {(c,): 1 for c in range(abs(a - b), a + b + 1, 2)}
