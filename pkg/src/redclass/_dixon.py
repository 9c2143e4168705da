"""Irreducible character degrees by simultaneous diagonalization of class
matrices over a prime field."""

from __future__ import annotations

import math

import numpy as np

from .errors import ConsistencyError


def _is_prime(n):
    if n < 2:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % q == 0:
            return False
    return True


def dixon_prime(order, exponent):
    """Smallest prime ``p = 1 mod exponent`` with ``p > 2 * order``."""
    p = exponent * (2 * order // exponent + 1) + 1
    while not _is_prime(p):
        p += exponent
    return p


def _nullspace_mod(A, p):
    """Basis (as columns) of the right kernel of ``A`` over ``F_p``."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + nz[0]
        A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if len(others):
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-A[i, f]) % p
    return basis


def _solve_mod(V, W, p):
    """Solve ``V R = W`` for ``R`` where ``V`` has independent columns."""
    aug = np.concatenate([V, W], axis=1) % p
    n, d = V.shape
    r = 0
    for c in range(d):
        nz = np.nonzero(aug[r:, c])[0]
        k = r + nz[0]
        aug[[r, k]] = aug[[k, r]]
        aug[r] = (aug[r] * pow(int(aug[r, c]), -1, p)) % p
        others = np.nonzero(aug[:, c])[0]
        others = others[others != r]
        if len(others):
            aug[others] = (aug[others] - np.outer(aug[others, c], aug[r])) % p
        r += 1
    return aug[:d, d:]


def _det_mod(A, p):
    A = np.array(A, dtype=np.int64) % p
    n = A.shape[0]
    det = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if len(nz) == 0:
            return 0
        k = c + nz[0]
        if k != c:
            A[[c, k]] = A[[k, c]]
            det = -det
        det = det * int(A[c, c]) % p
        inv = pow(int(A[c, c]), -1, p)
        below = A[c + 1:, c] * inv % p
        A[c + 1:] = (A[c + 1:] - np.outer(below, A[c])) % p
    return det % p


def _eigenvalues_mod(R, p):
    """Distinct eigenvalues in ``F_p`` (roots of the characteristic polynomial)."""
    d = R.shape[0]
    eye = np.eye(d, dtype=np.int64)
    return [x for x in range(p) if _det_mod(R - x * eye, p) == 0]


def class_structure(G):
    """Classes, representatives, inverse-class map and structure constants.

    ``a[j, k, l]`` counts pairs ``(x, y)`` in ``C_j x C_k`` with ``x y = g_l``.
    """
    classes, label = G.conjugacy_classes
    r = len(classes)
    reps = [c[0] for c in classes]
    inv_class = [int(label[G.inv[g]]) for g in reps]
    a = np.zeros((r, r, r), dtype=np.int64)
    for j, cj in enumerate(classes):
        xs = np.array(cj)
        for l, gl in enumerate(reps):
            ys = G.table[G.inv[xs], gl]
            np.add.at(a[j, :, l], label[ys], 1)
    return classes, reps, inv_class, a


def character_degrees(G):
    """Sorted degrees of the complex irreducible characters of ``G``."""
    n = G.order
    if n == 1:
        return [1]
    classes, reps, inv_class, a = class_structure(G)
    r = len(classes)
    if G.is_abelian():
        return [1] * n
    p = dixon_prime(n, G.exponent)
    spaces = [np.eye(r, dtype=np.int64)]
    done = []
    for j in range(1, r):
        nxt = []
        for V in spaces:
            if V.shape[1] == 1:
                done.append(V)
                continue
            R = _solve_mod(V, a[j] @ V % p, p)
            vals = _eigenvalues_mod(R, p)
            dim = V.shape[1]
            for lam in vals:
                N = _nullspace_mod(R - lam * np.eye(dim, dtype=np.int64), p)
                nxt.append(V @ N % p)
        spaces = nxt
        if all(V.shape[1] == 1 for V in spaces):
            break
    done += spaces
    if len(done) != r or any(V.shape[1] != 1 for V in done):
        raise ConsistencyError("class matrices failed to split into eigenlines")
    sizes = [len(c) for c in classes]
    degrees = []
    for V in done:
        w = V[:, 0] % p
        if w[0] == 0:
            raise ConsistencyError("eigenvector has zero identity coordinate")
        w = w * pow(int(w[0]), -1, p) % p
        s = 0
        for k in range(r):
            s = (s + int(w[k]) * int(w[inv_class[k]]) * pow(sizes[k], -1, p)) % p
        d2 = n * pow(s, -1, p) % p
        d = math.isqrt(d2)
        if d * d != d2 or n % d:
            raise ConsistencyError(f"degree squared {d2} is not a square dividing |G|")
        degrees.append(d)
    degrees.sort()
    if sum(d * d for d in degrees) != n:
        raise ConsistencyError("sum of squared degrees differs from the group order")
    return degrees
