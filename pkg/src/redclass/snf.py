"""Smith normal form over the integers and over ``Z/E``.

``smith_normal_form`` works on Python integers and returns unimodular
transforms.  ``snf_mod`` works on int64 arrays modulo ``E`` and is the
workhorse for cochain matrices, which can have thousands of rows.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ConsistencyError


def _ident(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def smith_normal_form(M):
    """Return ``(D, U, V)`` with ``U @ M @ V == D`` exactly.

    ``D`` is diagonal (same shape as ``M``) with ``d1 | d2 | ...`` and
    nonnegative entries; ``U`` and ``V`` have determinant +-1.
    """
    A = [[int(x) for x in row] for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _ident(m)
    V = _ident(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def row_combo(i, j, a, b, c, d):
        # (row_i, row_j) <- (a r_i + b r_j, c r_i + d r_j)
        for R in (A, U):
            ri, rj = R[i], R[j]
            R[i] = [a * x + b * y for x, y in zip(ri, rj)]
            R[j] = [c * x + d * y for x, y in zip(ri, rj)]

    def col_combo(i, j, a, b, c, d):
        for R in (A, V):
            for row in R:
                x, y = row[i], row[j]
                row[i] = a * x + b * y
                row[j] = c * x + d * y

    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            changed = False
            for k in range(t + 1, m):
                if A[k][t]:
                    a, b = A[t][t], A[k][t]
                    if b % a == 0:
                        q = b // a
                        row_combo(t, k, 1, 0, -q, 1)
                    else:
                        g, s, u = _xgcd(a, b)
                        row_combo(t, k, s, u, -b // g, a // g)
                        changed = True
            for k in range(t + 1, n):
                if A[t][k]:
                    a, b = A[t][t], A[t][k]
                    if b % a == 0:
                        q = b // a
                        col_combo(t, k, 1, 0, -q, 1)
                    else:
                        g, s, u = _xgcd(a, b)
                        col_combo(t, k, s, u, -b // g, a // g)
                        changed = True
            if not changed and all(A[k][t] == 0 for k in range(t + 1, m)) \
                    and all(A[t][k] == 0 for k in range(t + 1, n)):
                # enforce divisibility of the remaining block
                bad = [(i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                       if A[i][j] % A[t][t]]
                if not bad:
                    break
                row_combo(t, bad[0][0], 1, 1, 0, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    if _matmul(_matmul(U, [[int(x) for x in row] for row in M]), V) != A:
        raise ConsistencyError("Smith normal form certificate failed")
    return A, U, V


def _xgcd(a, b):
    """``(g, s, t)`` with ``s a + t b = g = gcd(a, b) > 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def invariant_factors(M):
    """Nonzero diagonal of the Smith form (including 1s)."""
    D, _, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0)) if D[i][i]]


def determinant(M):
    """Exact integer determinant (fraction-free elimination)."""
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else 1


# -- modular version -------------------------------------------------------

def _unit_part(a, E):
    """Return ``(g, u)`` with ``g = gcd(a, E)``, ``u`` a unit and ``a = u g mod E``."""
    g = math.gcd(a, E)
    c = (a // g) % E
    m = E // g
    u = c
    while math.gcd(u, E) != 1:
        u += m
    return g, u % E


class ModSNF:
    """``U @ A @ V == D (mod E)`` with invertible ``U``, ``V`` over ``Z/E``.

    ``diag[i]`` is a divisor of ``E`` (``E`` meaning zero); the sequence is a
    divisibility chain.  Left transforms are tracked only on request.
    """

    def __init__(self, A, E, left=False, right=True):
        A = np.array(A, dtype=np.int64) % E
        self.E = E
        m, n = A.shape
        self.shape = (m, n)
        self.U = np.eye(m, dtype=np.int64) if left else None
        self.Uinv = np.eye(m, dtype=np.int64) if left else None
        self.V = np.eye(n, dtype=np.int64) if right else None
        self.Vinv = np.eye(n, dtype=np.int64) if right else None
        self._run(A)

    # elementary operations keep all tracked transforms in sync

    def _swap_rows(self, A, i, j):
        if i == j:
            return
        A[[i, j]] = A[[j, i]]
        if self.U is not None:
            self.U[[i, j]] = self.U[[j, i]]
            self.Uinv[:, [i, j]] = self.Uinv[:, [j, i]]

    def _swap_cols(self, A, i, j):
        if i == j:
            return
        A[:, [i, j]] = A[:, [j, i]]
        if self.V is not None:
            self.V[:, [i, j]] = self.V[:, [j, i]]
            self.Vinv[[i, j]] = self.Vinv[[j, i]]

    def _scale_row(self, A, i, u):
        E = self.E
        uinv = pow(int(u), -1, E)
        A[i] = A[i] * uinv % E
        if self.U is not None:
            self.U[i] = self.U[i] * uinv % E
            self.Uinv[:, i] = self.Uinv[:, i] * u % E

    def _bezout_rows(self, A, t, k, s, u, c, d):
        # rows (t,k) <- [[s,u],[c,d]] rows, det 1; inverse [[d,-u],[-c,s]]
        E = self.E
        rt, rk = A[t].copy(), A[k].copy()
        A[t] = (s * rt + u * rk) % E
        A[k] = (c * rt + d * rk) % E
        if self.U is not None:
            rt, rk = self.U[t].copy(), self.U[k].copy()
            self.U[t] = (s * rt + u * rk) % E
            self.U[k] = (c * rt + d * rk) % E
            ct, ck = self.Uinv[:, t].copy(), self.Uinv[:, k].copy()
            self.Uinv[:, t] = (ct * d - ck * c) % E
            self.Uinv[:, k] = (-ct * u + ck * s) % E

    def _bezout_cols(self, A, t, k, s, u, c, d):
        # cols (t,k) <- (s c_t + u c_k, c c_t + d c_k)
        E = self.E
        ct, ck = A[:, t].copy(), A[:, k].copy()
        A[:, t] = (s * ct + u * ck) % E
        A[:, k] = (c * ct + d * ck) % E
        if self.V is not None:
            ct, ck = self.V[:, t].copy(), self.V[:, k].copy()
            self.V[:, t] = (s * ct + u * ck) % E
            self.V[:, k] = (c * ct + d * ck) % E
            rt, rk = self.Vinv[t].copy(), self.Vinv[k].copy()
            self.Vinv[t] = (d * rt - c * rk) % E
            self.Vinv[k] = (-u * rt + s * rk) % E

    def _pivot(self, A, t):
        """Bring a minimal-gcd entry to ``(t, t)`` and clear its row/column."""
        E = self.E
        m, n = A.shape
        sub = A[t:, t:]
        if not sub.any():
            return False
        g_all = np.gcd(sub, E)
        i, j = np.unravel_index(np.argmin(g_all), g_all.shape)
        self._swap_rows(A, t, t + i)
        self._swap_cols(A, t, t + j)
        while True:
            g, u = _unit_part(int(A[t, t]), E)
            if u != 1:
                self._scale_row(A, t, u)
            col = A[t + 1:, t]
            bad = np.nonzero(col % g)[0]
            if len(bad):
                k = t + 1 + int(bad[0])
                b = int(A[k, t])
                h, s, v = _xgcd(g, b)
                self._bezout_rows(A, t, k, s % E, v % E, (-b // h) % E, (g // h) % E)
                continue
            row = A[t, t + 1:]
            bad = np.nonzero(row % g)[0]
            if len(bad):
                k = t + 1 + int(bad[0])
                b = int(A[t, k])
                h, s, v = _xgcd(g, b)
                self._bezout_cols(A, t, k, s % E, v % E, (-b // h) % E, (g // h) % E)
                continue
            break
        g = int(A[t, t])
        rows = np.nonzero(A[t + 1:, t])[0] + t + 1
        if len(rows):
            q = A[rows, t] // g
            A[rows] = (A[rows] - np.outer(q, A[t])) % E
            if self.U is not None:
                self.U[rows] = (self.U[rows] - np.outer(q, self.U[t])) % E
                self.Uinv[:, t] = (self.Uinv[:, t] + self.Uinv[:, rows] @ q) % E
        cols = np.nonzero(A[t, t + 1:])[0] + t + 1
        if len(cols):
            r = A[t, cols] // g
            A[t, cols] = 0
            if self.V is not None:
                self.V[:, cols] = (self.V[:, cols] - np.outer(self.V[:, t], r)) % E
                self.Vinv[t] = (self.Vinv[t] + r @ self.Vinv[cols]) % E
        return True

    def _run(self, A):
        E = self.E
        m, n = A.shape
        t = 0
        rank = 0
        while t < min(m, n):
            if not self._pivot(A, t):
                break
            t += 1
            rank = t
            # keep the chain: a later pivot must be a multiple of this one
            if t < min(m, n):
                g = int(A[t - 1, t - 1])
                rest = A[t:, t:]
                if (rest % g).any():
                    i, j = np.argwhere(rest % g)[0]
                    # fold the offending row into the pivot row and redo it
                    k = t + int(i)
                    self._bezout_rows(A, t - 1, k, 1, 1, 0, 1)
                    t -= 1
                    rank = t
        diag = [int(A[i, i]) if i < rank else 0 for i in range(min(m, n))]
        self.diag = [d if d else E for d in diag]
        self.rank = sum(1 for d in self.diag if d != E)
        self.D = A

    def check(self, A0):
        if self.U is None or self.V is None:
            raise ValueError("both transforms are needed for the certificate")
        E = self.E
        lhs = self.U @ (np.asarray(A0, dtype=np.int64) % E) % E @ self.V % E
        if (lhs != self.D).any():
            raise ConsistencyError("modular Smith form certificate failed")
        m, n = self.shape
        if ((self.U @ self.Uinv % E) != np.eye(m, dtype=np.int64)).any() or \
                ((self.V @ self.Vinv % E) != np.eye(n, dtype=np.int64)).any():
            raise ConsistencyError("modular transforms are not inverse pairs")


def snf_mod(A, E, left=False, right=True):
    return ModSNF(A, E, left=left, right=right)


def kernel_mod(A, E):
    """Generators of ``{x in (Z/E)^n : A x = 0}`` as columns, plus ``(V, Vinv, g)``.

    In coordinates ``y = Vinv x`` the kernel is ``y_k in (E/g_k) Z/E``; ``g_k``
    is the order of the k-th cyclic factor.
    """
    A = np.asarray(A, dtype=np.int64)
    m, n = A.shape
    S = ModSNF(A, E, left=False, right=True)
    # d_k y_k = 0 mod E  <=>  y_k in (E/d_k) Z/E, a cyclic factor of order d_k;
    # columns past the diagonal are unconstrained (order E)
    orders = [S.diag[k] if k < len(S.diag) else E for k in range(n)]
    gens = np.stack([S.V[:, k] * (E // orders[k]) % E for k in range(n)], axis=1)
    return gens, S.V, S.Vinv, orders


def cokernel_mod(P, E):
    """Structure of ``(Z/E)^m / column span of P``.

    Returns ``(orders, U, Uinv)``: the quotient is ``sum Z/orders[i]`` and
    the class of ``z`` has coordinates ``(U z)_i mod orders[i]``.
    """
    P = np.asarray(P, dtype=np.int64)
    m = P.shape[0]
    if P.shape[1] == 0:
        return [E] * m, np.eye(m, dtype=np.int64), np.eye(m, dtype=np.int64)
    S = ModSNF(P, E, left=True, right=False)
    orders = []
    for i in range(m):
        d = S.diag[i] if i < len(S.diag) else E
        orders.append(d)
    return orders, S.U, S.Uinv
