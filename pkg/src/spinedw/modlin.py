"""Exact integer and modular linear algebra.

Everything here works over Z or Z_m with gcd pivoting; no floating point.
Small dense problems (cocycle solving, cohomology quotients) go through an
exact Smith-style diagonalization on object-dtype arrays; bulk membership
tests use an int64 Howell-style row echelon mod m where entries stay
bounded by m.
"""

from __future__ import annotations

from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np


def _exgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def smith_normal_form(
    a: np.ndarray,
) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Diagonalize an integer matrix: A = U @ D @ V with U, V unimodular.

    Returns (U, D, V, Uinv, Vinv).  D is diagonal with non-negative entries;
    the divisibility chain is not enforced (callers that need canonical
    cyclic orders recombine them separately).
    """
    d = np.array(a, dtype=object).copy()
    rows, cols = d.shape
    u = np.eye(rows, dtype=object)
    uinv = np.eye(rows, dtype=object)
    v = np.eye(cols, dtype=object)
    vinv = np.eye(cols, dtype=object)

    def row_combine(i: int, j: int, m11: int, m12: int, m21: int, m22: int) -> None:
        # left multiplication by det-1 matrix M = [[m11, m12], [m21, m22]]
        ri, rj = m11 * d[i, :] + m12 * d[j, :], m21 * d[i, :] + m22 * d[j, :]
        d[i, :], d[j, :] = ri, rj
        qi, qj = m11 * uinv[i, :] + m12 * uinv[j, :], m21 * uinv[i, :] + m22 * uinv[j, :]
        uinv[i, :], uinv[j, :] = qi, qj
        ci, cj = m22 * u[:, i] - m21 * u[:, j], -m12 * u[:, i] + m11 * u[:, j]
        u[:, i], u[:, j] = ci, cj

    def col_combine(i: int, j: int, m11: int, m12: int, m21: int, m22: int) -> None:
        ci, cj = m11 * d[:, i] + m12 * d[:, j], m21 * d[:, i] + m22 * d[:, j]
        d[:, i], d[:, j] = ci, cj
        qi, qj = (
            m11 * vinv[:, i] + m12 * vinv[:, j],
            m21 * vinv[:, i] + m22 * vinv[:, j],
        )
        vinv[:, i], vinv[:, j] = qi, qj
        ri, rj = m22 * v[i, :] - m21 * v[j, :], -m12 * v[i, :] + m11 * v[j, :]
        v[i, :], v[j, :] = ri, rj

    limit = min(rows, cols)
    for k in range(limit):
        pivot = None
        for jcol in range(k, cols):
            for irow in range(k, rows):
                if d[irow, jcol] != 0:
                    pivot = (irow, jcol)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        if pi != k:
            row_combine(k, pi, 0, 1, -1, 0)
        if pj != k:
            col_combine(k, pj, 0, 1, -1, 0)
        while True:
            for i in range(k + 1, rows):
                if d[i, k] != 0:
                    g, x, y = _exgcd(int(d[k, k]), int(d[i, k]))
                    row_combine(k, i, x, y, -int(d[i, k]) // g, int(d[k, k]) // g)
            for j in range(k + 1, cols):
                if d[k, j] != 0:
                    g, x, y = _exgcd(int(d[k, k]), int(d[k, j]))
                    col_combine(k, j, x, y, -int(d[k, j]) // g, int(d[k, k]) // g)
            if all(d[i, k] == 0 for i in range(k + 1, rows)) and all(
                d[k, j] == 0 for j in range(k + 1, cols)
            ):
                break
    for i in range(limit):
        if d[i, i] < 0:
            d[i, :] = -d[i, :]
            uinv[i, :] = -uinv[i, :]
            u[:, i] = -u[:, i]
    return u, d, v, uinv, vinv


def solve_int(a: np.ndarray, b: np.ndarray) -> Optional[np.ndarray]:
    """One integer solution x of A x = b, or None when unsolvable."""
    a = np.array(a, dtype=object)
    b = np.array(b, dtype=object)
    u, d, v, uinv, vinv = smith_normal_form(a)
    c = uinv @ b
    rows, cols = a.shape
    y = np.zeros(cols, dtype=object)
    for i in range(rows):
        di = d[i, i] if i < min(rows, cols) else 0
        ci = c[i]
        if di == 0:
            if ci != 0:
                return None
        else:
            if ci % di != 0:
                return None
            y[i] = ci // di
    return vinv @ y


def lattice_basis(gens: np.ndarray) -> np.ndarray:
    """Basis (as columns) of the lattice spanned by the columns of gens."""
    gens = np.array(gens, dtype=object)
    u, d, _, _, _ = smith_normal_form(gens)
    cols = []
    for i in range(min(gens.shape)):
        if d[i, i] != 0:
            cols.append(u[:, i] * d[i, i])
    if not cols:
        return np.zeros((gens.shape[0], 0), dtype=object)
    return np.stack(cols, axis=1)


def kernel_mod(a: np.ndarray, m: int) -> List[Tuple[np.ndarray, int]]:
    """Generators of {x in Z_m^n : A x = 0 mod m} with their orders.

    The solution group is the internal direct sum of the cyclic groups
    generated by the returned vectors; only orders > 1 are kept.
    """
    a = np.array(a, dtype=object)
    rows, cols = a.shape
    if cols == 0:
        return []
    _, d, _, _, vinv = smith_normal_form(a)
    gens: List[Tuple[np.ndarray, int]] = []
    rank = min(rows, cols)
    for i in range(cols):
        di = int(d[i, i]) if i < rank else 0
        order = gcd(di, m) if di != 0 else m
        if order <= 1:
            continue
        y = np.zeros(cols, dtype=object)
        y[i] = m // order
        x = (vinv @ y) % m
        gens.append((x.astype(object), order))
    return gens


def cyclic_orders_to_invariant_factors(orders: Sequence[int]) -> List[int]:
    """Canonical invariant factor list of a direct sum of cyclic groups."""
    primes: dict[int, List[int]] = {}
    for n in orders:
        n = int(n)
        if n <= 1:
            continue
        p = 2
        while p * p <= n:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                primes.setdefault(p, []).append(p**e)
            p += 1
        if n > 1:
            primes.setdefault(n, []).append(n)
    for p in primes:
        primes[p].sort(reverse=True)
    factors: List[int] = []
    i = 0
    while any(i < len(v) for v in primes.values()):
        f = 1
        for powers in primes.values():
            if i < len(powers):
                f *= powers[i]
        factors.append(f)
        i += 1
    factors.sort()
    return factors


class ModRowBasis:
    """Row span over Z_m of integer row vectors, with bulk membership tests.

    Elimination uses unimodular 2x2 gcd combinations plus Howell-style
    saturation rows, so greedy reduction against the echelon rows decides
    membership exactly even for composite m.  All arithmetic stays in int64
    because every intermediate value is reduced mod m.
    """

    def __init__(self, rows: np.ndarray, m: int) -> None:
        self.m = int(m)
        mat = np.asarray(rows, dtype=np.int64) % self.m
        ncols = mat.shape[1]
        reduced: List[np.ndarray] = []
        pivot_cols: List[int] = []
        work = [row.copy() for row in mat if row.any()]
        for col in range(ncols):
            carrier: Optional[np.ndarray] = None
            rest: List[np.ndarray] = []
            for row in work:
                if int(row[col]) % self.m == 0:
                    if row.any():
                        rest.append(row)
                    continue
                if carrier is None:
                    carrier = row
                    continue
                a_, b_ = int(carrier[col]), int(row[col])
                g, x, y = _exgcd(a_, b_)
                new_carrier = (x * carrier + y * row) % self.m
                new_row = ((-(b_ // g)) * carrier + (a_ // g) * row) % self.m
                carrier = new_carrier
                if new_row.any():
                    rest.append(new_row)
            if carrier is not None:
                pivot_cols.append(col)
                reduced.append(carrier)
                g = gcd(int(carrier[col]), self.m)
                saturation = ((self.m // g) * carrier) % self.m
                if saturation.any():
                    rest.append(saturation)
            work = rest
        self.pivot_cols = pivot_cols
        self.rows = (
            np.stack(reduced, axis=0)
            if reduced
            else np.zeros((0, ncols), dtype=np.int64)
        )

    def reduce(self, targets: np.ndarray) -> np.ndarray:
        """Remainders of target rows (shape (k, n)) after greedy reduction."""
        t = (np.asarray(targets, dtype=np.int64) % self.m).copy()
        if t.ndim != 2:
            raise ValueError("targets must be a 2-d array of row vectors")
        for idx, col in enumerate(self.pivot_cols):
            p = int(self.rows[idx, col])
            g = gcd(p, self.m)
            vals = t[:, col]
            mg = self.m // g
            inv = pow(p // g, -1, mg) if mg > 1 else 0
            solvable = vals % g == 0
            q = np.where(solvable, ((vals // g) * inv) % mg, 0)
            t = (t - q[:, None] * self.rows[idx][None, :]) % self.m
        return t

    def contains(self, targets: np.ndarray) -> np.ndarray:
        """Boolean vector: which target rows lie in the span."""
        rem = self.reduce(targets)
        return ~rem.any(axis=1)
