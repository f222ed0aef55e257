"""Integer lattice arithmetic: weights, congruences, Smith normal form."""

from __future__ import annotations

import numbers
from fractions import Fraction
from math import gcd


class RankMismatch(ValueError):
    pass


class Weight(tuple):
    """An element of H^2(BT) = Z^n, stored as an immutable integer tuple.

    Arithmetic is vector arithmetic (``+`` adds, ``k * w`` scales) rather
    than tuple concatenation/repetition.
    """

    __slots__ = ()

    def __new__(cls, coords):
        vals = []
        for c in coords:
            if isinstance(c, bool) or not isinstance(c, (numbers.Integral, Fraction)):
                raise TypeError(f"weight coordinates must be integers, got {c!r}")
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise TypeError(f"weight coordinates must be integers, got {c}")
                c = c.numerator
            vals.append(int(c))
        return super().__new__(cls, vals)

    @property
    def rank(self) -> int:
        return len(self)

    def _check(self, other) -> "Weight":
        other = other if isinstance(other, Weight) else Weight(other)
        if len(other) != len(self):
            raise RankMismatch(f"rank {len(self)} vs {len(other)}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Weight(a + b for a, b in zip(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return Weight(a - b for a, b in zip(self, other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __neg__(self):
        return Weight(-a for a in self)

    def __mul__(self, k):
        if not isinstance(k, numbers.Integral):
            return NotImplemented
        return Weight(k * a for a in self)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self)

    def __repr__(self):
        return f"Weight({list(self)})"


def as_weights(ws) -> list[Weight]:
    ws = [w if isinstance(w, Weight) else Weight(w) for w in ws]
    if ws and len({len(w) for w in ws}) != 1:
        raise RankMismatch(f"weights of mixed rank: {ws}")
    return ws


def congruent(u, v, w) -> int | None:
    """Return k with u - v == k*w, or None if no integer k exists."""
    u, v, w = as_weights([u, v, w])
    if w.is_zero():
        raise ValueError("modulus weight must be nonzero")
    diff = u - v
    j = next(i for i, x in enumerate(w) if x)
    if diff[j] % w[j]:
        return None
    k = diff[j] // w[j]
    return k if diff == k * w else None


def parallel(u, v) -> bool:
    """True when u and v are linearly dependent over Q."""
    u, v = as_weights([u, v])
    return all(u[i] * v[j] == u[j] * v[i] for i in range(len(u)) for j in range(i + 1, len(u))) \
        if len(u) > 1 else True


def pairwise_independent(ws) -> bool:
    ws = as_weights(ws)
    if not ws:
        raise ValueError("empty weight sequence")
    if any(w.is_zero() for w in ws):
        return False
    return not any(parallel(ws[i], ws[j]) for i in range(len(ws)) for j in range(i + 1, len(ws)))


# --- integer matrices (lists of lists of Python ints) ---

def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    assert all(len(row) == inner for row in a)
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matvec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def det(m) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m):
    """Return (U, S, V) with U*m*V == S, U and V unimodular, S diagonal.

    The nonzero diagonal entries of S are positive and each divides the next.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[int(x) for x in row] for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(rows, cols)):
        while True:
            pivot = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                return u, a, v
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    dirty = dirty or a[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return u, a, v


def invariant_factors(m) -> list[int]:
    _, s, _ = smith_normal_form(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]) if s else 0)) if s[i][i]]


def generates_lattice(ws) -> bool:
    """True iff the integer span of ws is all of Z^n."""
    ws = as_weights(ws)
    if not ws:
        return False
    factors = invariant_factors([list(w) for w in ws])
    return len(factors) == len(ws[0]) and all(f == 1 for f in factors)


def lattice_index(ws) -> int:
    """Index of span(ws) in Z^n, or 0 if the span has lower rank."""
    ws = as_weights(ws)
    factors = invariant_factors([list(w) for w in ws])
    if len(factors) < len(ws[0]):
        return 0
    out = 1
    for f in factors:
        out *= f
    return out


def content(ws) -> int:
    g = 0
    for w in ws:
        for x in w:
            g = gcd(g, x)
    return g


def apply(psi, w) -> Weight:
    """Image of w under the integer matrix psi (acting on column vectors)."""
    return Weight(matvec(psi, w))
