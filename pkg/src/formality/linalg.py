"""Exact linear algebra over the rationals.

Vectors are plain lists of :class:`fractions.Fraction`; matrices are lists of
rows.  Everything here is deterministic: the same input always produces the
same echelon form, the same kernel basis and the same particular solutions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

Vector = list  # list[Fraction]


def as_fractions(v: Iterable) -> list:
    return [x if isinstance(x, Fraction) else Fraction(x) for x in v]


def zeros(n: int) -> list:
    return [Fraction(0)] * n


def unit(n: int, i: int) -> list:
    v = zeros(n)
    v[i] = Fraction(1)
    return v


def is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def add_scaled(v: Sequence, w: Sequence, c) -> list:
    """Return ``v + c*w``."""
    if c == 0:
        return list(v)
    return [a + c * b for a, b in zip(v, w)]


def combination(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> list:
    out = zeros(n)
    for c, vec in zip(coeffs, vectors):
        if c != 0:
            out = add_scaled(out, vec, c)
    return out


def transpose(rows: Sequence[Sequence], ncols: int) -> list:
    return [[row[j] for row in rows] for j in range(ncols)]


def rref(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form.

    Returns ``(echelon_rows, pivots)``; zero rows are dropped, so
    ``len(pivots)`` is the rank.
    """
    m = [as_fractions(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                m[i] = add_scaled(m[i], m[r], -m[i][c])
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list:
    """Basis of ``{x : A x = 0}`` for ``A`` given by ``rows``.

    One vector per free column, with a 1 in that column (the textbook
    construction), so the output is reproducible.
    """
    echelon, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = zeros(ncols)
        v[free] = Fraction(1)
        for row, p in zip(echelon, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis


class Span:
    """The span of a list of vectors, with coordinate recovery.

    ``coordinates(z)`` writes ``z`` as a combination of the *original*
    vectors (which may be dependent); ``reduce(z)`` gives the normal form of
    ``z`` modulo the span.
    """

    def __init__(self, vectors: Sequence[Sequence], dim: int):
        self.dim = dim
        self.vectors = [as_fractions(v) for v in vectors]
        k = len(self.vectors)
        augmented = [v + unit(k, i) for i, v in enumerate(self.vectors)]
        echelon, pivots = rref(augmented, dim + k)
        self.rows = []
        self.transform = []
        self.pivots = []
        for row, p in zip(echelon, pivots):
            if p >= dim:
                break
            self.rows.append(row[:dim])
            self.transform.append(row[dim:])
            self.pivots.append(p)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def basis(self) -> list:
        return [list(r) for r in self.rows]

    def reduce(self, z: Sequence) -> list:
        z = as_fractions(z)
        for row, p in zip(self.rows, self.pivots):
            if z[p] != 0:
                z = add_scaled(z, row, -z[p])
        return z

    def contains(self, z: Sequence) -> bool:
        return is_zero(self.reduce(z))

    def coordinates(self, z: Sequence) -> Optional[list]:
        z = as_fractions(z)
        if not self.contains(z):
            return None
        coeffs = zeros(len(self.vectors))
        for row_t, p in zip(self.transform, self.pivots):
            if z[p] != 0:
                coeffs = add_scaled(coeffs, row_t, z[p])
        return coeffs


def solve(columns: Sequence[Sequence], target: Sequence, dim: int) -> Optional[list]:
    """Solve ``sum_j x_j columns[j] = target``; ``None`` if inconsistent."""
    return Span(columns, dim).coordinates(target)


def matvec(rows: Sequence[Sequence], v: Sequence) -> list:
    return [sum((a * b for a, b in zip(row, v)), Fraction(0)) for row in rows]


class Echelon:
    """Incrementally grown echelon basis, for independence tests."""

    def __init__(self, dim: int, vectors: Iterable = ()):
        self.dim = dim
        self.rows = []
        self.pivots = []
        for v in vectors:
            self.add(v)

    def reduce(self, v: Sequence) -> list:
        v = as_fractions(v)
        for row, p in zip(self.rows, self.pivots):
            if v[p] != 0:
                v = add_scaled(v, row, -v[p])
        return v

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return False if it was already in the span."""
        r = self.reduce(v)
        p = next((i for i, x in enumerate(r) if x != 0), None)
        if p is None:
            return False
        c = r[p]
        self.rows.append([x / c for x in r])
        self.pivots.append(p)
        return True

    def contains(self, v: Sequence) -> bool:
        return is_zero(self.reduce(v))

    @property
    def rank(self) -> int:
        return len(self.rows)
