"""Exact integer/rational linear algebra used throughout the package.

Everything here works on plain Python ints and ``fractions.Fraction``; there is
no floating point.  Rank over Q uses fraction-free elimination (rows are kept
integral and divided by their content after every step), rank over F_p uses
ordinary elimination modulo p.  Matrices are given as sequences of rows, each
row either a dense sequence or a sparse ``{column: value}`` dict.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

Vector = tuple[int, ...]


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def content(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = content(v)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integralize(v: Sequence[Fraction]) -> Vector:
    """Smallest positive integer multiple of a rational vector, made primitive."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def _sparse(row) -> dict[int, int]:
    if isinstance(row, Mapping):
        return {c: v for c, v in row.items() if v}
    return {c: v for c, v in enumerate(row) if v}


def rank(rows: Iterable, p: int = 0) -> int:
    """Rank of an integer matrix over Q (``p == 0``) or over F_p.

    Rows are reduced incrementally into an echelon basis keyed by leading
    column, so the cost is driven by the number of nonzeros rather than the
    nominal matrix size.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _sparse(raw)
        if p:
            row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                if p:
                    inv = pow(row[lead], -1, p)
                    row = {c: v * inv % p for c, v in row.items()}
                else:
                    g = content(row.values())
                    if row[lead] < 0:
                        g = -g
                    row = {c: v // g for c, v in row.items()}
                pivots[lead] = row
                break
            row = _eliminate(row, piv, lead, p)
    return len(pivots)


def _eliminate(row: dict[int, int], piv: dict[int, int], lead: int, p: int) -> dict[int, int]:
    if p:
        f = row[lead]
        out = dict(row)
        for c, v in piv.items():
            w = (out.get(c, 0) - f * v) % p
            if w:
                out[c] = w
            else:
                out.pop(c, None)
        return out
    a, b = piv[lead], row[lead]
    out = {c: a * v for c, v in row.items()}
    for c, v in piv.items():
        w = out.get(c, 0) - b * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    g = content(out.values())
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


def rref(rows: Sequence[Sequence[int]], ncols: int) -> list[list[Fraction]]:
    """Reduced row echelon form over Q; zero rows dropped."""
    m = [[Fraction(x) for x in r] for r in rows]
    out: list[list[Fraction]] = []
    col = 0
    while m and col < ncols:
        k = next((i for i, r in enumerate(m) if r[col] != 0), None)
        if k is None:
            col += 1
            continue
        piv = m.pop(k)
        piv = [x / piv[col] for x in piv]
        m = [[x - r[col] * y for x, y in zip(r, piv)] for r in m]
        out = [[x - r[col] * y for x, y in zip(r, piv)] for r in out]
        out.append(piv)
        col += 1
    return out


def nullspace(rows: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Integer basis of {x : row . x = 0 for every row}, in a canonical form."""
    red = rref(rows, ncols)
    lead = {}
    for i, r in enumerate(red):
        lead[next(c for c, x in enumerate(r) if x != 0)] = i
    basis = []
    for free in range(ncols):
        if free in lead:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for c, i in lead.items():
            v[c] = -red[i][free]
        basis.append(integralize(v))
    return basis


def canonical_basis(rows: Sequence[Sequence[int]], ncols: int) -> tuple[Vector, ...]:
    """Canonical integer basis of the row space (RREF rows made primitive)."""
    return tuple(integralize(r) for r in rref(rows, ncols))


def project_off(v: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Orthogonal projection of ``v`` onto the complement of span(basis), integralized."""
    if not basis:
        return primitive(v)
    k = len(basis)
    gram = [[Fraction(dot(basis[i], basis[j])) for j in range(k)] for i in range(k)]
    rhs = [Fraction(dot(basis[i], v)) for i in range(k)]
    coeffs = _solve(gram, rhs)
    out = [Fraction(x) for x in v]
    for c, b in zip(coeffs, basis):
        for t in range(len(out)):
            out[t] -= c * b[t]
    return integralize(out)


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        k = next(i for i in range(col, n) if m[i][col] != 0)
        m[col], m[k] = m[k], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]
