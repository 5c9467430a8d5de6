"""Rational pointed cones with exact V- and H-descriptions.

A cone is stored by its primitive extreme rays (sorted, so equality of cones
is equality of generator tuples), the inward facet normals of its irredundant
H-description and an integer basis of the equations cutting out its linear
span.  Conversions go through an incremental double-description routine over
the integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotPointed
from .linalg import Vector, canonical_basis, dot, primitive, project_off, rank


@dataclass(frozen=True)
class BoxSpec:
    """The lattice box [-radius, radius]^d used to truncate infinite lattice conditions."""

    radius: int = 4

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("box radius must be >= 1")

    def points(self, d: int) -> Iterable[Vector]:
        r = range(-self.radius, self.radius + 1)
        return product(r, repeat=d)

    def contains(self, a: Sequence[int]) -> bool:
        return all(-self.radius <= x <= self.radius for x in a)


@dataclass(frozen=True)
class Cone:
    ambient_dim: int
    generators: tuple[Vector, ...]
    halfspaces: tuple[Vector, ...] = field(compare=False)
    equations: tuple[Vector, ...] = field(compare=False)
    dim: int = field(compare=False)

    def __repr__(self):
        if not self.generators:
            return f"Cone(0 in R^{self.ambient_dim})"
        return f"Cone({', '.join(map(str, self.generators))})"

    def contains(self, a: Sequence[int]) -> bool:
        return all(dot(e, a) == 0 for e in self.equations) and all(
            dot(n, a) >= 0 for n in self.halfspaces
        )

    def is_zero(self) -> bool:
        return not self.generators


def _dd(rows: Sequence[Vector], d: int) -> tuple[list[Vector], list[Vector]]:
    """Solve {x : <r, x> >= 0 for all rows} = span(lineality) + cone(rays).

    Incremental double description: constraints are added one at a time,
    lineality directions are consumed first, and new rays come from adjacent
    (positive, negative) pairs under the combinatorial adjacency test.
    """
    lin: list[Vector] = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays: list[Vector] = []
    zeros: list[frozenset[int]] = []
    processed: frozenset[int] = frozenset()
    for k, g in enumerate(rows):
        if not any(g):
            continue
        h = next((i for i, l in enumerate(lin) if dot(g, l) != 0), None)
        if h is not None:
            hit = lin.pop(h)
            if dot(g, hit) < 0:
                hit = tuple(-x for x in hit)
            a = dot(g, hit)
            # project the remaining lines and all rays into the hyperplane <g, x> = 0 along hit
            lin = [primitive(tuple(a * x - dot(g, l) * y for x, y in zip(l, hit))) for l in lin]
            rays = [primitive(tuple(a * x - dot(g, r) * y for x, y in zip(r, hit))) for r in rays]
            zeros = [z | {k} for z in zeros]
            rays.append(hit)
            zeros.append(processed)
            processed = processed | {k}
            continue
        processed = processed | {k}
        s = [dot(g, r) for r in rays]
        pos = [i for i, v in enumerate(s) if v > 0]
        neg = [i for i, v in enumerate(s) if v < 0]
        new_rays = [rays[i] for i in range(len(rays)) if s[i] >= 0]
        new_zeros = [zeros[i] | {k} if s[i] == 0 else zeros[i] for i in range(len(rays)) if s[i] >= 0]
        for i in pos:
            for j in neg:
                common = zeros[i] & zeros[j]
                if any(common <= zeros[t] for t in range(len(rays)) if t != i and t != j):
                    continue
                v = primitive(tuple(s[i] * y - s[j] * x for x, y in zip(rays[i], rays[j])))
                new_rays.append(v)
                new_zeros.append(common | {k})
        rays, zeros = new_rays, new_zeros
    seen = {}
    for r in rays:
        seen.setdefault(r, None)
    return lin, list(seen)


def zero_cone(d: int) -> Cone:
    return cone_from_generators([], d)


def cone_from_generators(gens: Iterable[Sequence[int]], ambient_dim: int | None = None) -> Cone:
    gens = [tuple(int(x) for x in g) for g in gens]
    if ambient_dim is None:
        if not gens:
            raise DimensionMismatch("ambient dimension needed for an empty generator list")
        ambient_dim = len(gens[0])
    if any(len(g) != ambient_dim for g in gens):
        raise DimensionMismatch(f"generators must have length {ambient_dim}")
    return _cone_cached(tuple(sorted({primitive(g) for g in gens if any(g)})), ambient_dim)


@lru_cache(maxsize=None)
def _cone_cached(prim: tuple[Vector, ...], d: int) -> Cone:
    lin, dual_rays = _dd(prim, d)
    if rank(list(lin) + dual_rays) < d:
        raise NotPointed(f"the cone generated by {list(prim)} contains a line")
    equations = canonical_basis(lin, d) if lin else ()
    normals = tuple(sorted({project_off(n, equations) for n in dual_rays}))
    extreme = []
    for g in prim:
        tight = [n for n in normals if dot(n, g) == 0]
        if rank(list(equations) + tight) == d - 1:
            extreme.append(g)
    return Cone(d, tuple(extreme), normals, tuple(equations), d - len(equations))


def cone_from_halfspaces(normals: Iterable[Sequence[int]], equations: Iterable[Sequence[int]], d: int) -> Cone:
    rows = [tuple(n) for n in normals]
    for e in equations:
        rows.append(tuple(e))
        rows.append(tuple(-x for x in e))
    lin, rays = _dd(rows, d)
    if lin:
        raise NotPointed("the H-description defines a cone containing a line")
    return cone_from_generators(rays, d)


@lru_cache(maxsize=None)
def faces(cone: Cone) -> tuple[Cone, ...]:
    """All faces of the cone, from the zero cone up to the cone itself."""
    gens = cone.generators
    full = frozenset(range(len(gens)))
    facet_sets = {frozenset(i for i, g in enumerate(gens) if dot(n, g) == 0) for n in cone.halfspaces}
    found = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for s in frontier:
            for f in facet_sets:
                t = s & f
                if t not in found:
                    found.add(t)
                    nxt.append(t)
        frontier = nxt
    out = [cone_from_generators([gens[i] for i in s], cone.ambient_dim) for s in found]
    return tuple(sorted(out, key=lambda c: (c.dim, c.generators)))


def relint_contains(cone: Cone, a: Sequence[int]) -> bool:
    return all(dot(e, a) == 0 for e in cone.equations) and all(dot(n, a) > 0 for n in cone.halfspaces)


def intersect_cones(c1: Cone, c2: Cone) -> Cone:
    if c1.ambient_dim != c2.ambient_dim:
        raise DimensionMismatch("cones live in different ambient spaces")
    if c1 == c2:
        return c1
    return cone_from_halfspaces(
        c1.halfspaces + c2.halfspaces, c1.equations + c2.equations, c1.ambient_dim
    )


def join_point_cone(w: Sequence[int], c: Cone) -> Cone:
    """The smallest cone containing both ``w`` and ``c``."""
    if len(w) != c.ambient_dim:
        raise DimensionMismatch("join point has the wrong length")
    out = cone_from_generators(list(c.generators) + [tuple(w)], c.ambient_dim)
    if out.dim != c.dim + 1:
        raise ValueError("join point lies in the linear span of the cone")
    return out


@lru_cache(maxsize=1 << 14)
def lattice_points(cone: Cone, box: BoxSpec, relint_only: bool = False) -> frozenset[Vector]:
    """Lattice points of the cone (or its relative interior) inside the box.

    Coordinates are fixed one at a time; a partial assignment is abandoned as
    soon as some equation or inequality can no longer be met by any completion
    inside the box.
    """
    d, R = cone.ambient_dim, box.radius
    eqs = cone.equations
    ineqs = cone.halfspaces
    strict = 1 if relint_only else 0
    # slack[t][i]: largest |contribution| coordinates t.. can still add to form i
    def tails(forms):
        out = []
        for f in forms:
            acc = [0] * (d + 1)
            for t in range(d - 1, -1, -1):
                acc[t] = acc[t + 1] + abs(f[t]) * R
            out.append(acc)
        return out

    eq_tail, in_tail = tails(eqs), tails(ineqs)
    result: set[Vector] = set()
    point = [0] * d

    def rec(t, eq_val, in_val):
        if t == d:
            if all(v == 0 for v in eq_val) and all(v >= strict for v in in_val):
                result.add(tuple(point))
            return
        for x in range(-R, R + 1):
            ev = [v + e[t] * x for v, e in zip(eq_val, eqs)]
            if any(abs(v) > tl[t + 1] for v, tl in zip(ev, eq_tail)):
                continue
            iv = [v + n[t] * x for v, n in zip(in_val, ineqs)]
            if any(v + tl[t + 1] < strict for v, tl in zip(iv, in_tail)):
                continue
            point[t] = x
            rec(t + 1, ev, iv)

    rec(0, [0] * len(eqs), [0] * len(ineqs))
    return frozenset(result)
