"""Reduced cohomology of star complexes over Q and F_p.

The cohomology of the star cochain complex of a cone C is read off the order
complex of the poset str(C) minus {C}: degree i of the star complex equals
degree i - dim C of the order complex.  No incidence function is needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Hashable, Sequence

from .fan import Fan, StarRef, star
from .linalg import rank


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means Q, otherwise F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p < 0 or p == 1 or (p and any(p % q == 0 for q in range(2, int(p ** 0.5) + 1))):
            raise ValueError(f"{p} is not a prime (or 0 for the rationals)")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        t = text.strip().lower()
        if t in ("q", "qq", "0"):
            return cls(0)
        for prefix in ("fp:", "gf:", "f"):
            if t.startswith(prefix):
                return cls(int(t[len(prefix):]))
        raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:<p>'")

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"F_{self.characteristic}"


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


@dataclass(frozen=True)
class GradedDims:
    """Dimensions indexed by consecutive degrees starting at ``start``; zero elsewhere."""

    start: int
    dims: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        k = i - self.start
        return self.dims[k] if 0 <= k < len(self.dims) else 0

    def degrees(self) -> range:
        return range(self.start, self.start + len(self.dims))

    def nonzero(self) -> dict[int, int]:
        return {i: self[i] for i in self.degrees() if self[i]}

    def euler(self) -> int:
        return sum(self[i] if i % 2 == 0 else -self[i] for i in self.degrees())

    def shifted(self, k: int) -> GradedDims:
        return GradedDims(self.start + k, self.dims)

    def window(self, lo: int, hi: int) -> GradedDims:
        return GradedDims(lo, tuple(self[i] for i in range(lo, hi + 1)))


@dataclass(frozen=True)
class SimplicialComplexRecord:
    vertices: tuple[Hashable, ...]
    facets: tuple[frozenset, ...]

    @cached_property
    def faces(self) -> dict[int, list[tuple[int, ...]]]:
        """Faces grouped by dimension, each as a sorted tuple of vertex positions."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        seen: set[tuple[int, ...]] = {()}
        for f in self.facets:
            idx = sorted(pos[v] for v in f)
            for k in range(1, len(idx) + 1):
                seen.update(combinations(idx, k))
        out: dict[int, list[tuple[int, ...]]] = {}
        for s in seen:
            out.setdefault(len(s) - 1, []).append(s)
        for v in out.values():
            v.sort()
        return out

    @property
    def dim(self) -> int:
        return max(self.faces)


def order_complex(st: StarRef) -> SimplicialComplexRecord:
    """Chains of the poset formed by the star's members other than its base cone."""
    fan = st.fan
    base = st.base if isinstance(st.base, int) else None
    verts = sorted(st.members - {base}, key=lambda i: (fan.cones[i].dim, i))
    vset = set(verts)
    above = {v: (fan.cofaces_of[v] & vset) - {v} for v in verts}
    covers = {v: sorted(u for u in above[v] if not any(u in above[w] for w in above[v])) for v in verts}
    maximal: list[frozenset] = []

    def extend(chain):
        nxt = covers[chain[-1]]
        if not nxt:
            maximal.append(frozenset(chain))
        for u in nxt:
            extend(chain + [u])

    for v in verts:
        if not any(v in above[u] for u in verts):
            extend([v])
    return SimplicialComplexRecord(tuple(verts), tuple(maximal))


def reduced_cohomology(cx: SimplicialComplexRecord, field: FieldSpec = QQ) -> GradedDims:
    """dim H~^i for i = -1 .. dim cx, computed from boundary-matrix ranks."""
    p = field.characteristic
    faces = cx.faces
    top = max(faces)
    n = {i: len(faces.get(i, [])) for i in range(-1, top + 1)}
    ranks = {}
    for i in range(0, top + 1):
        lower = {s: j for j, s in enumerate(faces.get(i - 1, []))}
        rows = []
        for s in faces.get(i, []):
            rows.append({lower[s[:k] + s[k + 1:]]: (-1) ** k for k in range(len(s))})
        ranks[i] = rank(rows, p)
    dims = tuple(n[i] - ranks.get(i + 1, 0) - ranks.get(i, 0) for i in range(-1, top + 1))
    return GradedDims(-1, dims)


@lru_cache(maxsize=1 << 16)
def _star_cohomology(fan: Fan, c: int, field: FieldSpec) -> GradedDims:
    raw = reduced_cohomology(order_complex(star(fan, c)), field)
    dc = fan.cones[c].dim
    return raw.shifted(dc).window(dc - 1, fan.dim - 1)


def star_cohomology(fan: Fan, c: int, field: FieldSpec = QQ) -> GradedDims:
    """dim H~^i of the star cochain complex of cone ``c``, for i = dim c - 1 .. dim fan - 1."""
    return _star_cohomology(fan, c, field)


def local_homology_profile(fan: Fan, c: int, field: FieldSpec = QQ) -> GradedDims:
    """Local homology of the cell complex at a point of the open cell of ``c``.

    For the zero cone this is the reduced homology of the whole cell complex.
    """
    return star_cohomology(fan, c, field)


def cohomology_profile(fan: Fan, field: FieldSpec = QQ) -> dict[int, GradedDims]:
    return {i: star_cohomology(fan, i, field) for i in range(len(fan.cones))}


def simplicial_complex(facets: Sequence[Sequence[Hashable]]) -> SimplicialComplexRecord:
    verts = tuple(sorted({v for f in facets for v in f}, key=repr))
    return SimplicialComplexRecord(verts, tuple(frozenset(f) for f in facets))
