"""Fans, their face posets, stars, subfans and the rho statistic.

Cone ids are positions in ``Fan.cones``, which is sorted by dimension and then
by generator tuple, so id 0 is always the zero cone and ids are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotAFan, NotPure
from .geometry import Cone, cone_from_generators, faces, intersect_cones, join_point_cone, zero_cone
from .linalg import Vector


@dataclass(frozen=True, eq=False)
class Fan:
    ambient_dim: int
    cones: tuple[Cone, ...]
    # faces_of[i]: ids of all faces of cone i, including i itself
    faces_of: tuple[frozenset[int], ...] = field(repr=False)
    name: str | None = None

    def __repr__(self):
        return f"Fan({self.name or 'unnamed'}: {len(self.cones)} cones in R^{self.ambient_dim}, dim {self.dim})"

    @cached_property
    def index(self) -> dict[tuple[Vector, ...], int]:
        return {c.generators: i for i, c in enumerate(self.cones)}

    @cached_property
    def cofaces_of(self) -> tuple[frozenset[int], ...]:
        up: list[set[int]] = [set() for _ in self.cones]
        for i, fs in enumerate(self.faces_of):
            for j in fs:
                up[j].add(i)
        return tuple(frozenset(s) for s in up)

    @cached_property
    def dim(self) -> int:
        return max(c.dim for c in self.cones)

    @cached_property
    def facets(self) -> tuple[int, ...]:
        return tuple(i for i, up in enumerate(self.cofaces_of) if len(up) == 1)

    @cached_property
    def pure(self) -> bool:
        return len({self.cones[i].dim for i in self.facets}) == 1

    def id_of(self, cone: Cone | Sequence[Sequence[int]]) -> int:
        gens = cone.generators if isinstance(cone, Cone) else cone_from_generators(cone, self.ambient_dim).generators
        return self.index[gens]

    def cone_dim(self, i: int) -> int:
        return self.cones[i].dim

    def f_vector(self, ids: Iterable[int] | None = None) -> list[int]:
        ids = range(len(self.cones)) if ids is None else ids
        f = [0] * (self.dim + 1)
        for i in ids:
            f[self.cones[i].dim] += 1
        return f

    def carrier(self, a: Sequence[int]) -> int | None:
        """Id of the unique cone having ``a`` in its relative interior (None if a is outside |fan|)."""
        for i, c in enumerate(self.cones):
            if c.contains(a):
                return i
        return None

    def contains_point(self, a: Sequence[int]) -> bool:
        return any(self.cones[i].contains(a) for i in self.facets)

    def all_ids(self) -> frozenset[int]:
        return frozenset(range(len(self.cones)))


def build_fan(maximal_cones: Iterable[Cone], ambient_dim: int | None = None, name: str | None = None) -> Fan:
    """Validate a collection of cones as a fan and close it under faces.

    An input cone that is a face of another input cone is absorbed.
    """
    cones = list(dict.fromkeys(maximal_cones))
    if ambient_dim is None:
        if not cones:
            raise DimensionMismatch("ambient dimension needed for an empty cone list")
        ambient_dim = cones[0].ambient_dim
    if any(c.ambient_dim != ambient_dim for c in cones):
        raise DimensionMismatch("cones live in different ambient spaces")
    face_sets = {c: set(faces(c)) for c in cones}
    maximal = [c for c in cones if not any(c != o and c in face_sets[o] for o in cones)]
    for c1, c2 in combinations(maximal, 2):
        meet = intersect_cones(c1, c2)
        if meet not in face_sets[c1] or meet not in face_sets[c2]:
            raise NotAFan(c1, c2)
    everything = {zero_cone(ambient_dim)}
    for c in maximal:
        everything.update(face_sets[c])
    ordered = tuple(sorted(everything, key=lambda c: (c.dim, c.generators)))
    pos = {c.generators: i for i, c in enumerate(ordered)}
    faces_of = tuple(frozenset(pos[f.generators] for f in faces(c)) for c in ordered)
    return Fan(ambient_dim, ordered, faces_of, name)


def fan_from_rays(rays: Sequence[Sequence[int]], cones: Sequence[Sequence[int]], ambient_dim: int | None = None,
                  name: str | None = None) -> Fan:
    """Convenience constructor: maximal cones given as lists of indices into ``rays``."""
    d = ambient_dim if ambient_dim is not None else len(rays[0])
    return build_fan([cone_from_generators([rays[i] for i in idx], d) for idx in cones], d, name)


@dataclass(frozen=True)
class StarRef:
    fan: Fan = field(repr=False, compare=False)
    base: int | Vector
    members: frozenset[int]


def star(fan: Fan, base: int) -> StarRef:
    return StarRef(fan, base, fan.cofaces_of[base])


def star_of_point(fan: Fan, a: Sequence[int]) -> StarRef:
    a = tuple(a)
    return StarRef(fan, a, frozenset(i for i, c in enumerate(fan.cones) if c.contains(a)))


@dataclass(frozen=True)
class SubfanRef:
    fan: Fan = field(repr=False, compare=False)
    cone_ids: frozenset[int]

    def __post_init__(self):
        for i in self.cone_ids:
            if not self.fan.faces_of[i] <= self.cone_ids:
                raise ValueError(f"cone id set is not closed under faces (cone {i})")

    def __or__(self, other: SubfanRef) -> SubfanRef:
        return subfan_union(self, other)

    def __and__(self, other: SubfanRef) -> SubfanRef:
        return subfan_intersection(self, other)

    def __len__(self):
        return len(self.cone_ids)

    def __contains__(self, i):
        return i in self.cone_ids

    @property
    def is_empty(self) -> bool:
        return not self.cone_ids

    @property
    def facets(self) -> tuple[int, ...]:
        ids = self.cone_ids
        return tuple(sorted(i for i in ids if not (self.fan.cofaces_of[i] & ids) - {i}))

    @property
    def dim(self) -> int:
        return max((self.fan.cones[i].dim for i in self.cone_ids), default=-1)

    def cones(self) -> list[Cone]:
        return [self.fan.cones[i] for i in sorted(self.cone_ids)]

    def to_fan(self, name: str | None = None) -> Fan:
        if self.is_empty:
            raise ValueError("the empty subfan is not a fan")
        return build_fan([self.fan.cones[i] for i in self.facets], self.fan.ambient_dim, name)

    def describe(self) -> list[list[list[int]]]:
        return [[list(g) for g in c.generators] for c in self.cones()]


def closure(fan: Fan, ids: Iterable[int]) -> SubfanRef:
    out: set[int] = set()
    for i in ids:
        out |= fan.faces_of[i]
    return SubfanRef(fan, frozenset(out))


def fan_of_cone(fan: Fan, c: int) -> SubfanRef:
    return SubfanRef(fan, fan.faces_of[c])


def boundary_fan_of_cone(fan: Fan, c: int) -> SubfanRef:
    return SubfanRef(fan, fan.faces_of[c] - {c})


def subfan_union(s1: SubfanRef, s2: SubfanRef) -> SubfanRef:
    _same_parent(s1, s2)
    return SubfanRef(s1.fan, s1.cone_ids | s2.cone_ids)


def subfan_intersection(s1: SubfanRef, s2: SubfanRef) -> SubfanRef:
    _same_parent(s1, s2)
    return SubfanRef(s1.fan, s1.cone_ids & s2.cone_ids)


def _same_parent(s1, s2):
    if s1.fan is not s2.fan:
        raise ValueError("subfans belong to different fans")


def sigma_minus_star(fan: Fan, base: int) -> SubfanRef:
    return SubfanRef(fan, fan.all_ids() - fan.cofaces_of[base])


def facets_of_cone(fan: Fan, c: int) -> tuple[int, ...]:
    """Ids of the codimension-one faces of cone ``c``."""
    d = fan.cones[c].dim
    return tuple(sorted(i for i in fan.faces_of[c] if fan.cones[i].dim == d - 1))


def boundary_subfan(fan: Fan) -> SubfanRef:
    """Face closure of the codimension-one cones lying in exactly one facet."""
    if not fan.pure:
        raise NotPure("boundary_subfan needs a pure fan")
    k = fan.dim
    facet_set = set(fan.facets)
    ridges = [
        i for i, c in enumerate(fan.cones)
        if c.dim == k - 1 and len(fan.cofaces_of[i] & facet_set) == 1
    ]
    return closure(fan, ridges)


def rho(fan: Fan, c: int) -> int:
    return sum((-1) ** (fan.cones[i].dim + 1) for i in fan.cofaces_of[c])


@dataclass(frozen=True)
class EulerReport:
    is_euler: bool
    pure: bool
    target: int
    rho: dict[int, int]

    def __bool__(self):
        return self.is_euler

    @property
    def offending(self) -> list[int]:
        return [i for i, r in self.rho.items() if r != self.target]


def is_euler_fan(fan: Fan) -> EulerReport:
    target = -1 if (fan.dim - 1) % 2 else 1
    values = {i: rho(fan, i) for i in range(len(fan.cones))}
    ok = fan.pure and all(v == target for v in values.values())
    return EulerReport(ok, fan.pure, target, values)


def embed_fan(fan: Fan) -> Fan:
    """The same fan in R^{d+1}, sitting in the hyperplane of vanishing last coordinate."""
    d = fan.ambient_dim + 1
    cones = [cone_from_generators([g + (0,) for g in fan.cones[i].generators], d) for i in fan.facets]
    return build_fan(cones, d, fan.name)


def join_fan(w: Sequence[int], sub: SubfanRef, base: Fan) -> Fan:
    """The fan (w * sub) united with base; base must already live in R^{d+1}."""
    if len(w) != base.ambient_dim:
        raise DimensionMismatch("join point has the wrong length")
    cones = [base.cones[i] for i in base.facets]
    cones += [join_point_cone(w, sub.fan.cones[i]) for i in sub.facets]
    return build_fan(cones, base.ambient_dim, f"join({base.name})" if base.name else None)
