"""Named example fans and generated families used by tests and scripts."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .errors import NotPointed
from .fan import Fan, build_fan, fan_from_rays
from .geometry import Cone, cone_from_generators, intersect_cones, faces

# Six-vertex triangulation of the real projective plane.
RP2_FACETS = (
    (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
    (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3),
)


def unit(i: int, d: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if j == i else 0 for j in range(d))


def coordinate_fan(facets: Sequence[Sequence[int]], n: int | None = None, name: str | None = None) -> Fan:
    """Fan of coordinate cones cone(e_i : i in F) for the faces F of a simplicial complex."""
    n = n if n is not None else 1 + max((v for f in facets for v in f), default=0)
    cones = [cone_from_generators([unit(i, n) for i in f], n) for f in facets]
    return build_fan(cones, n, name)


def zero_fan(d: int = 1) -> Fan:
    return build_fan([], d, "zero")


def single_ray() -> Fan:
    return fan_from_rays([(1,)], [[0]], name="single-ray")


def shellable_not_clean() -> Fan:
    return fan_from_rays([(0, 1), (2, 1), (-2, 1)], [[0, 1], [0, 2]], name="shellable-not-clean")


def half_plane() -> Fan:
    return fan_from_rays([(1, 0), (0, 1), (-1, 0)], [[0, 1], [1, 2]], name="half-plane")


def single_two_cone() -> Fan:
    return fan_from_rays([(1, 0), (0, 1)], [[0, 1]], name="single-2-cone")


def opposite_quadrants() -> Fan:
    return fan_from_rays([(1, 0), (0, 1), (-1, 0), (0, -1)], [[0, 1], [2, 3]], name="opposite-quadrants")


def disjoint_rays() -> Fan:
    return fan_from_rays([(1, 0), (0, 1)], [[0], [1]], name="two-rays")


SQUARE = [(1, 1, 1), (1, -1, 1), (-1, -1, 1), (-1, 1, 1)]


def square_boundary() -> Fan:
    return fan_from_rays(SQUARE, [[0, 1], [1, 2], [2, 3], [3, 0]], name="square-boundary")


def square_cone() -> Fan:
    return fan_from_rays(SQUARE, [[0, 1, 2, 3]], name="square-cone")


def coordinate_path() -> Fan:
    return coordinate_fan([(0, 1), (1, 2)], 3, name="coordinate-path")


def orthant_fan() -> Fan:
    """The complete fan of the eight closed orthants of R^3; its cell complex is a 2-sphere."""
    rays = [unit(i, 3, s) for i in range(3) for s in (1, -1)]
    cones = []
    for a in (0, 1):
        for b in (2, 3):
            for c in (4, 5):
                cones.append([a, b, c])
    return fan_from_rays(rays, cones, name="complete-octants")


def rp2() -> Fan:
    return coordinate_fan(RP2_FACETS, 6, name="rp2-6-vertex")


def pyramid_over_square() -> Fan:
    """Complete fan: the cone over the square plus four cones joining its edges to -e3."""
    up = [(1, 1, 1), (1, -1, 1), (-1, -1, 1), (-1, 1, 1)]
    apex = (0, 0, -1)
    rays = up + [apex]
    cones = [[0, 1, 2, 3]] + [[i, (i + 1) % 4, 4] for i in range(4)]
    return fan_from_rays(rays, cones, name="square-pyramid-complete")


def named_fans() -> dict[str, Fan]:
    builders = [
        zero_fan, single_ray, shellable_not_clean, half_plane, single_two_cone, opposite_quadrants,
        disjoint_rays, square_boundary, square_cone, coordinate_path, orthant_fan, rp2,
        pyramid_over_square,
    ]
    return {f.name: f for f in (b() for b in builders)}


# --- generated families --------------------------------------------------------------------

RAY_POOL_2D = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (0, -1), (2, 1)]
RAY_POOL_3D = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (-1, 0, 0), (0, 0, -1)]


def _candidate_cones(rays: Sequence[tuple[int, ...]], d: int) -> list[tuple[frozenset[int], Cone]]:
    """Pointed cones spanned by subsets of ``rays`` whose extreme rays are exactly that subset
    and which contain no other ray of the set."""
    out = []
    for k in range(1, len(rays) + 1):
        for sub in combinations(range(len(rays)), k):
            try:
                c = cone_from_generators([rays[i] for i in sub], d)
            except NotPointed:
                continue
            if len(c.generators) != k:
                continue
            if any(c.contains(rays[i]) for i in range(len(rays)) if i not in sub):
                continue
            out.append((frozenset(sub), c))
    return out


def fans_from_rays(rays: Sequence[tuple[int, ...]], d: int) -> Iterator[Fan]:
    """Every fan whose set of rays is exactly ``rays``."""
    cands = _candidate_cones(rays, d)
    face_sets = {c: set(faces(c)) for _, c in cands}
    compatible = {}
    for (s1, c1), (s2, c2) in combinations(cands, 2):
        ok = not (s1 <= s2 or s2 <= s1)
        if ok:
            meet = intersect_cones(c1, c2)
            ok = meet in face_sets[c1] and meet in face_sets[c2]
        compatible[(c1, c2)] = compatible[(c2, c1)] = ok
    everything = frozenset(range(len(rays)))

    def rec(start, chosen, used):
        if used == everything and chosen:
            yield list(chosen)
        for t in range(start, len(cands)):
            s, c = cands[t]
            if all(compatible[(c, o)] for o in chosen):
                yield from rec(t + 1, chosen + [c], used | s)

    for chosen in rec(0, [], frozenset()):
        yield build_fan(chosen, d)


def small_geometric_fans(max_rays: int = 4) -> Iterator[Fan]:
    """All fans in R^2 and R^3 whose rays form a subset of size <= max_rays of the fixed pools."""
    for pool, d in ((RAY_POOL_2D, 2), (RAY_POOL_3D, 3)):
        for k in range(1, max_rays + 1):
            for sub in combinations(pool, k):
                for fan in fans_from_rays(list(sub), d):
                    yield fan


@lru_cache(maxsize=None)
def simplicial_complexes(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Simplicial complexes with vertex set exactly {0..n-1}, one per isomorphism class,
    given by their facets."""
    subsets = [frozenset(s) for k in range(1, n + 1) for s in combinations(range(n), k)]
    seen: set[tuple] = set()  # every relabelling of every class found so far
    out = []
    perms = list(permutations(range(n)))

    def relabel(facets, p):
        return tuple(sorted(tuple(sorted(p[v] for v in f)) for f in facets))

    def rec(i, chosen):
        if i == len(subsets):
            if chosen and frozenset().union(*chosen) == frozenset(range(n)):
                key = relabel(chosen, range(n))
                if key not in seen:
                    orbit = {relabel(chosen, p) for p in perms}
                    seen.update(orbit)
                    out.append(min(orbit))
            return
        s = subsets[i]
        rec(i + 1, chosen)
        if not any(s <= c or c <= s for c in chosen):
            rec(i + 1, chosen + [s])

    rec(0, [])
    return sorted(out, key=lambda fs: (len(fs), fs))


def small_coordinate_fans(max_vertices: int = 5) -> Iterator[Fan]:
    yield coordinate_fan([()], 1, name="sc-void")
    for n in range(1, max_vertices + 1):
        for facets in simplicial_complexes(n):
            yield coordinate_fan(facets, n, name=f"sc{n}:{facets}")
