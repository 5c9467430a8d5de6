"""Shellings, semishellings and clean filtrations of fans.

All searches backtrack over facet orderings.  Whether a facet may come next
depends only on the set of facets already placed, so dead sets are memoized
and the search is exponential in the number of facets, not factorial.  A node
budget turns runaway searches into ``SearchBudgetExceeded`` (verdict Unknown)
rather than a false "no".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from .errors import NotPure, SearchBudgetExceeded
from .fan import Fan, SubfanRef, boundary_subfan, closure, facets_of_cone
from .geometry import BoxSpec, lattice_points
from .homology import QQ, FieldSpec, GF, star_cohomology
from .linalg import Vector
from . import ring

DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class ShellingStep:
    cone: int
    boundary_order: tuple[int, ...]  # D_1 .. D_t, a shelling of the boundary fan of `cone`
    r: int  # the first r boundary facets generate the intersection with earlier facets
    intersection: frozenset[int]

    @property
    def t(self) -> int:
        return len(self.boundary_order)


@dataclass(frozen=True)
class ShellingCertificate:
    facet_order: tuple[int, ...]
    first_boundary: tuple[int, ...]
    steps: tuple[ShellingStep, ...]  # one per facet after the first

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotShellable:
    reason: str = "every facet ordering fails"

    def __bool__(self):
        return False


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def tick(self):
        self.used += 1
        if self.used > self.limit:
            raise SearchBudgetExceeded(f"search exceeded {self.limit} nodes")


StepFilter = Callable[[int, frozenset], Optional[object]]


class _Shellings:
    """Memoized shelling search on subfans of one parent fan."""

    def __init__(self, fan: Fan, budget: _Budget):
        self.fan = fan
        self.budget = budget
        self.memo: dict[tuple, Optional[tuple[int, ...]]] = {}

    def boundary(self, c: int, prefix: frozenset[int] = frozenset()) -> Optional[tuple[int, ...]]:
        """A shelling of the boundary fan of cone c that starts with the facets in ``prefix``."""
        key = (c, prefix)
        if key not in self.memo:
            found = self.search(facets_of_cone(self.fan, c), prefix)
            self.memo[key] = found.facet_order if found else None
        return self.memo[key]

    def search(self, facets: tuple[int, ...], prefix: frozenset[int] = frozenset(),
               step_filter: StepFilter | None = None):
        """Full shelling certificate plus per-step filter payloads, or None."""
        fan = self.fan
        if max(fan.cones[f].dim for f in facets) == 0:
            return _Found(ShellingCertificate(tuple(facets), (), ()), ())
        dead: set[frozenset[int]] = set()
        n = len(facets)

        def dfs(order, placed, covered, steps, extras):
            if len(order) == n:
                return order, steps, extras
            if placed in dead:
                return None
            self.budget.tick()
            pool = [f for f in facets if f not in placed]
            if len(placed) < len(prefix):
                pool = [f for f in pool if f in prefix]
            for c in pool:
                if not order:
                    b = self.boundary(c)
                    if b is None:
                        continue
                    step = None
                else:
                    inter = fan.faces_of[c] & covered
                    f_in = frozenset(f for f in facets_of_cone(fan, c) if f in inter)
                    if not f_in or closure(fan, f_in).cone_ids != inter:
                        continue
                    b = self.boundary(c, f_in)
                    if b is None:
                        continue
                    step = ShellingStep(c, b, len(f_in), inter)
                extra = None
                if step_filter is not None and order:
                    extra = step_filter(c, covered)
                    if extra is None:
                        continue
                res = dfs(order + (c,), placed | {c}, covered | fan.faces_of[c],
                          steps + ((b,) if step is None else (step,)), extras + ((extra,) if order else ()))
                if res is not None:
                    return res
            dead.add(placed)
            return None

        res = dfs((), frozenset(), frozenset(), (), ())
        if res is None:
            return None
        order, steps, extras = res
        return _Found(ShellingCertificate(order, steps[0], steps[1:]), extras)


@dataclass(frozen=True)
class _Found:
    certificate: ShellingCertificate
    extras: tuple

    @property
    def facet_order(self):
        return self.certificate.facet_order


def shellability_search(fan: Fan, budget: int = DEFAULT_BUDGET) -> ShellingCertificate | NotShellable:
    found = _Shellings(fan, _Budget(budget)).search(fan.facets)
    return found.certificate if found else NotShellable()


def prefix_union(fan: Fan, order, j: int) -> SubfanRef:
    """Intersection of fan(C_j) with the union of fan(C_i), i < j (0-based j)."""
    covered = frozenset().union(*(fan.faces_of[c] for c in order[:j]))
    return SubfanRef(fan, fan.faces_of[order[j]] & covered)


# --- ball / sphere recognition ---------------------------------------------------------


@dataclass(frozen=True)
class Recognition:
    kind: str  # "ball" or "sphere"
    dim: int
    confidence: str  # "exact" or "homology"


def recognize_ball_or_sphere(sub: SubfanRef, k: int) -> Recognition | None:
    """Decide whether the cell complex of ``sub`` is a k-ball or a k-sphere.

    Exact up to k = 1 (point counts and graph shape); for k >= 2 only homology
    and pseudomanifold conditions are tested, over Q and F_2.
    """
    fan = sub.fan
    ids = sub.cone_ids
    if k == -1:
        return Recognition("sphere", -1, "exact") if ids == {0} else None
    facets = sub.facets
    if not facets or any(fan.cones[f].dim != k + 1 for f in facets):
        return None
    if k == 0:
        kinds = {1: "ball", 2: "sphere"}
        return Recognition(kinds[len(facets)], 0, "exact") if len(facets) in kinds else None
    if k == 1:
        degree: dict[int, int] = {}
        adj: dict[int, set[int]] = {}
        for f in facets:
            a, b = (i for i in fan.faces_of[f] if fan.cones[i].dim == 1)
            for u, v in ((a, b), (b, a)):
                degree[u] = degree.get(u, 0) + 1
                adj.setdefault(u, set()).add(v)
        start = next(iter(adj))
        seen, stack = {start}, [start]
        while stack:
            for v in adj[stack.pop()] - seen:
                seen.add(v)
                stack.append(v)
        if len(seen) != len(adj) or max(degree.values()) > 2:
            return None
        ones = sum(1 for d in degree.values() if d == 1)
        if ones == 0:
            return Recognition("sphere", 1, "exact")
        if ones == 2:
            return Recognition("ball", 1, "exact")
        return None
    return _homology_recognition(sub.to_fan(), k)


def _homology_recognition(f: Fan, k: int) -> Recognition | None:
    top = f.dim - 1
    for field in (QQ, GF(2)):
        glob = star_cohomology(f, 0, field)
        if any(glob[i] for i in glob.degrees() if i != top) or glob[top] > 1:
            return None
        for c in range(1, len(f.cones)):
            h = star_cohomology(f, c, field)
            if any(h[i] for i in h.degrees() if i != top) or h[top] > 1:
                return None
    glob = star_cohomology(f, 0, QQ)
    local_top = {c: star_cohomology(f, c, QQ)[top] for c in range(1, len(f.cones))}
    if glob[top] == 1:
        if all(v == 1 for v in local_top.values()):
            return Recognition("sphere", k, "homology")
        return None
    bnd = boundary_subfan(f)
    if bnd.is_empty:
        return None
    if {c for c, v in local_top.items() if v == 0} != bnd.cone_ids - {0}:
        return None
    inner = recognize_ball_or_sphere(bnd, k - 1)
    if inner is None or inner.kind != "sphere":
        return None
    return Recognition("ball", k, "homology")


# --- semishelling --------------------------------------------------------------------------


@dataclass(frozen=True)
class SemishellingStep:
    cone: int
    intersection: frozenset[int]
    recognized: Recognition


@dataclass(frozen=True)
class SemishellingCertificate:
    facet_order: tuple[int, ...]
    steps: tuple[SemishellingStep, ...]

    def __bool__(self):
        return True

    @property
    def confidence(self) -> str:
        return "homology" if any(s.recognized.confidence == "homology" for s in self.steps) else "exact"


@dataclass(frozen=True)
class NotSemishellable:
    reason: str

    def __bool__(self):
        return False


def _semishell_step(fan: Fan, c: int, covered: frozenset[int]) -> SemishellingStep | None:
    inter = fan.faces_of[c] & covered
    rec = recognize_ball_or_sphere(SubfanRef(fan, inter), fan.cones[c].dim - 2)
    return None if rec is None else SemishellingStep(c, inter, rec)


def semishellability_check(fan: Fan, order: tuple[int, ...] | None = None,
                           budget: int = DEFAULT_BUDGET) -> SemishellingCertificate | NotSemishellable:
    if fan.dim == 0:
        return SemishellingCertificate(tuple(fan.facets), ())
    if order is not None:
        if sorted(order) != sorted(fan.facets):
            raise ValueError("order must list every facet exactly once")
        steps = []
        covered = fan.faces_of[order[0]]
        for j, c in enumerate(order[1:], start=2):
            step = _semishell_step(fan, c, covered)
            if step is None:
                return NotSemishellable(f"step {j}: intersection is neither a ball nor a sphere")
            steps.append(step)
            covered = covered | fan.faces_of[c]
        return SemishellingCertificate(tuple(order), tuple(steps))

    meter = _Budget(budget)
    dead: set[frozenset[int]] = set()

    def dfs(order, placed, covered, steps):
        if len(order) == len(fan.facets):
            return order, steps
        if placed in dead:
            return None
        meter.tick()
        for c in fan.facets:
            if c in placed:
                continue
            if order:
                step = _semishell_step(fan, c, covered)
                if step is None:
                    continue
                nxt = steps + (step,)
            else:
                nxt = steps
            res = dfs(order + (c,), placed | {c}, covered | fan.faces_of[c], nxt)
            if res is not None:
                return res
        dead.add(placed)
        return None

    res = dfs((), frozenset(), frozenset(), ())
    if res is None:
        return NotSemishellable("every facet ordering fails")
    return SemishellingCertificate(*res)


def semishellable_implies_cm_check(fan: Fan, field: FieldSpec = QQ) -> bool:
    if not fan.pure:
        raise NotPure("the Cohen-Macaulay consequence needs a pure fan")
    return bool(ring.is_cohen_macaulay(fan, field))


@dataclass(frozen=True)
class StepIdealReport:
    step: int  # 1-based position j of the facet in the order
    cone: int
    intersection: frozenset[int]
    cohen_macaulay: bool
    canonical: object  # EulerSelf | IdealSubfan | NoGradedEmbedding | None
    support_matches: bool | None  # omega support equals the expected ideal support on the box

    @property
    def ok(self) -> bool:
        return self.cohen_macaulay and not isinstance(self.canonical, ring.NoGradedEmbedding) and (
            self.support_matches is not False
        )


def step_ideal_report(fan: Fan, certificate, field: FieldSpec = QQ, box: BoxSpec = BoxSpec(2)) -> list[StepIdealReport]:
    """CM and canonical-ideal analysis of every step intersection, as a standalone fan."""
    order = certificate.facet_order
    out = []
    for j in range(1, len(order)):
        sub = prefix_union(fan, order, j)
        standalone = sub.to_fan()
        cm = bool(ring.is_cohen_macaulay(standalone, field))
        canon = ring.canonical_ideal_subfan(standalone, field) if cm else None
        matches = None
        if cm and not isinstance(canon, ring.NoGradedEmbedding):
            omega = ring.omega_hilbert(standalone, field, box).support()
            if isinstance(canon, ring.IdealSubfan):
                expected = set(ring.support_indicator(standalone, box, exclude=canon.subfan))
            else:
                expected = set(ring.support_indicator(standalone, box))
            matches = omega == expected
        out.append(StepIdealReport(j + 1, order[j], sub.cone_ids, cm, canon, matches))
    return out


# --- cleanness -------------------------------------------------------------------------------


@dataclass(frozen=True)
class CleanWitness:
    facet_order: tuple[int, ...]
    gammas: tuple[Vector, ...]  # gamma_j for j = 2..s
    box: BoxSpec
    certificate: ShellingCertificate

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotClean:
    reason: str
    box_qualified: bool
    box: BoxSpec
    shellable: bool

    def __bool__(self):
        return False


def _graded_key(a: Vector):
    return (sum(abs(x) for x in a), a)


class _GammaSearch:
    def __init__(self, fan: Fan, box: BoxSpec):
        self.fan = fan
        self.box = box
        self.box_limited = False  # some step failed only because gamma was searched in the box
        self._memo: dict[tuple[int, frozenset[int]], Vector | None] = {}

    def __call__(self, c: int, covered: frozenset[int]) -> Vector | None:
        fan = self.fan
        rest = fan.faces_of[c] - covered
        key = (c, rest)
        if key not in self._memo:
            self._memo[key] = self._search(c, rest)
        return self._memo[key]

    def _search(self, c: int, rest: frozenset[int]) -> Vector | None:
        fan = self.fan
        minimal = [g for g in rest if not any(h != g and h in rest for h in fan.faces_of[g])]
        if len(minimal) != 1:
            return None
        g = minimal[0]
        points = sorted(lattice_points(fan.cones[c], self.box))
        # faces of C_j in id order, so the first one containing a point is its carrier
        own = [(i, fan.cones[i]) for i in sorted(fan.faces_of[c])]
        carrier = {}
        for a in points:
            carrier[a] = next(i for i, f in own if f.contains(a))
        for gamma in sorted(lattice_points(fan.cones[g], self.box, relint_only=True), key=_graded_key):
            if self._translate_ok(fan.cones[c], own, rest, gamma, points, carrier):
                return gamma
        self.box_limited = True
        return None

    @staticmethod
    def _translate_ok(cone, own, rest, gamma, points, carrier) -> bool:
        # relint points of the faces in `rest` must be exactly gamma + (cone lattice points)
        for a in points:
            lhs = carrier[a] in rest
            rhs = cone.contains(tuple(x - y for x, y in zip(a, gamma)))
            if lhs != rhs:
                return False
        for b in points:
            shifted = tuple(x + y for x, y in zip(b, gamma))
            where = carrier.get(shifted)
            if where is None:
                where = next(i for i, f in own if f.contains(shifted))
            if where not in rest:
                return False
        return True


def cleanness_check(fan: Fan, box: BoxSpec = BoxSpec(), budget: int = DEFAULT_BUDGET) -> CleanWitness | NotClean:
    """Search a shelling together with translation points gamma_j for every step.

    The star condition is exact; the lattice translation condition is checked
    on the box, and gamma_j is searched in the box.
    """
    meter = _Budget(budget)
    gamma = _GammaSearch(fan, box)
    engine = _Shellings(fan, meter)
    found = engine.search(fan.facets, step_filter=gamma)
    if found is not None:
        return CleanWitness(found.facet_order, tuple(found.extras), box, found.certificate)
    shellable = engine.search(fan.facets) is not None
    if not shellable:
        return NotClean("fan is not shellable", False, box, False)
    if gamma.box_limited:
        return NotClean(f"no shelling admits translation points gamma_j with |gamma_j|_inf <= {box.radius}",
                        True, box, True)
    return NotClean("no shelling satisfies the star condition for gamma_j", False, box, True)


@dataclass(frozen=True)
class OmegaStepReport:
    step: int
    cone: int
    omega: frozenset[int]
    empty: bool
    gorenstein: object = None  # GorensteinWitness | NotGorenstein | None
    boundary_matches: bool | None = None  # boundary of Omega_j equals Omega_j meet Pi_j

    @property
    def ok(self) -> bool:
        return self.empty or (bool(self.gorenstein) and self.boundary_matches is not False)


def clean_consequence_check(fan: Fan, witness: CleanWitness, field: FieldSpec = QQ,
                            box: BoxSpec = BoxSpec()) -> list[OmegaStepReport]:
    """Omega_j (the boundary facets after the prefix) is empty or Gorenstein at every step."""
    out = []
    for j, step in enumerate(witness.certificate.steps, start=2):
        tail = step.boundary_order[step.r:]
        if not tail:
            out.append(OmegaStepReport(j, step.cone, frozenset(), True))
            continue
        omega = closure(fan, tail)
        standalone = omega.to_fan()
        gor = ring.gorenstein_check(standalone, field, box)
        matches = None
        if standalone.dim >= 1:
            bnd = boundary_subfan(standalone)
            expected = omega.cone_ids & step.intersection
            got = frozenset(fan.id_of(standalone.cones[i]) for i in bnd.cone_ids)
            matches = got == expected
        out.append(OmegaStepReport(j, step.cone, omega.cone_ids, False, gor, matches))
    return out
