"""Cohen-Macaulay, Gorenstein and canonical-module questions about K[fan].

Graded Hilbert functions of local cohomology and of the canonical module are
evaluated degreewise from star cohomology: a degree a contributes through the
unique cone carrying a (or -a) in its relative interior.  Conditions that
quantify over infinitely many lattice points are checked on a finite box and
the results say so.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import NotCohenMacaulay, NotPure
from .fan import (
    EulerReport, Fan, SubfanRef, boundary_subfan, embed_fan, is_euler_fan, join_fan, rho,
    star_of_point,
)
from .geometry import BoxSpec, intersect_cones, lattice_points
from .homology import QQ, FieldSpec, star_cohomology
from .linalg import Vector


@dataclass(frozen=True)
class CMResult:
    is_cm: bool
    witness: tuple[int, int] | None = None  # (cone id, degree) of the first non-vanishing group

    def __bool__(self):
        return self.is_cm


def is_cohen_macaulay(fan: Fan, field: FieldSpec = QQ) -> CMResult:
    top = fan.dim - 1
    for c in range(len(fan.cones)):
        h = star_cohomology(fan, c, field)
        for i in h.degrees():
            if i < top and h[i]:
                return CMResult(False, (c, i))
    return CMResult(True)


def require_cm(fan: Fan, field: FieldSpec) -> None:
    res = is_cohen_macaulay(fan, field)
    if not res:
        raise NotCohenMacaulay(res.witness)


@dataclass(frozen=True)
class GradedHilbertSlice:
    box: BoxSpec
    values: dict[Vector, int]

    def __getitem__(self, a) -> int:
        return self.values.get(tuple(a), 0)

    def support(self) -> set[Vector]:
        return {a for a, v in self.values.items() if v}


def _relint_points(fan: Fan, box: BoxSpec) -> dict[int, set[Vector]]:
    return {c: lattice_points(cone, box, relint_only=True) for c, cone in enumerate(fan.cones)}


def omega_hilbert(fan: Fan, field: FieldSpec = QQ, box: BoxSpec = BoxSpec()) -> GradedHilbertSlice:
    """Dimension of the canonical module in every degree of the box."""
    require_cm(fan, field)
    top = fan.dim - 1
    values = {}
    for c, pts in _relint_points(fan, box).items():
        t = star_cohomology(fan, c, field)[top]
        if t:
            values.update(dict.fromkeys(pts, t))
    return GradedHilbertSlice(box, values)


def local_cohomology_hilbert(fan: Fan, field: FieldSpec, i: int, box: BoxSpec = BoxSpec()) -> GradedHilbertSlice:
    """Dimension of H^i_m(K[fan]) in every degree of the box."""
    if not 0 <= i <= fan.dim:
        raise ValueError(f"local cohomology degree must lie in 0..{fan.dim}")
    values = {}
    for c, pts in _relint_points(fan, box).items():
        t = star_cohomology(fan, c, field)[i - 1]
        if t:
            values.update({tuple(-x for x in a): t for a in pts})
    return GradedHilbertSlice(box, values)


def support_indicator(fan: Fan, box: BoxSpec, exclude: SubfanRef | None = None) -> dict[Vector, int]:
    """Indicator of the lattice points of |fan| (minus |exclude|) inside the box."""
    out = {}
    for c, pts in _relint_points(fan, box).items():
        if exclude is None or c not in exclude:
            out.update(dict.fromkeys(pts, 1))
    return out


# --- Gorenstein ------------------------------------------------------------------


@dataclass(frozen=True)
class GorensteinWitness:
    sigma: Vector
    condition_i_status: str  # "verified(box=R)" or "failed at a"
    condition_ii_report: dict[int, int]  # rho per cone
    box: BoxSpec

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotGorenstein:
    reason: str
    box_qualified: bool = False
    box: BoxSpec | None = None

    def __bool__(self):
        return False


GorensteinResult = Union[GorensteinWitness, NotGorenstein]


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _condition_ii(fan: Fan, in_star: frozenset[int]) -> bool:
    target = _sign(fan.dim - 1)
    return all(rho(fan, c) == (target if c in in_star else 0) for c in range(len(fan.cones)))


def _condition_i_failure(fan: Fan, sigma: Vector, in_star: frozenset[int], box: BoxSpec) -> Vector | None:
    """First point where the relint points of str(sigma) and sigma + Supp disagree.

    Both sides lie inside |fan| (sigma sits in every facet), so only lattice
    points of |fan| in the box need testing, plus the translates sigma + b.
    """
    carrier = {}
    for c, cone in enumerate(fan.cones):
        for a in lattice_points(cone, box, relint_only=True):
            carrier[a] = c
    for a in sorted(carrier):
        lhs = carrier[a] in in_star
        rhs = fan.contains_point(tuple(x - s for x, s in zip(a, sigma)))
        if lhs != rhs:
            return a
    for b in sorted(carrier):
        shifted = tuple(x + s for x, s in zip(b, sigma))
        if fan.carrier(shifted) not in in_star:
            return shifted
    return None


def gorenstein_check(fan: Fan, field: FieldSpec = QQ, box: BoxSpec = BoxSpec()) -> GorensteinResult:
    """Search sigma in the intersection of all facets for the two-condition Gorenstein criterion.

    Condition (ii) is finite and checked exactly.  Condition (i) is checked on
    the box; sigma is searched among lattice points of the box in
    lexicographic order.
    """
    require_cm(fan, field)
    facets = [fan.cones[i] for i in fan.facets]
    core = facets[0]
    for c in facets[1:]:
        core = intersect_cones(core, c)
    # condition (ii) only depends on the cone carrying sigma
    viable = {}
    for c, cone in enumerate(fan.cones):
        if all(core.contains(g) for g in cone.generators):
            members = fan.cofaces_of[c]
            if _condition_ii(fan, members):
                viable[c] = members
    if not viable:
        return NotGorenstein("no cone inside the intersection of the facets satisfies the rho condition")
    candidates = sorted(
        a for c in viable for a in lattice_points(fan.cones[c], box, relint_only=True)
    )
    first_failure = None
    for sigma in candidates:
        in_star = star_of_point(fan, sigma).members
        bad = _condition_i_failure(fan, sigma, in_star, box)
        if bad is None:
            return GorensteinWitness(
                sigma, f"verified(box={box.radius})",
                {c: rho(fan, c) for c in range(len(fan.cones))}, box,
            )
        first_failure = first_failure or (sigma, bad)
    detail = f"; e.g. sigma={first_failure[0]} fails at {first_failure[1]}" if first_failure else ""
    return NotGorenstein(
        f"no sigma with |sigma|_inf <= {box.radius} satisfies the support condition{detail}",
        box_qualified=True, box=box,
    )


# --- canonical module as an ideal ---------------------------------------------------


@dataclass(frozen=True)
class EulerSelf:
    """The canonical module is K[fan] itself."""

    kind: str = "EulerSelf"


@dataclass(frozen=True)
class IdealSubfan:
    """The canonical module is the radical ideal of lattice points outside ``subfan``."""

    subfan: SubfanRef
    kind: str = "IdealSubfan"


@dataclass(frozen=True)
class NoGradedEmbedding:
    reason: str
    kind: str = "NoGradedEmbedding"


CanonicalIdealResult = Union[EulerSelf, IdealSubfan, NoGradedEmbedding]


def top_cohomology_table(fan: Fan, field: FieldSpec = QQ) -> dict[int, int]:
    top = fan.dim - 1
    return {c: star_cohomology(fan, c, field)[top] for c in range(len(fan.cones))}


def canonical_ideal_subfan(fan: Fan, field: FieldSpec = QQ) -> CanonicalIdealResult:
    require_cm(fan, field)
    t = top_cohomology_table(fan, field)
    if all(v == 1 for v in t.values()):
        return EulerSelf()
    if any(v > 1 for v in t.values()):
        c = min(c for c, v in t.items() if v > 1)
        return NoGradedEmbedding(f"top star cohomology of cone {c} has dimension {t[c]} > 1")
    ids = frozenset(c for c, v in t.items() if v == 0)
    try:
        sub = SubfanRef(fan, ids)
    except ValueError:
        return NoGradedEmbedding("cones with vanishing top star cohomology are not closed under faces")
    if sub.dim != fan.dim - 1:
        return NoGradedEmbedding(f"candidate subfan has dimension {sub.dim}, expected {fan.dim - 1}")
    standalone = sub.to_fan()
    if not is_euler_fan(standalone):
        return NoGradedEmbedding("candidate subfan is not Euler")
    if not is_cohen_macaulay(standalone, field):
        return NoGradedEmbedding("candidate subfan is not Cohen-Macaulay")
    return IdealSubfan(sub)


def cross_validate_via_join(fan: Fan, sigma_prime: SubfanRef, field: FieldSpec = QQ) -> bool:
    """Build (w * sub) united with fan one dimension up and check it is Euler and CM."""
    lifted = embed_fan(fan)
    ids = frozenset(lifted.id_of([g + (0,) for g in fan.cones[i].generators]) for i in sigma_prime.cone_ids)
    w = (0,) * fan.ambient_dim + (1,)
    pi = join_fan(w, SubfanRef(lifted, ids), lifted)
    return bool(is_cohen_macaulay(pi, field)) and bool(is_euler_fan(pi))


# --- manifolds with boundary -----------------------------------------------------------


@dataclass(frozen=True)
class DualityReport:
    applicable: bool
    boundary: SubfanRef | None = None
    manifold_like: bool | None = None
    boundary_euler_cm: bool | None = None
    canonical: CanonicalIdealResult | None = None
    canonical_is_boundary_ideal: bool | None = None
    reason: str = ""
    heuristic_note: str = field(
        default="manifold property judged from local homology only; not a topological certificate"
    )

    @property
    def agreement(self) -> bool | None:
        if not self.applicable:
            return None
        return self.boundary_euler_cm == self.canonical_is_boundary_ideal


def manifold_boundary_duality_check(fan: Fan, field: FieldSpec = QQ) -> DualityReport:
    if not fan.pure:
        raise NotPure("boundary duality needs a pure fan")
    require_cm(fan, field)
    bnd = boundary_subfan(fan)
    if bnd.is_empty:
        return DualityReport(False, bnd, reason="no boundary (closed case)")
    top = fan.dim - 1
    manifold_like = True
    for c in range(1, len(fan.cones)):
        h = star_cohomology(fan, c, field)
        lower_ok = all(h[i] == 0 for i in h.degrees() if i != top)
        expected = 0 if c in bnd else 1
        if not lower_ok or h[top] != expected:
            manifold_like = False
            break
    standalone = bnd.to_fan()
    euler_cm = bool(is_euler_fan(standalone)) and bool(is_cohen_macaulay(standalone, field))
    canon = canonical_ideal_subfan(fan, field)
    matches = isinstance(canon, IdealSubfan) and canon.subfan.cone_ids == bnd.cone_ids
    return DualityReport(True, bnd, manifold_like, euler_cm, canon, matches)


def analyze(fan: Fan, field: FieldSpec = QQ, box: BoxSpec = BoxSpec()) -> dict:
    """CM, Euler, Gorenstein and canonical-ideal verdicts in one dictionary."""
    cm = is_cohen_macaulay(fan, field)
    euler: EulerReport = is_euler_fan(fan)
    out = {"cm": cm, "euler": euler, "gorenstein": None, "canonical": None}
    if cm:
        out["gorenstein"] = gorenstein_check(fan, field, box)
        out["canonical"] = canonical_ideal_subfan(fan, field)
    else:
        out["gorenstein"] = NotGorenstein("not Cohen-Macaulay")
    return out
