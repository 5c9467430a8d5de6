import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import full_corpus
from oracles import bw_shellable
from toricface.corpus import (
    RP2_FACETS, coordinate_fan, coordinate_path, half_plane, opposite_quadrants, orthant_fan, rp2, shellable_not_clean,
    simplicial_complexes, single_two_cone, square_boundary, zero_fan,
)
from toricface.errors import NotPure, SearchBudgetExceeded
from toricface.fan import SubfanRef, closure, facets_of_cone, fan_from_rays
from toricface.geometry import BoxSpec
from toricface.homology import GF, QQ
from toricface.ring import EulerSelf, GorensteinWitness, IdealSubfan
from toricface.shelling import (
    CleanWitness, NotClean, NotSemishellable, NotShellable, clean_consequence_check, cleanness_check,
    prefix_union, recognize_ball_or_sphere, semishellability_check, semishellable_implies_cm_check,
    shellability_search, step_ideal_report,
)

small_corpus = st.sampled_from(full_corpus()[:400] + full_corpus()[-120:])


def check_certificate(fan, cert):
    """Re-verify the prefix conditions of a shelling certificate step by step."""
    assert sorted(cert.facet_order) == sorted(fan.facets)
    if fan.dim == 0:
        return
    assert sorted(cert.first_boundary) == sorted(facets_of_cone(fan, cert.facet_order[0]))
    for j, step in enumerate(cert.steps, start=1):
        assert step.cone == cert.facet_order[j]
        assert sorted(step.boundary_order) == sorted(facets_of_cone(fan, step.cone))
        assert 1 <= step.r <= step.t
        assert prefix_union(fan, cert.facet_order, j).cone_ids == step.intersection
        assert closure(fan, step.boundary_order[:step.r]).cone_ids == step.intersection


def test_zero_fan_is_trivially_everything():
    f = zero_fan()
    assert shellability_search(f)
    assert semishellability_check(f)
    assert isinstance(cleanness_check(f), CleanWitness)


def test_two_cone_fan_shelling():
    f = shellable_not_clean()
    cert = shellability_search(f)
    check_certificate(f, cert)
    (step,) = cert.steps
    shared = f.id_of([(0, 1)])
    assert step.r == 1 and step.boundary_order[0] == shared
    assert step.intersection == {0, shared}


def test_opposite_quadrants():
    f = opposite_quadrants()
    assert isinstance(shellability_search(f), NotShellable)
    assert isinstance(semishellability_check(f), NotSemishellable)
    for order in (f.facets, f.facets[::-1]):
        assert not semishellability_check(f, order)
    clean = cleanness_check(f)
    assert isinstance(clean, NotClean) and not clean.shellable and not clean.box_qualified


def test_semishelling_with_given_order():
    f = shellable_not_clean()
    cert = semishellability_check(f, f.facets)
    (step,) = cert.steps
    assert (step.recognized.kind, step.recognized.dim, step.recognized.confidence) == ("ball", 0, "exact")
    assert cert.confidence == "exact"
    with pytest.raises(ValueError):
        semishellability_check(f, f.facets[:1])


def test_semishellable_implies_cm():
    assert semishellable_implies_cm_check(shellable_not_clean(), QQ)
    assert semishellable_implies_cm_check(shellable_not_clean(), GF(2))
    assert semishellable_implies_cm_check(half_plane(), QQ)
    with pytest.raises(NotPure):
        semishellable_implies_cm_check(fan_from_rays([(1, 0), (0, 1), (-1, -1)], [[0, 1], [2]]))


def test_recognition():
    f = shellable_not_clean()
    assert recognize_ball_or_sphere(SubfanRef(f, frozenset({0})), -1).kind == "sphere"
    one = SubfanRef(f, frozenset({0, f.id_of([(0, 1)])}))
    assert recognize_ball_or_sphere(one, 0).kind == "ball"
    two = SubfanRef(f, frozenset({0, f.id_of([(2, 1)]), f.id_of([(-2, 1)])}))
    assert recognize_ball_or_sphere(two, 0).kind == "sphere"
    assert recognize_ball_or_sphere(SubfanRef(f, f.all_ids()), 1).kind == "ball"
    sq = square_boundary()
    assert recognize_ball_or_sphere(SubfanRef(sq, sq.all_ids()), 1).kind == "sphere"
    tetra = coordinate_fan([(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)], 4)
    rec = recognize_ball_or_sphere(SubfanRef(tetra, tetra.all_ids()), 2)
    assert (rec.kind, rec.confidence) == ("sphere", "homology")
    tri = coordinate_fan([(0, 1, 2)], 3)
    assert recognize_ball_or_sphere(SubfanRef(tri, tri.all_ids()), 2).kind == "ball"
    proj = rp2()
    assert recognize_ball_or_sphere(SubfanRef(proj, proj.all_ids()), 2) is None
    tripod = coordinate_fan([(0, 1), (0, 2), (0, 3)], 4)
    assert recognize_ball_or_sphere(SubfanRef(tripod, tripod.all_ids()), 1) is None


def test_step_ideal_reports():
    f = shellable_not_clean()
    (rep,) = step_ideal_report(f, semishellability_check(f))
    assert rep.cohen_macaulay and isinstance(rep.canonical, IdealSubfan)
    assert rep.canonical.subfan.cone_ids == {0} and rep.ok
    orth = orthant_fan()
    reports = step_ideal_report(orth, semishellability_check(orth))
    assert all(r.ok for r in reports)
    kinds = {type(r.canonical) for r in reports}
    # the last orthant closes up a circle, earlier ones meet the rest in arcs
    assert isinstance(reports[-1].canonical, EulerSelf)
    assert IdealSubfan in kinds


def test_path_fan_is_clean():
    f = coordinate_path()
    w = cleanness_check(f)
    assert isinstance(w, CleanWitness)
    first, second = w.facet_order
    new_ray = set(f.cones[second].generators) - set(f.cones[first].generators)
    assert w.gammas == (new_ray.pop(),)
    (rep,) = clean_consequence_check(f, w, QQ)
    assert not rep.empty and rep.ok
    assert isinstance(rep.gorenstein, GorensteinWitness) and rep.gorenstein.sigma == w.gammas[0]


def test_clean_consequence_empty_omega():
    f = single_two_cone()
    w = cleanness_check(f)
    assert isinstance(w, CleanWitness) and w.gammas == ()
    circle = coordinate_fan([(0, 1), (1, 2), (0, 2)], 3)
    w = cleanness_check(circle)
    reports = clean_consequence_check(circle, w, QQ)
    # the last facet of a circle is glued along its whole boundary
    assert reports[-1].empty and all(r.ok for r in reports)


def test_non_unimodular_circle_is_not_clean():
    # relint of cone((1,1,1),(1,-1,1)) is not a lattice translate of the cone
    res = cleanness_check(square_boundary(), BoxSpec(3))
    assert isinstance(res, NotClean) and res.shellable


def test_two_cone_fan_not_clean():
    res = cleanness_check(shellable_not_clean(), BoxSpec(6))
    assert isinstance(res, NotClean) and res.shellable and res.box_qualified


def test_budget_exhaustion():
    with pytest.raises(SearchBudgetExceeded):
        shellability_search(rp2(), budget=3)
    with pytest.raises(SearchBudgetExceeded):
        semishellability_check(rp2(), budget=3)
    with pytest.raises(SearchBudgetExceeded):
        cleanness_check(rp2(), BoxSpec(2), budget=3)


def test_projective_plane_is_not_shellable():
    f = rp2()
    assert not shellability_search(f)
    assert not bw_shellable(RP2_FACETS)


@given(small_corpus)
def test_certificates_verify(f):
    cert = shellability_search(f)
    if cert:
        check_certificate(f, cert)
        assert semishellability_check(f, cert.facet_order)
    clean = cleanness_check(f, BoxSpec(2))
    if clean:
        check_certificate(f, clean.certificate)
        assert shellability_search(f)


def test_clean_matches_simplicial_shellability():
    for n in range(1, 6):
        for facets in simplicial_complexes(n):
            f = coordinate_fan(facets, n)
            expected = bw_shellable(facets)
            assert bool(shellability_search(f)) == expected, facets
            assert bool(cleanness_check(f, BoxSpec(2))) == expected, facets
