import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import full_corpus
from oracles import reduced_homology
from toricface.corpus import (
    RP2_FACETS, coordinate_fan, shellable_not_clean, rp2, simplicial_complexes, single_ray, square_boundary,
)
from toricface.fan import rho, star
from toricface.homology import (
    GF, QQ, FieldSpec, GradedDims, cohomology_profile, local_homology_profile, order_complex, reduced_cohomology,
    simplicial_complex, star_cohomology,
)

small_corpus = st.sampled_from(full_corpus()[:400] + full_corpus()[-120:])


def test_field_spec():
    assert FieldSpec.parse("q") == QQ
    assert FieldSpec.parse("fp:3") == GF(3)
    assert str(GF(2)) == "F_2" and str(QQ) == "Q"
    for bad in ("fp:4", "fp:1", "x"):
        with pytest.raises(ValueError):
            FieldSpec.parse(bad)


def test_graded_dims():
    h = GradedDims(-1, (0, 2, 1))
    assert h[5] == 0 and h[0] == 2
    assert h.euler() == -0 + 2 - 1  # degree -1 counts negatively
    assert h.shifted(2)[2] == 2
    assert h.nonzero() == {0: 2, 1: 1}


def test_reduced_cohomology_examples():
    void = simplicial_complex([()])
    assert reduced_cohomology(void).nonzero() == {-1: 1}
    assert reduced_cohomology(simplicial_complex([("a",)])).nonzero() == {}
    hollow = simplicial_complex([(0, 1), (1, 2), (0, 2)])
    assert reduced_cohomology(hollow).nonzero() == {1: 1}


def test_projective_plane_cohomology():
    cx = simplicial_complex(RP2_FACETS)
    assert reduced_cohomology(cx, QQ).nonzero() == {}
    assert reduced_cohomology(cx, GF(2)).nonzero() == {1: 1, 2: 1}
    assert reduced_cohomology(cx, GF(3)).nonzero() == {}


def test_order_complex_examples():
    f = single_ray()
    assert order_complex(star(f, 1)).faces == {-1: [()]}
    assert len(order_complex(star(f, 0)).vertices) == 1
    p = shellable_not_clean()
    cx = order_complex(star(p, 0))
    assert len(cx.vertices) == 5 and len(cx.faces[1]) == 4
    assert reduced_cohomology(cx).nonzero() == {}


def test_star_cohomology_examples():
    f = single_ray()
    assert star_cohomology(f, 1).nonzero() == {0: 1}
    assert star_cohomology(f, 0).nonzero() == {}
    p = shellable_not_clean()
    assert star_cohomology(p, p.id_of([(2, 1)])).nonzero() == {}
    assert star_cohomology(p, p.id_of([(0, 1)])).nonzero() == {1: 1}
    assert star_cohomology(p, 0).degrees() == range(-1, 2)


def test_local_homology_examples():
    sq = square_boundary()
    for c in range(1, 5):
        assert local_homology_profile(sq, c).nonzero() == {1: 1}
    assert star_cohomology(sq, 0).nonzero() == {1: 1}


@given(small_corpus)
def test_euler_consistency_and_shift(f):
    for c in range(len(f.cones)):
        h_q = star_cohomology(f, c, QQ)
        h_2 = star_cohomology(f, c, GF(2))
        assert h_q.euler() == h_2.euler() == rho(f, c)
        for i in h_q.degrees():
            assert h_2[i] >= h_q[i] >= 0
        raw = reduced_cohomology(order_complex(star(f, c)))
        d = f.cones[c].dim
        for i in h_q.degrees():
            assert h_q[i] == raw[i - d]


@given(st.sampled_from([fs for n in range(1, 5) for fs in simplicial_complexes(n)]))
def test_whole_complex_against_oracle(facets):
    # the star of 0 in a coordinate fan is the barycentric subdivision of the complex
    n = 1 + max(v for f in facets for v in f)
    f = coordinate_fan(facets, n)
    for p, field in ((0, QQ), (2, GF(2))):
        expected = {i: v for i, v in reduced_homology(facets, p).items() if v}
        assert star_cohomology(f, 0, field).nonzero() == expected


def test_profile_covers_every_cone():
    f = rp2()
    prof = cohomology_profile(f, GF(2))
    assert set(prof) == set(range(len(f.cones)))
    assert prof[0].nonzero() == {1: 1, 2: 1}
