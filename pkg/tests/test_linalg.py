from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st

from toricface.linalg import canonical_basis, content, integralize, primitive, rank, rref

matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=0, max_size=6)
)


@given(matrices)
def test_rank_over_q_matches_sympy(rows):
    expected = sympy.Matrix(rows).rank() if rows else 0
    assert rank(rows) == expected


@given(matrices)
def test_rank_mod_2_matches_bit_elimination(rows):
    bits = [sum(1 << j for j, x in enumerate(r) if x % 2) for r in rows]
    r = 0
    while bits:
        piv = bits.pop()
        if piv:
            r += 1
            low = piv & -piv
            bits = [b ^ piv if b & low else b for b in bits]
    assert rank(rows, 2) == r


@given(matrices)
def test_rank_mod_p_bounded_by_rank_over_q(rows):
    for p in (2, 3, 5):
        assert rank(rows, p) <= rank(rows)


def test_rank_characteristic_dependence():
    m = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
    assert rank(m) == 3 and rank(m, 2) == 2


def test_sparse_rows_accepted():
    assert rank([{0: 1, 2: 1}, {0: 2, 2: 2}]) == 1


def test_primitive_and_content():
    assert content([4, -6, 0]) == 2
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert integralize([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)


@given(matrices)
def test_canonical_basis_spans_row_space(rows):
    n = len(rows[0]) if rows else 3
    basis = canonical_basis(rows, n)
    assert len(basis) == rank(rows)
    assert rank(list(rows) + list(basis)) == len(basis)
    assert len(rref(rows, n)) == len(basis)
