from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from latred.errors import Singular
from latred.linalg import (
    determinant,
    dot,
    gram_matrix,
    gram_schmidt,
    hnf,
    identity,
    int_matrix_inverse,
    inverse,
    mat_mul,
    norm_sq,
    nullspace,
    rank,
    snf_divisors,
    solve_in_span,
    unit_vector,
    vsub,
)
from latred.rationals import Q

int_matrices = st.integers(2, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-6, 6), min_size=n, max_size=n),
        min_size=n,
        max_size=n,
    )
)


def qmat(rows):
    return tuple(tuple(Q(x) for x in row) for row in rows)


def fraction_determinant(rows):
    """Independent oracle: fraction-based Gaussian elimination."""
    m = [[Fraction(int(x)) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@given(int_matrices)
def test_determinant_matches_fraction_elimination(rows):
    d = determinant(qmat(rows))
    od = fraction_determinant(rows)
    assert int(d.numerator) == od.numerator and int(d.denominator) == od.denominator


@given(int_matrices)
def test_hnf_is_unimodular_transform(rows):
    h, u = hnf(rows)
    assert abs(determinant(qmat(u))) == 1
    assert [list(map(int, r)) for r in mat_mul(qmat(u), qmat(rows))] == [
        list(r) for r in h
    ]
    # echelon shape: pivot columns strictly increase over nonzero rows
    pivots = [next(i for i, x in enumerate(r) if x) for r in h if any(r)]
    assert pivots == sorted(set(pivots))
    zeros_started = False
    for r in h:
        if not any(r):
            zeros_started = True
        else:
            assert not zeros_started


@given(int_matrices)
def test_snf_divisor_chain(rows):
    divs = snf_divisors(rows)
    nz = [d for d in divs if d]
    for a, b in zip(nz, nz[1:]):
        assert b % a == 0
    d = abs(fraction_determinant(rows))
    prod = 1
    for x in nz:
        prod *= x
    if d:
        assert len(nz) == len(rows) and prod == d


@settings(max_examples=40)
@given(int_matrices)
def test_inverse_multiplies_to_identity(rows):
    m = qmat(rows)
    if determinant(m) == 0:
        with pytest.raises(Singular):
            inverse(m)
        return
    assert mat_mul(m, inverse(m)) == identity(len(m))


@given(int_matrices)
def test_nullspace_annihilates(rows):
    m = qmat(rows)
    basis = nullspace(m)
    assert len(basis) == len(m) - rank(m)
    for v in basis:
        assert all(dot(row, v) == 0 for row in m)


@given(int_matrices)
def test_gram_schmidt_orthogonality(rows):
    m = qmat(rows)
    if determinant(m) == 0:
        return
    gso = gram_schmidt(m)
    for i in range(len(m)):
        for j in range(i):
            assert dot(gso.bstar[i], gso.bstar[j]) == 0
        # b_i = b*_i + combination of earlier b*_j
        rec = gso.bstar[i]
        for j in range(i):
            rec = vsub(rec, tuple(-gso.mu[i][j] * x for x in gso.bstar[j]))
        assert rec == m[i]
    prod = Q(1)
    for ns in gso.norms_sq:
        prod *= ns
    assert prod == determinant(m) ** 2


def test_solve_in_span():
    rows = qmat([[1, 0, 1], [0, 1, 1]])
    assert solve_in_span(rows, (Q(2), Q(3), Q(5))) == (Q(2), Q(3))
    assert solve_in_span(rows, (Q(0), Q(0), Q(1))) is None


def test_int_matrix_inverse_unimodular_only():
    u = [[1, 2], [0, 1]]
    v = int_matrix_inverse(u)
    assert [list(r) for r in v] == [[1, -2], [0, 1]]


def test_unit_vector_and_norms():
    e = unit_vector(3, 1)
    assert norm_sq(e) == 1 and e[1] == 1
    g = gram_matrix(qmat([[1, 1], [0, 1]]))
    assert [list(map(int, r)) for r in g] == [[2, 1], [1, 1]]
