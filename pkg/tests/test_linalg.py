import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from smashcoh.linalg import (Matrix, NotInSpanError, Subspace, contains,
                             express_in_span, image_basis, intersect,
                             kernel_basis, kernel_subspace, quotient_basis,
                             reduce_mod, rref, rref_rows,
                             rref_rows_with_transform, solve)
from smashcoh.rationals import ONE, ZERO, Rat

small_rat = st.integers(-6, 6).map(Rat)
rows6 = st.lists(st.lists(small_rat, min_size=6, max_size=6),
                 min_size=1, max_size=6)


def mat_vec(rows, v):
    return [sum((r[c] * v[c] for c in range(len(v)) if v[c]), ZERO)
            for r in rows]


@settings(max_examples=40, deadline=None)
@given(rows6)
def test_rref_is_reduced_echelon(rows):
    ech, pivots = rref_rows([list(r) for r in rows], 6)
    assert len(ech) == len(pivots)
    assert pivots == sorted(pivots)
    for r, p in zip(ech, pivots):
        assert r[p] == ONE
        assert all(not r[c] for c in range(p))
        # pivot column is cleared in every other row
        for r2 in ech:
            if r2 is not r:
                assert not r2[p]


@settings(max_examples=40, deadline=None)
@given(rows6)
def test_rref_preserves_row_space(rows):
    ech, _ = rref_rows([list(r) for r in rows], 6)
    s1 = Subspace.from_vectors(rows, 6)
    s2 = Subspace.from_vectors(ech, 6)
    assert s1 == s2


@settings(max_examples=40, deadline=None)
@given(rows6)
def test_transform_reproduces_echelon(rows):
    ech, pivots, t = rref_rows_with_transform(rows, 6)
    k = len(rows)
    for i in range(k):
        recon = [sum((t[i][j] * rows[j][c] for j in range(k)), ZERO)
                 for c in range(6)]
        assert recon == ech[i]


def test_rank_nullity_on_random_matrices():
    rng = random.Random(7)
    for _ in range(20):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        m = Matrix.from_rows(
            [[Rat(rng.randint(-4, 4)) for _ in range(c)] for _ in range(r)])
        _, pivots = rref(m)
        assert len(pivots) + kernel_basis(m).dim == c


def test_kernel_vectors_are_annihilated():
    rng = random.Random(3)
    for _ in range(15):
        rows = [[Rat(rng.randint(-3, 3)) for _ in range(5)] for _ in range(4)]
        ker = kernel_subspace(rows, 5)
        for v in ker.basis:
            assert all(x == ZERO for x in mat_vec(rows, v))


def test_reduce_mod_canonical_coset():
    rows = [[ONE, Rat(2), ZERO], [ZERO, ZERO, ONE]]
    sub = Subspace.from_vectors(rows, 3)
    v = [Rat(3), Rat(1), Rat(5)]
    r = reduce_mod(v, sub)
    # the reduction is zero at the pivots and differs from v by the subspace
    for p in sub.pivots:
        assert r[p] == ZERO
    diff = [a - b for a, b in zip(v, r)]
    assert contains(sub, diff)
    assert reduce_mod(r, sub) == r


def test_express_in_span_round_trip():
    rng = random.Random(11)
    for _ in range(15):
        basis_rows = [[Rat(rng.randint(-3, 3)) for _ in range(6)]
                      for _ in range(3)]
        sub = Subspace.from_vectors(basis_rows, 6)
        coeffs = [Rat(rng.randint(-3, 3)) for _ in range(sub.dim)]
        v = [sum((c * b[k] for c, b in zip(coeffs, sub.basis)), ZERO)
             for k in range(6)]
        got = express_in_span(v, sub)
        recon = [sum((c * b[k] for c, b in zip(got, sub.basis)), ZERO)
                 for k in range(6)]
        assert recon == v


def test_express_in_span_rejects_outside_vector():
    sub = Subspace.from_vectors([[ONE, ZERO, ZERO]], 3)
    with pytest.raises(NotInSpanError):
        express_in_span([ZERO, ONE, ZERO], sub)


def test_image_basis_spans_columns():
    m = Matrix.from_rows([[1, 2, 3], [0, 1, 1], [1, 3, 4]])
    img = image_basis(m)
    assert img.dim == 2
    rows = m.row_list()
    for j in range(3):
        col = [rows[i][j] for i in range(3)]
        assert contains(img, col)


def test_intersect_dimension_formula():
    rng = random.Random(5)
    for _ in range(10):
        s1 = Subspace.from_vectors(
            [[Rat(rng.randint(-2, 2)) for _ in range(5)] for _ in range(3)], 5)
        s2 = Subspace.from_vectors(
            [[Rat(rng.randint(-2, 2)) for _ in range(5)] for _ in range(3)], 5)
        both = Subspace.from_vectors(
            [list(v) for v in s1.basis + s2.basis], 5)
        meet = intersect(s1, s2)
        assert meet.dim == s1.dim + s2.dim - both.dim
        for v in meet.basis:
            assert contains(s1, v) and contains(s2, v)


def test_quotient_basis_complements_subspace():
    sub = Subspace.from_vectors([[ONE, ONE, ZERO, ZERO]], 4)
    reps = quotient_basis(sub, 4)
    assert len(reps) == 3
    total = Subspace.from_vectors([list(v) for v in sub.basis] + reps, 4)
    assert total.dim == 4


def test_solve_matches_express():
    rng = random.Random(2)
    for _ in range(15):
        rows = [[Rat(rng.randint(-3, 3)) for _ in range(4)] for _ in range(5)]
        x = [Rat(rng.randint(-3, 3)) for _ in range(4)]
        rhs = mat_vec(rows, x)
        got = solve(rows, rhs)
        assert got is not None
        assert mat_vec(rows, got) == rhs


def test_solve_inconsistent_returns_none():
    rows = [[ONE, ZERO], [ONE, ZERO]]
    assert solve(rows, [ONE, Rat(2)]) is None
