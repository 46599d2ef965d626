"""The 56-dimensional structurable algebra, its quadratic descent, the
quaternionic descent of the split gift, the symplectic-embedding
verifier, and real-closed Witt indices."""

import random

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from e7gifts import brown, descent, gift
from e7gifts.albert import division_albert, split_albert
from e7gifts.forms import signature_and_witt
from e7gifts.report import PASS, RunConfig

CFG = RunConfig(seed=0, samples=10)


def all_pass(checks):
    bad = [(c.name, c.status) for c in checks if c.status != PASS]
    assert not bad, bad


@pytest.mark.parametrize("J", [split_albert(), division_albert()])
def test_brown_algebra_checks(J):
    all_pass(brown.check_brown_algebra(J, CFG))


def test_brown_unit_and_skew():
    J = split_albert()
    one = brown.brown_unit(J)
    s0 = brown.brown_s0(J)
    assert brown.brown_mul(s0, s0) == one
    assert brown.brown_conj(s0) == -s0
    assert brown.brown_omega(s0) == -s0


def test_brown_not_associative():
    J = split_albert()
    rng = random.Random(3)
    hits = 0
    for _ in range(5):
        x, y, z = (brown.random_brown(J, rng) for _ in range(3))
        if brown.brown_mul(brown.brown_mul(x, y), z) != \
                brown.brown_mul(x, brown.brown_mul(y, z)):
            hits += 1
    assert hits > 0


@pytest.mark.parametrize("a", [-1, 2, mpq(-5, 3)])
def test_brown_descent_checks(a):
    J = split_albert()
    all_pass(brown.check_brown_descent(J, a, CFG))


def test_brown_descent_rejects_squares():
    with pytest.raises(ValueError):
        brown.brown_descend(split_albert(), mpq(9, 4))
    with pytest.raises(ValueError):
        brown.brown_descend(split_albert(), 0)


def test_descent_datum_invariants():
    all_pass(descent.DescentDatum(-1, -1).checks(CFG))
    all_pass(descent.DescentDatum(5, mpq(2, 3)).checks(CFG))
    with pytest.raises(ValueError):
        descent.DescentDatum(4, 1)
    with pytest.raises(ValueError):
        descent.DescentDatum(-1, 0)


def test_descended_gift_closure_and_axioms():
    g = descent.quatconst_build(-1, -1)
    all_pass(descent.descended_gift_checks(g, RunConfig(seed=1, samples=4)))
    all_pass(gift.check_gift_axioms(g, RunConfig(seed=2, samples=4)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symplem_random_parameters(n):
    rng = random.Random(100 + n)
    nonzero = lambda: mpq(rng.choice([1, -1, 2, -2, 3, 5, mpq(1, 2)]))
    a_coeffs = [nonzero() for _ in range(n)]
    c_coeffs = [nonzero() for _ in range(n)]
    h, checks = descent.symplem_verify(-1, -1, a_coeffs, c_coeffs, CFG)
    all_pass(checks)
    assert list(h.coeffs) == [c * a for c, a in zip(c_coeffs, a_coeffs)]


def test_symplem_other_quaternion_algebra():
    h, checks = descent.symplem_verify(-2, 3, [1, -1], [2, 1], CFG)
    all_pass(checks)


def test_hermitian_trace_form_examples():
    # <1> over the definite quaternions: the norm form, 4 positive squares
    h = descent.HermitianForm((-1, -1), (1,))
    q = descent.hermitian_trace_form(h)
    assert signature_and_witt(q) == (4, 0, 0)
    assert descent.witt_index_hermitian(h) == 0
    # a hyperbolic hermitian plane: four hyperbolic quadratic planes
    h2 = descent.HermitianForm((-1, -1), (1, -1))
    assert signature_and_witt(descent.hermitian_trace_form(h2)) == (4, 4, 4)
    assert descent.witt_index_hermitian(h2) == 2


def test_hermitian_witt_of_albert_block():
    coeffs = (mpq(1),) + split_albert().trace_form().coeffs
    h = descent.HermitianForm((-1, -1), coeffs)
    assert descent.witt_index_hermitian(h) == 24


@given(st.lists(st.sampled_from([1, -1, 2, -3, 5]), min_size=1, max_size=4),
       st.lists(st.sampled_from([1, -1, 2, -3, 5]), min_size=1, max_size=4))
@settings(max_examples=40, deadline=None)
def test_hermitian_witt_superadditive(c1, c2):
    q = (-1, -1)
    h1 = descent.HermitianForm(q, c1)
    h2 = descent.HermitianForm(q, c2)
    both = descent.HermitianForm(q, tuple(c1) + tuple(c2))
    assert descent.witt_index_hermitian(both) >= \
        descent.witt_index_hermitian(h1) + descent.witt_index_hermitian(h2)


def test_real_table():
    rows = descent.e7_real_table()
    assert [r["witt_index"] for r in rows] == [28, 28, 24, 0]
    assert [r["group_type"] for r in rows] == \
        ["E_{7,7}^0", "E_{7,3}^{28}", "E_{7,4}^9", "E_{7,0}^{133}"]
