"""Exact scalar and linear-algebra layers: rationals, quadratic
extensions, rref-based solvers, congruence diagonalization, and the
modular evaluation helpers."""

import random

import numpy as np
import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from e7gifts import linalg, modular
from e7gifts.forms import (QuadraticForm, SkewForm, hyperbolic_planes,
                           signature_and_witt, standard_symplectic)
from e7gifts.scalars import (QuadExt, is_square, parse_rat, rat_str,
                             sqrt_gen)

rationals = st.fractions(min_value=-10**6, max_value=10**6,
                         max_denominator=10**4)


def test_rational_serialization_roundtrip():
    for r in (mpq(0), mpq(3), mpq(-7, 2), mpq(22, 7)):
        assert parse_rat(rat_str(r)) == r


def test_is_square():
    assert is_square(mpq(9, 4))
    assert not is_square(2)
    assert not is_square(-4)
    assert is_square(0)


@given(u1=rationals, v1=rationals, u2=rationals, v2=rationals)
@settings(max_examples=50, deadline=None)
def test_quadext_field_arithmetic(u1, v1, u2, v2):
    a = mpq(5)
    x = QuadExt(u1, v1, a)
    y = QuadExt(u2, v2, a)
    assert (x + y) - y == x
    assert x * y == y * x
    assert (x * y).conj() == x.conj() * y.conj()
    assert x.norm() == (x * x.conj()).u
    if y:
        assert (x / y) * y == x


def test_quadext_rejects_square_generator():
    with pytest.raises(ValueError):
        sqrt_gen(mpq(9, 4))


def test_quadext_mixed_extensions_rejected():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 2) + QuadExt(1, 1, 3)


def test_rref_rank_inverse():
    rng = random.Random(0)
    for _ in range(10):
        n = rng.randint(1, 6)
        m = [[mpq(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        r = linalg.rank_exact(m)
        if r == n:
            inv = linalg.inverse(m)
            assert linalg.mat_eq(linalg.mat_mul(m, inv),
                                 linalg.identity(n))
        else:
            with pytest.raises(ValueError):
                linalg.inverse(m)


def test_solve_matches_inverse():
    m = [[mpq(2), mpq(1)], [mpq(1), mpq(1)]]
    rhs = [mpq(3), mpq(5)]
    x = linalg.solve(m, rhs)
    assert linalg.mat_vec(m, x) == rhs


def test_span_rref_dimension():
    vecs = [[1, 0, 1], [0, 1, 1], [1, 1, 2], [2, 2, 4]]
    span = linalg.span_rref([[mpq(c) for c in v] for v in vecs])
    assert span.dim == 2
    assert span.contains([mpq(3), mpq(3), mpq(6)])
    assert not span.contains([mpq(1), mpq(0), mpq(0)])


def test_congruent_diagonal_is_congruent():
    rng = random.Random(3)
    for _ in range(5):
        n = 4
        a = [[mpq(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        gram = linalg.mat_add(a, linalg.transpose(a))
        diag = linalg.congruent_diagonal(gram)
        q = QuadraticForm([d for d in diag if d != 0]) if any(diag) else None
        # signature is a congruence invariant; cross-check through numpy
        eig = np.linalg.eigvalsh(np.array(gram, dtype=float))
        pos = sum(1 for e in eig if e > 1e-9)
        neg = sum(1 for e in eig if e < -1e-9)
        assert sum(1 for d in diag if d > 0) == pos
        assert sum(1 for d in diag if d < 0) == neg


def test_polarize_quartic_recovers_diagonal():
    def Q(x):
        return x[0] ** 4 + 3 * x[0] * x[0] * x[1] * x[1]

    x = [mpq(2), mpq(-1)]
    y = [mpq(1), mpq(3)]
    assert linalg.polarize_quartic(Q, x, x, x, x) == Q(x)
    # symmetry of the multilinear lift
    assert linalg.polarize_quartic(Q, x, y, x, y) == \
        linalg.polarize_quartic(Q, y, x, y, x)


def test_signature_and_witt():
    q = hyperbolic_planes(3).perp(QuadraticForm([1, 1]))
    assert signature_and_witt(q) == (5, 3, 3)


def test_standard_symplectic_nondegenerate():
    s = standard_symplectic(6)
    assert s.apply(linalg.unit(6, 0), linalg.unit(6, 1)) == 1
    v = s.solve_functional([mpq(1)] * 6)
    assert [s.apply_basis(k, v) for k in range(6)] == [mpq(1)] * 6
    with pytest.raises(ValueError):
        standard_symplectic(5)


def test_skew_form_rejects_non_skew():
    with pytest.raises(ValueError):
        SkewForm([[mpq(0), mpq(1)], [mpq(1), mpq(0)]])


# -- modular layer ---------------------------------------------------------

def test_blas_primes_in_range_and_prime():
    import sympy
    rng = random.Random(11)
    ps = modular.blas_primes(5, rng)
    for p in ps:
        assert modular.BLAS_PRIME_LO <= p < modular.BLAS_PRIME_HI
        assert sympy.isprime(p)
        assert 56 * p * p < 2 ** 53


def test_reduce_rational_bad_prime():
    p = modular.blas_primes(1, random.Random(2))[0]
    assert modular.reduce_rational(mpq(1, 3), p) == pow(3, -1, p)
    with pytest.raises(modular.BadPrime):
        modular.reduce_rational(mpq(1, p), p)


def test_matmul_mod_matches_exact():
    rng = random.Random(5)
    p = modular.blas_primes(1, rng)[0]
    a = [[mpq(rng.randint(-50, 50)) for _ in range(7)] for _ in range(5)]
    b = [[mpq(rng.randint(-50, 50)) for _ in range(4)] for _ in range(7)]
    exact = linalg.mat_mul(a, b)
    am = modular.to_mod_np(a, p)
    bm = modular.to_mod_np(b, p)
    cm = modular.matmul_mod(am, bm, p)
    for i in range(5):
        for j in range(4):
            assert int(cm[i][j]) == int(exact[i][j]) % p


def test_rank_mod_p_matches_exact_rank():
    rng = random.Random(7)
    p = modular.blas_primes(1, rng)[0]
    m = [[mpq(rng.randint(-3, 3)) for _ in range(8)] for _ in range(5)]
    m.append(linalg.vadd(m[0], m[1]))
    exact = linalg.rank_exact(m)
    assert modular.rank_mod_p_np(modular.to_mod_np(m, p), p) == exact
