"""Composition algebras: norm multiplicativity, conjugation, the rank-2
identity, and the split/division dichotomy."""

import random

import pytest
from gmpy2 import mpq

from e7gifts.composition import (CompositionAlgebra, division_octonions,
                                 octonions, quaternions, split_octonions)


def rand_elt(alg, rng, lo=-6, hi=6):
    return [mpq(rng.randint(lo, hi)) for _ in range(alg.dim)]


@pytest.mark.parametrize("alg", [
    quaternions(-1, -1), quaternions(1, 1), quaternions(2, -3),
    split_octonions(), division_octonions(), octonions(2, -1, 3),
])
def test_norm_multiplicative(alg):
    rng = random.Random(17)
    for _ in range(30):
        x = rand_elt(alg, rng)
        y = rand_elt(alg, rng)
        assert alg.norm(alg.multiply(x, y)) == alg.norm(x) * alg.norm(y)


@pytest.mark.parametrize("alg", [quaternions(-1, -1), split_octonions()])
def test_conjugation_antiautomorphism(alg):
    rng = random.Random(5)
    for _ in range(30):
        x = rand_elt(alg, rng)
        y = rand_elt(alg, rng)
        assert alg.conj(alg.multiply(x, y)) == \
            alg.multiply(alg.conj(y), alg.conj(x))


@pytest.mark.parametrize("alg", [split_octonions(), division_octonions()])
def test_rank_two_identity(alg):
    # x^2 - t(x) x + n(x) = 0
    rng = random.Random(9)
    for _ in range(30):
        x = rand_elt(alg, rng)
        sq = alg.multiply(x, x)
        t, n = alg.trace(x), alg.norm(x)
        lhs = [a - t * b for a, b in zip(sq, x)]
        lhs[0] += n
        assert all(c == 0 for c in lhs)


def test_octonions_alternative_not_associative():
    alg = split_octonions()
    rng = random.Random(1)
    associative = True
    for _ in range(30):
        x = rand_elt(alg, rng)
        y = rand_elt(alg, rng)
        z = rand_elt(alg, rng)
        # alternative laws
        assert alg.multiply(x, alg.multiply(x, y)) == \
            alg.multiply(alg.multiply(x, x), y)
        assert alg.multiply(y, alg.multiply(x, x)) == \
            alg.multiply(alg.multiply(y, x), x)
        if alg.multiply(x, alg.multiply(y, z)) != \
                alg.multiply(alg.multiply(x, y), z):
            associative = False
    assert not associative


def test_quaternions_associative():
    alg = quaternions(2, -5)
    rng = random.Random(2)
    for _ in range(30):
        x, y, z = (rand_elt(alg, rng) for _ in range(3))
        assert alg.multiply(x, alg.multiply(y, z)) == \
            alg.multiply(alg.multiply(x, y), z)


def test_unit_squares_match_parameters():
    alg = quaternions(3, -7)
    i = alg.zero()
    i[1] = mpq(1)
    j = alg.zero()
    j[2] = mpq(1)
    assert alg.multiply(i, i)[0] == 3
    assert alg.multiply(j, j)[0] == -7
    # anticommutation
    ij = alg.multiply(i, j)
    ji = alg.multiply(j, i)
    assert ij == [-c for c in ji]


def test_division_dichotomy():
    assert division_octonions().is_division_over_real_closure()
    assert not split_octonions().is_division_over_real_closure()
    assert quaternions(-1, -1).is_division_over_real_closure()
    assert not quaternions(1, 1).is_division_over_real_closure()


def test_norm_form_signatures():
    pos, neg = 0, 0
    for c in split_octonions().norm_form().coeffs:
        pos, neg = pos + (c > 0), neg + (c < 0)
    assert (pos, neg) == (4, 4)
    assert all(c > 0 for c in division_octonions().norm_form().coeffs)


def test_bad_parameters_rejected():
    with pytest.raises(ValueError):
        CompositionAlgebra((1, 0))
    with pytest.raises(ValueError):
        CompositionAlgebra((1, 2, 3, 4))
