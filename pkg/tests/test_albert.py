"""Albert algebras: the adjoint identity, the T/N pairing, the cross
product, and trace-form signatures."""

import random

import pytest
from gmpy2 import mpq

from e7gifts.albert import (DIM, AlbertAlgebra, division_albert,
                            split_albert)
from e7gifts.forms import signature_and_witt


def rand_elt(J, rng, lo=-4, hi=4):
    return J.from_coords([mpq(rng.randint(lo, hi)) for _ in range(DIM)])


@pytest.mark.parametrize("J", [split_albert(), division_albert()])
def test_adjoint_identity(J):
    rng = random.Random(23)
    for _ in range(20):
        x = rand_elt(J, rng)
        assert J.sharp(J.sharp(x)) == J.norm_N(x) * x


@pytest.mark.parametrize("J", [split_albert(), division_albert()])
def test_trace_pairs_with_norm_derivative(J):
    # T(sharp(x), y) is the coefficient of e in N(x + e y), exactly
    rng = random.Random(29)
    for _ in range(20):
        x = rand_elt(J, rng)
        y = rand_elt(J, rng)
        # N(x + e y) = N(x) + e T(sharp x, y) + e^2 T(x, sharp y) + e^3 N(y)
        n3 = J.norm_N(y)
        c1 = (J.norm_N(x + y) - J.norm_N(x + mpq(-1) * y) - 2 * n3) / 2
        assert c1 == J.trace_T(J.sharp(x), y)


def test_cross_is_sharp_linearization():
    J = split_albert()
    rng = random.Random(31)
    x = rand_elt(J, rng)
    y = rand_elt(J, rng)
    assert J.cross(x, y) == J.sharp(x + y) - J.sharp(x) - J.sharp(y)
    assert J.cross(x, x) == 2 * J.sharp(x)
    assert J.cross(x, y) == J.cross(y, x)


def test_norm_of_unit_and_sharp_of_unit():
    J = split_albert()
    one = J.one()
    assert J.norm_N(one) == 1
    assert J.sharp(one) == one
    assert J.trace_T(one, one) == 3


def test_trace_form_signatures():
    assert signature_and_witt(split_albert().trace_form())[:2] == (15, 12)
    assert signature_and_witt(division_albert().trace_form())[:2] == (27, 0)


def test_needs_octonions():
    from e7gifts.composition import quaternions
    with pytest.raises(ValueError):
        AlbertAlgebra(quaternions(-1, -1))
