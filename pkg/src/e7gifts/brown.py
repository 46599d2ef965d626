"""The 56-dimensional structurable algebra of 2x2 matrices with scalar
diagonal and Albert off-diagonal entries, and its quadratic descent.

Elements are (alpha, j; j', beta) with alpha, beta in F and j, j' in
H3(O), multiplied by

    (alpha1 alpha2 + T(j1, j2'),  alpha1 j2 + beta2 j1 + j1' x j2';
     alpha2 j1' + beta1 j2' + j1 x j2,  beta1 beta2 + T(j2, j1'))

where T is the trace form and x the Freudenthal cross product.  The
algebra is unital but neither associative nor alternative; the exchange
involution swaps alpha and beta and fixes j, j', and its skew space is
the line through s0 = (1, 0; 0, -1).

The coordinate swap omega: (alpha, j; j', beta) -> (beta, j'; j, alpha)
is an algebra automorphism commuting with the involution.  For a
quadratic field K = F(sqrt(a)), the fixed space of omega (x) conj on the
scalar extension to K is a 56-dimensional F-form of the algebra whose
skew line is spanned by sqrt(a) s0, an element squaring to a; this is
the descended algebra attached to (H3(O), K).
"""

import random

from gmpy2 import mpq

from . import report as rep
from .albert import DIM as ALBERT_DIM
from .albert import AlbertAlgebra
from .scalars import is_square

DIM = 2 + 2 * ALBERT_DIM


class BrownElement:
    """(alpha, j; j', beta) with scalar corners and Albert entries."""

    __slots__ = ("J", "alpha", "j", "jp", "beta")

    def __init__(self, J, alpha, j, jp, beta):
        if not isinstance(J, AlbertAlgebra):
            raise ValueError("need an Albert algebra")
        self.J = J
        self.alpha = mpq(alpha)
        self.j = j
        self.jp = jp
        self.beta = mpq(beta)

    def coords(self):
        """56 coordinates in the order (alpha, j, j', beta)."""
        return [self.alpha] + self.j.coords() + self.jp.coords() + [self.beta]

    def _chk(self, other):
        if self.J.octonions != other.J.octonions:
            raise ValueError("elements of different algebras")

    def __add__(self, other):
        self._chk(other)
        return BrownElement(self.J, self.alpha + other.alpha,
                            self.j + other.j, self.jp + other.jp,
                            self.beta + other.beta)

    def __sub__(self, other):
        self._chk(other)
        return BrownElement(self.J, self.alpha - other.alpha,
                            self.j - other.j, self.jp - other.jp,
                            self.beta - other.beta)

    def __rmul__(self, c):
        c = mpq(c)
        return BrownElement(self.J, c * self.alpha, c * self.j,
                            c * self.jp, c * self.beta)

    def __neg__(self):
        return mpq(-1) * self

    def __eq__(self, other):
        return (self.alpha == other.alpha and self.beta == other.beta
                and self.j == other.j and self.jp == other.jp)

    def __repr__(self):
        return "BrownElement(alpha=%s, beta=%s)" % (self.alpha, self.beta)


def brown_zero(J):
    return BrownElement(J, 0, J.zero(), J.zero(), 0)


def brown_unit(J):
    return BrownElement(J, 1, J.zero(), J.zero(), 1)


def brown_from_coords(J, v):
    if len(v) != DIM:
        raise ValueError("need 56 coordinates")
    return BrownElement(J, v[0], J.from_coords(v[1:28]),
                        J.from_coords(v[28:55]), v[55])


def brown_mul(x, y):
    """The structurable product."""
    x._chk(y)
    J = x.J
    alpha = x.alpha * y.alpha + J.trace_T(x.j, y.jp)
    j = x.alpha * y.j + y.beta * x.j + J.cross(x.jp, y.jp)
    jp = y.alpha * x.jp + x.beta * y.jp + J.cross(x.j, y.j)
    beta = x.beta * y.beta + J.trace_T(y.j, x.jp)
    return BrownElement(J, alpha, j, jp, beta)


def brown_conj(x):
    """The exchange involution: swap the diagonal scalars.  F-linear of
    order 2 with a one-dimensional skew space; it is not claimed to be an
    anti-automorphism of the (nonassociative) product."""
    return BrownElement(x.J, x.beta, x.j, x.jp, x.alpha)


def brown_omega(x):
    """The coordinate swap (alpha, j; j', beta) -> (beta, j'; j, alpha),
    an algebra automorphism commuting with the involution."""
    return BrownElement(x.J, x.beta, x.jp, x.j, x.alpha)


def brown_s0(J):
    """The spanning skew element (1, 0; 0, -1); its square is the unit."""
    return BrownElement(J, 1, J.zero(), J.zero(), -1)


def random_brown(J, rng, lo=-3, hi=3):
    return brown_from_coords(
        J, [mpq(rng.randint(lo, hi)) for _ in range(DIM)])


# -- quadratic descent -----------------------------------------------------
#
# The scalar extension to K = F(sqrt(a)) is handled with rational pairs:
# (x, y) stands for x + sqrt(a) y with x, y rational Brown elements, so
# all arithmetic below stays in exact rational coordinates.

def bx_add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def bx_sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def bx_mul(p, q, a):
    x1, x2 = p
    y1, y2 = q
    return (brown_mul(x1, y1) + mpq(a) * brown_mul(x2, y2),
            brown_mul(x1, y2) + brown_mul(x2, y1))


def bx_conj(p):
    """The involution, extended K-linearly."""
    return (brown_conj(p[0]), brown_conj(p[1]))


def bx_iota(p):
    """The Galois action sqrt(a) -> -sqrt(a) on the scalar extension."""
    return (p[0], -p[1])


def bx_omega_iota(p):
    """The semilinear automorphism whose fixed space is the descent."""
    return (brown_omega(p[0]), -brown_omega(p[1]))


class BrownDescent:
    """The F-form of the Brown algebra attached to (J, F(sqrt(a))): the
    fixed space of omega (x) iota inside the scalar extension to
    K = F(sqrt(a)), with an explicit 56-element F-basis.

    A pair (x, y) is fixed iff x is omega-fixed and y is omega-skew, so
    the basis splits as 28 omega-fixed rational elements and sqrt(a)
    times 28 omega-skew ones.
    """

    def __init__(self, J, a):
        a = mpq(a)
        if a == 0 or is_square(a):
            raise ValueError("descent needs a nonsquare field parameter,"
                             " got %s" % a)
        self.J = J
        self.a = a
        z = brown_zero(J)
        basis = []
        # omega-fixed: alpha = beta and j = j'
        basis.append((brown_unit(J), z))
        for k in range(ALBERT_DIM):
            e = J.basis_element(k)
            basis.append((BrownElement(J, 0, e, e, 0), z))
        # sqrt(a) * (omega-skew): alpha = -beta and j' = -j
        basis.append((z, brown_s0(J)))
        for k in range(ALBERT_DIM):
            e = J.basis_element(k)
            basis.append((z, BrownElement(J, 0, e, -e, 0)))
        self.basis = basis

    def unit(self):
        return self.basis[0]

    def s0(self):
        """sqrt(a) (1, 0; 0, -1): spans the skew space and squares to
        a times the unit, so F[s0] is a copy of F(sqrt(a))."""
        return self.basis[DIM // 2]

    def mul(self, p, q):
        return bx_mul(p, q, self.a)

    def contains(self, p):
        """Membership in the fixed space of omega (x) iota."""
        return bx_omega_iota(p) == p

    def coefficients(self, p):
        """Exact F-coordinates of a fixed-space element on the basis.
        Raises if p is not in the fixed space."""
        x, y = p
        if not self.contains(p):
            raise ValueError("element is not in the descended algebra")
        coeffs = [x.alpha] + x.j.coords()
        coeffs += [y.alpha] + y.j.coords()
        return coeffs

    def from_coefficients(self, coeffs):
        out = (brown_zero(self.J), brown_zero(self.J))
        for c, b in zip(coeffs, self.basis):
            if c:
                out = bx_add(out, (mpq(c) * b[0], mpq(c) * b[1]))
        return out

    def random_element(self, rng, lo=-3, hi=3):
        return self.from_coefficients(
            [rng.randint(lo, hi) for _ in range(DIM)])


def brown_descend(J, a):
    """The descended 56-dimensional F-algebra for K = F(sqrt(a))."""
    return BrownDescent(J, a)


# -- check suites ----------------------------------------------------------

def check_brown_algebra(J, config=None):
    """Unit, involution and automorphism properties of the 56-dimensional
    algebra, on random rational points."""
    cfg = config or rep.RunConfig()
    rng = random.Random(cfg.seed)
    samples = min(cfg.samples, 25)
    one = brown_unit(J)
    s0 = brown_s0(J)
    checks = []

    bad = None
    for _ in range(samples):
        x = random_brown(J, rng)
        if brown_mul(one, x) != x or brown_mul(x, one) != x:
            bad = x
            break
    if bad is None:
        checks.append(rep.passed("unit-two-sided", {"samples": samples}))
    else:
        checks.append(rep.failed("unit-two-sided",
                                 {"element": bad.coords()}))

    # the involution is linear of order 2 by construction; its skew space
    # is the line through s0 because conj fixes j and j' entrywise
    probe = random_brown(J, rng)
    assert brown_conj(brown_conj(probe)) == probe
    skew_ok = brown_conj(s0) == -s0
    checks.append(rep.passed("involution-skew-line",
                             {"skew_dim": 1, "spanned_by": "s0"})
                  if skew_ok else
                  rep.failed("involution-skew-line", {"s0": s0.coords()}))

    bad = None
    for _ in range(samples):
        x = random_brown(J, rng)
        y = random_brown(J, rng)
        if brown_omega(brown_mul(x, y)) != brown_mul(brown_omega(x),
                                                     brown_omega(y)):
            bad = (x, y)
            break
        if brown_omega(brown_conj(x)) != brown_conj(brown_omega(x)):
            bad = (x, x)
            break
    if bad is None:
        checks.append(rep.passed("omega-automorphism",
                                 {"samples": samples,
                                  "commutes_with_involution": True}))
    else:
        checks.append(rep.failed("omega-automorphism",
                                 {"x": bad[0].coords(),
                                  "y": bad[1].coords()}))
    return checks


def check_brown_descent(J, a, config=None):
    """Fixed-space dimension, multiplicative closure (sampled) and the
    skew generator of the descended algebra."""
    cfg = config or rep.RunConfig()
    rng = random.Random(cfg.seed ^ 0x5B)
    samples = min(cfg.samples, 15)
    D = brown_descend(J, a)
    checks = []

    dim_ok = len(D.basis) == DIM and all(D.contains(b) for b in D.basis)
    checks.append(rep.passed("descent-dimension", {"dim": DIM})
                  if dim_ok else rep.failed("descent-dimension", {}))

    bad = None
    for _ in range(samples):
        x = D.random_element(rng)
        y = D.random_element(rng)
        p = D.mul(x, y)
        if not D.contains(p):
            bad = p
            break
        if D.from_coefficients(D.coefficients(p)) != p:
            bad = p
            break
    if bad is None:
        checks.append(rep.passed("descent-closure", {"samples": samples}))
    else:
        checks.append(rep.failed(
            "descent-closure",
            {"product": [bad[0].coords(), bad[1].coords()]}))

    s0 = D.s0()
    sq = D.mul(s0, s0)
    unit_scaled = (mpq(a) * D.unit()[0], mpq(a) * D.unit()[1])
    s0_ok = (D.contains(s0) and bx_conj(s0) == (-s0[0], -s0[1])
             and sq == unit_scaled)
    checks.append(rep.passed("descent-skew-generator",
                             {"square": "a * unit"})
                  if s0_ok else
                  rep.failed("descent-skew-generator",
                             {"square": [sq[0].coords(), sq[1].coords()]}))
    return checks
