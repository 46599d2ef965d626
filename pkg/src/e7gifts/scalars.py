"""Exact scalar arithmetic: rationals and quadratic extensions F(sqrt(a)).

All arithmetic in this library is exact; floats are never used for
algebraic data.  Rationals are gmpy2.mpq (fast arbitrary-precision,
always reduced with positive denominator).
"""

from gmpy2 import mpq, mpz

QQ = mpq


def rat(p, q=1):
    """A reduced rational p/q."""
    return mpq(p, q)


def is_square(r):
    """True if the rational r is a square in Q."""
    r = mpq(r)
    if r < 0:
        return False
    num, den = mpz(r.numerator), mpz(r.denominator)
    return num.is_square() and den.is_square()


def rat_str(r):
    """Serialize a rational as 'p' or 'p/q' (reduced, q > 0)."""
    r = mpq(r)
    if r.denominator == 1:
        return str(r.numerator)
    return "%s/%s" % (r.numerator, r.denominator)


def parse_rat(s):
    """Parse 'p' or 'p/q' into an exact rational."""
    s = s.strip()
    if "/" in s:
        p, q = s.split("/")
        return mpq(int(p), int(q))
    return mpq(int(s))


class QuadExt:
    """An element u + v*sqrt(a) of K = F(sqrt(a)), a a non-square rational.

    Conjugation (the nontrivial F-automorphism) negates v.  The class fixes
    one square root of `a` symbolically; no embedding into R is chosen.
    """

    __slots__ = ("u", "v", "a")

    def __init__(self, u, v, a):
        self.u = mpq(u)
        self.v = mpq(v)
        self.a = mpq(a)

    def _check(self, other):
        if isinstance(other, QuadExt):
            if other.a != self.a:
                raise ValueError("mixed quadratic extensions: sqrt(%s) vs sqrt(%s)"
                                 % (self.a, other.a))
            return other
        return QuadExt(other, 0, self.a)

    def __add__(self, other):
        o = self._check(other)
        return QuadExt(self.u + o.u, self.v + o.v, self.a)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        return QuadExt(self.u - o.u, self.v - o.v, self.a)

    def __rsub__(self, other):
        o = self._check(other)
        return QuadExt(o.u - self.u, o.v - self.v, self.a)

    def __mul__(self, other):
        o = self._check(other)
        return QuadExt(self.u * o.u + self.a * self.v * o.v,
                       self.u * o.v + self.v * o.u, self.a)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self.u, -self.v, self.a)

    def inverse(self):
        n = self.u * self.u - self.a * self.v * self.v
        if n == 0:
            raise ZeroDivisionError("norm zero in F(sqrt(%s)); is a a square?" % self.a)
        return QuadExt(self.u / n, -self.v / n, self.a)

    def __truediv__(self, other):
        o = self._check(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._check(other)
        return o * self.inverse()

    def conj(self):
        """The nontrivial F-automorphism iota: sqrt(a) -> -sqrt(a)."""
        return QuadExt(self.u, -self.v, self.a)

    def norm(self):
        """Field norm N(x) = x * conj(x), a rational."""
        return self.u * self.u - self.a * self.v * self.v

    def trace(self):
        return 2 * self.u

    def is_rational(self):
        return self.v == 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.a == other.a and self.u == other.u and self.v == other.v
        return self.v == 0 and self.u == other

    def __hash__(self):
        return hash((self.u, self.v, self.a))

    def __bool__(self):
        return self.u != 0 or self.v != 0

    def __repr__(self):
        return "QuadExt(%s + %s*sqrt(%s))" % (self.u, self.v, self.a)


def sqrt_gen(a):
    """The generator sqrt(a) of F(sqrt(a))."""
    a = mpq(a)
    if is_square(a):
        raise ValueError("%s is a square; F(sqrt(a)) is not a field" % a)
    return QuadExt(0, 1, a)


def qx_conj(x):
    """Conjugate a scalar that may be rational or QuadExt."""
    if isinstance(x, QuadExt):
        return x.conj()
    return x
