"""Composition algebras (quaternions, octonions) via Cayley-Dickson doubling.

The doubled basis is ordered recursively, so a quaternion algebra (a, b)
has basis (1, i, j, ij) with i^2 = a, j^2 = b, ij = -ji, and an octonion
algebra (a, b, c) appends one more doubling step with parameter c.

Basis units multiply as e_r e_s = lam(r,s) e_(r xor s); the coefficient
table is precomputed once per algebra from the recursive doubling product

    (x1, x2)(y1, y2) = (x1 y1 + mu conj(y2) x2,  y2 x1 + x2 conj(y1)).
"""

from gmpy2 import mpq

from .forms import QuadraticForm, diagonalize_gram


def _cd_mul(x, y, params):
    """Recursive Cayley-Dickson product on nested pair trees."""
    if not params:
        return x * y
    mu = params[-1]
    rest = params[:-1]
    x1, x2 = x
    y1, y2 = y
    return (_cd_add(_cd_mul(x1, y1, rest),
                    _cd_scale(mu, _cd_mul(_cd_conj(y2, rest), x2, rest), rest)),
            _cd_add(_cd_mul(y2, x1, rest),
                    _cd_mul(x2, _cd_conj(y1, rest), rest)))


def _cd_add(x, y):
    if isinstance(x, tuple):
        return (_cd_add(x[0], y[0]), _cd_add(x[1], y[1]))
    return x + y


def _cd_scale(c, x, params):
    if isinstance(x, tuple):
        return (_cd_scale(c, x[0], params[:-1]), _cd_scale(c, x[1], params[:-1]))
    return c * x


def _cd_conj(x, params):
    if not params:
        return x
    return (_cd_conj(x[0], params[:-1]), _cd_neg(x[1]))


def _cd_neg(x):
    if isinstance(x, tuple):
        return (_cd_neg(x[0]), _cd_neg(x[1]))
    return -x


def _unit_tree(k, depth):
    """Nested-pair tree for the k-th basis unit at the given doubling depth."""
    if depth == 0:
        return mpq(1) if k == 0 else mpq(0)
    half = 1 << (depth - 1)
    if k < half:
        return (_unit_tree(k, depth - 1), _unit_tree(-1, depth - 1))
    return (_unit_tree(-1, depth - 1), _unit_tree(k - half, depth - 1))


def _flatten(x):
    if isinstance(x, tuple):
        return _flatten(x[0]) + _flatten(x[1])
    return [x]


class CompositionAlgebra:
    """A quaternion or octonion algebra over Q with doubling parameters
    (a, b) or (a, b, c); also covers dim-2 algebras with one parameter."""

    def __init__(self, params):
        self.params = tuple(mpq(p) for p in params)
        if not 1 <= len(self.params) <= 3 or any(p == 0 for p in self.params):
            raise ValueError("need 1-3 nonzero doubling parameters")
        self.dim = 1 << len(self.params)
        depth = len(self.params)
        # unit product table: table[r][s] = (coefficient, index r^s)
        self._coef = [[None] * self.dim for _ in range(self.dim)]
        units = [_unit_tree(k, depth) for k in range(self.dim)]
        for r in range(self.dim):
            for s in range(self.dim):
                prod = _flatten(_cd_mul(units[r], units[s], self.params))
                tgt = r ^ s
                assert all(c == 0 for k, c in enumerate(prod) if k != tgt)
                self._coef[r][s] = prod[tgt]
        # n(sum x_k e_k) = sum norm_diag[k] x_k^2 (diagonal in the CD basis)
        diag = [mpq(1)]
        for p in self.params:
            diag = diag + [-p * d for d in diag]
        self.norm_diag = diag

    def zero(self):
        return [mpq(0)] * self.dim

    def one(self):
        return [mpq(1)] + [mpq(0)] * (self.dim - 1)

    def multiply(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("element dimension mismatch")
        out = [mpq(0)] * self.dim
        coef = self._coef
        for r, xr in enumerate(x):
            if xr == 0:
                continue
            row = coef[r]
            for s, ys in enumerate(y):
                if ys == 0:
                    continue
                out[r ^ s] += xr * ys * row[s]
        return out

    def conj(self, x):
        return [x[0]] + [-c for c in x[1:]]

    def trace(self, x):
        """x + conj(x) as a scalar multiple of 1."""
        return 2 * x[0]

    def norm(self, x):
        return sum((d * c * c for d, c in zip(self.norm_diag, x)), mpq(0))

    def norm_bilinear(self, x, y):
        """nb(x, y) with nb(x, x) = n(x)."""
        return sum((d * a * b for d, a, b in zip(self.norm_diag, x, y)), mpq(0))

    def norm_form(self):
        """The norm as a diagonal quadratic form; diagonalizes the Gram
        matrix (a congruence-invariant route, though the CD basis is
        already orthogonal)."""
        gram = [[mpq(0)] * self.dim for _ in range(self.dim)]
        for k, d in enumerate(self.norm_diag):
            gram[k][k] = d
        return diagonalize_gram(gram)

    def element(self, coords):
        return CompositionElement(self, coords)

    def basis_element(self, k):
        v = self.zero()
        v[k] = mpq(1)
        return CompositionElement(self, v)

    def is_division_over_real_closure(self):
        """Definite norm form => division algebra over any real-closed field."""
        return all(d > 0 for d in self.norm_diag)

    def __eq__(self, other):
        return isinstance(other, CompositionAlgebra) and self.params == other.params

    def __repr__(self):
        return "CompositionAlgebra%s" % (self.params,)


class CompositionElement:
    """An element of a composition algebra, coordinates in the CD basis."""

    __slots__ = ("alg", "coords")

    def __init__(self, alg, coords):
        coords = [mpq(c) for c in coords]
        if len(coords) != alg.dim:
            raise ValueError("coordinate dimension mismatch")
        self.alg = alg
        self.coords = coords

    def _chk(self, other):
        if self.alg != other.alg:
            raise ValueError("elements of different composition algebras")

    def __mul__(self, other):
        self._chk(other)
        return CompositionElement(self.alg, self.alg.multiply(self.coords, other.coords))

    def __add__(self, other):
        self._chk(other)
        return CompositionElement(self.alg, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._chk(other)
        return CompositionElement(self.alg, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return CompositionElement(self.alg, [-a for a in self.coords])

    def __rmul__(self, c):
        return CompositionElement(self.alg, [mpq(c) * a for a in self.coords])

    def conj(self):
        return CompositionElement(self.alg, self.alg.conj(self.coords))

    def trace(self):
        return self.alg.trace(self.coords)

    def norm(self):
        return self.alg.norm(self.coords)

    def __eq__(self, other):
        return self.alg == other.alg and self.coords == other.coords

    def __repr__(self):
        return "CompositionElement(%s)" % (list(map(str, self.coords)),)


def conj_trace(x):
    """(conj(x), trace(x)) for a composition element."""
    return x.conj(), x.trace()


def quaternions(a, b):
    return CompositionAlgebra((a, b))


def octonions(a, b, c):
    return CompositionAlgebra((a, b, c))


def split_octonions():
    return CompositionAlgebra((1, 1, 1))


def division_octonions():
    return CompositionAlgebra((-1, -1, -1))
