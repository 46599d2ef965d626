"""Diagonal quadratic forms, skew-symmetric bilinear forms, signatures.

Real-closed-field semantics are signature arithmetic on Q-presented
diagonal forms: only the signs of the coefficients matter.
"""

from gmpy2 import mpq

from . import linalg
from .linalg import congruent_diagonal, inverse, mat_vec, transpose


class QuadraticForm:
    """A nondegenerate diagonal quadratic form <a1, ..., an>."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(mpq(c) for c in coeffs)
        if any(c == 0 for c in self.coeffs):
            raise ValueError("zero coefficient in quadratic form")

    @property
    def dim(self):
        return len(self.coeffs)

    def evaluate(self, v):
        if len(v) != self.dim:
            raise ValueError("dimension mismatch")
        return sum((c * x * x for c, x in zip(self.coeffs, v)), mpq(0))

    def perp(self, other):
        """Orthogonal sum."""
        return QuadraticForm(self.coeffs + other.coeffs)

    def scaled(self, c):
        return QuadraticForm(tuple(mpq(c) * a for a in self.coeffs))

    def __repr__(self):
        return "<%s>" % ", ".join(str(c) for c in self.coeffs)


def hyperbolic_planes(n):
    """n H = n * <1, -1>."""
    return QuadraticForm([1, -1] * n)


def signature_and_witt(q):
    """(positives, negatives, witt_index) of a diagonal form over a
    real-closed field; the Witt index is min(#pos, #neg)."""
    pos = sum(1 for c in q.coeffs if c > 0)
    neg = q.dim - pos
    return pos, neg, min(pos, neg)


def diagonalize_gram(gram):
    """Diagonal form congruent to a nondegenerate symmetric Gram matrix."""
    diag = congruent_diagonal(gram)
    if any(d == 0 for d in diag):
        raise ValueError("degenerate Gram matrix")
    return QuadraticForm(diag)


class SkewPairing:
    """A skew-symmetric bilinear form that may be degenerate.  Supports
    evaluation but not duality solves (gram_inv is None)."""

    __slots__ = ("gram", "gram_inv")

    def __init__(self, gram):
        gram = [list(map(mpq, row)) for row in gram]
        n = len(gram)
        for i in range(n):
            for j in range(n):
                if gram[i][j] != -gram[j][i]:
                    raise ValueError("Gram matrix not skew-symmetric")
        self.gram = gram
        self.gram_inv = None

    @property
    def dim(self):
        return len(self.gram)

    def apply(self, x, y):
        """b(x, y)."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("dimension mismatch")
        return linalg.dot(x, mat_vec(self.gram, y))

    def apply_basis(self, k, u):
        """b(e_k, u), using only row k of the Gram matrix."""
        s = mpq(0)
        for n, val in enumerate(self.gram[k]):
            if val:
                s += val * u[n]
        return s


class SkewForm(SkewPairing):
    """A nondegenerate skew-symmetric bilinear form, with a cached
    Gram-matrix inverse for duality solves."""

    __slots__ = ()

    def __init__(self, gram):
        super().__init__(gram)
        try:
            self.gram_inv = inverse(self.gram)
        except ValueError:
            raise ValueError("degenerate skew form")

    def solve_functional(self, functional):
        """The unique v with b(e_i, v) = functional[i] for all i."""
        if len(functional) != self.dim:
            raise ValueError("dimension mismatch")
        return mat_vec(self.gram_inv, functional)


def solve_against_form(b, functional):
    """The unique v with b(w, v) = functional(w) for all w, given the
    functional's coefficients on the basis."""
    return b.solve_functional(functional)


def standard_symplectic(n):
    """The standard symplectic form on an even-dimensional space:
    s(e_{2k}, e_{2k+1}) = 1."""
    if n % 2:
        raise ValueError("no nondegenerate skew form on odd dimension %d" % n)
    gram = [[mpq(0)] * n for _ in range(n)]
    for k in range(0, n, 2):
        gram[k][k + 1] = mpq(1)
        gram[k + 1][k] = mpq(-1)
    return SkewForm(gram)
