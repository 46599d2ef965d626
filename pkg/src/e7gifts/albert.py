"""The 27-dimensional Albert algebra H3(O): trace form T, cubic norm N,
adjoint (sharp) and Freudenthal cross product.

Elements are hermitian 3x3 matrices over an octonion algebra O,

    [[a1,       o3,       conj(o2)],
     [conj(o3), a2,       o1      ],
     [o2,       conj(o1), a3      ]]

stored as (a1, a2, a3, o1, o2, o3) in 3 + 8 + 8 + 8 = 27 coordinates.

The normalization is pinned by the adjoint identity
sharp(sharp(x)) = N(x) * x, which holds exactly for the formulas below
(exercised by the test suite on random points); the companion identity
T(sharp(x), y) = d/de N(x + e y) |_{e=0} fixes the T/N pairing.
"""

from gmpy2 import mpq

from .composition import CompositionAlgebra, division_octonions, split_octonions
from .forms import QuadraticForm, diagonalize_gram

DIM = 27


class AlbertElement:
    """Element of H3(O): diagonal scalars and three octonion entries."""

    __slots__ = ("alg", "diag", "octs")

    def __init__(self, alg, diag, octs):
        self.alg = alg
        self.diag = [mpq(d) for d in diag]
        self.octs = [list(map(mpq, o)) for o in octs]
        if len(self.diag) != 3 or len(self.octs) != 3 or \
                any(len(o) != 8 for o in self.octs):
            raise ValueError("bad Albert element shape")

    def coords(self):
        out = list(self.diag)
        for o in self.octs:
            out.extend(o)
        return out

    def _chk(self, other):
        if self.alg is not other.alg and self.alg.octonions != other.alg.octonions:
            raise ValueError("elements of different Albert algebras")

    def __add__(self, other):
        self._chk(other)
        return AlbertElement(self.alg,
                             [a + b for a, b in zip(self.diag, other.diag)],
                             [[a + b for a, b in zip(x, y)]
                              for x, y in zip(self.octs, other.octs)])

    def __sub__(self, other):
        self._chk(other)
        return AlbertElement(self.alg,
                             [a - b for a, b in zip(self.diag, other.diag)],
                             [[a - b for a, b in zip(x, y)]
                              for x, y in zip(self.octs, other.octs)])

    def __rmul__(self, c):
        c = mpq(c)
        return AlbertElement(self.alg, [c * a for a in self.diag],
                             [[c * a for a in o] for o in self.octs])

    def __neg__(self):
        return mpq(-1) * self

    def __eq__(self, other):
        return self.diag == other.diag and self.octs == other.octs

    def __repr__(self):
        return "AlbertElement(diag=%s)" % (list(map(str, self.diag)),)


class AlbertAlgebra:
    """H3(O) for an octonion algebra O, with cached T Gram matrix."""

    def __init__(self, octonions_alg):
        if not isinstance(octonions_alg, CompositionAlgebra) or octonions_alg.dim != 8:
            raise ValueError("need an octonion algebra")
        self.octonions = octonions_alg
        # T(x, x) = sum a_i^2 + 2 sum n(o_i); diagonal Gram in these coords
        diag = [mpq(1)] * 3
        for _ in range(3):
            diag.extend(2 * d for d in octonions_alg.norm_diag)
        self.t_gram_diag = diag

    def from_coords(self, v):
        if len(v) != DIM:
            raise ValueError("need 27 coordinates")
        return AlbertElement(self, v[:3], [v[3:11], v[11:19], v[19:27]])

    def zero(self):
        return AlbertElement(self, [0, 0, 0], [[0] * 8] * 3)

    def one(self):
        return AlbertElement(self, [1, 1, 1], [[0] * 8] * 3)

    def basis_element(self, k):
        v = [mpq(0)] * DIM
        v[k] = mpq(1)
        return self.from_coords(v)

    def trace_T(self, x, y):
        """The bilinear trace form T."""
        x._chk(y)
        return sum((d * a * b for d, a, b in
                    zip(self.t_gram_diag, x.coords(), y.coords())), mpq(0))

    def norm_N(self, x):
        """The cubic norm: N = a1 a2 a3 - sum a_i n(o_i) + t((o1 o2) o3)."""
        O = self.octonions
        a1, a2, a3 = x.diag
        o1, o2, o3 = x.octs
        n = a1 * a2 * a3
        n -= a1 * O.norm(o1) + a2 * O.norm(o2) + a3 * O.norm(o3)
        n += O.trace(O.multiply(O.multiply(o1, o2), o3))
        return n

    def sharp(self, x):
        """The quadratic adjoint, with sharp(sharp(x)) = N(x) x."""
        O = self.octonions
        a1, a2, a3 = x.diag
        o1, o2, o3 = x.octs
        diag = [a2 * a3 - O.norm(o1),
                a3 * a1 - O.norm(o2),
                a1 * a2 - O.norm(o3)]
        # off-diagonal entries conj(o_k) conj(o_j) - a_i o_i, (i,j,k) cyclic;
        # this order (not conj(o_j) conj(o_k)) is what makes the adjoint
        # identity hold with the N above
        octs = [[u - v for u, v in
                 zip(O.multiply(O.conj(oc), O.conj(ob)), [aa * w for w in oa])]
                for aa, oa, ob, oc in ((a1, o1, o2, o3),
                                       (a2, o2, o3, o1),
                                       (a3, o3, o1, o2))]
        return AlbertElement(self, diag, octs)

    def cross(self, x, y):
        """Freudenthal cross product, the linearization of sharp."""
        return self.sharp(x + y) - self.sharp(x) - self.sharp(y)

    def trace_form(self):
        """The 27-dim diagonal form congruent to the Gram matrix of T."""
        gram = [[mpq(0)] * DIM for _ in range(DIM)]
        for k, d in enumerate(self.t_gram_diag):
            gram[k][k] = d
        return diagonalize_gram(gram)

    def __repr__(self):
        return "AlbertAlgebra(O=%r)" % (self.octonions,)


def split_albert():
    """The split Albert algebra H3(split octonions)."""
    return AlbertAlgebra(split_octonions())


def division_albert():
    """H3(O) for O the octonion algebra (-1,-1,-1) (division over any
    real-closed field)."""
    return AlbertAlgebra(division_octonions())
