"""Dense exact linear algebra over the rationals and quadratic extensions.

Vectors are lists, matrices lists of rows.  Everything is exact; entries are
gmpy2.mpq or QuadExt.  The Vec/Mat wrappers add dimension checking for the
public surface; hot loops inside the library work on the raw lists.
"""

import random

from gmpy2 import mpq

from .scalars import QuadExt


def zeros(n):
    return [mpq(0)] * n


def unit(n, i):
    v = [mpq(0)] * n
    v[i] = mpq(1)
    return v


def vadd(x, y):
    return [a + b for a, b in zip(x, y)]


def vsub(x, y):
    return [a - b for a, b in zip(x, y)]


def vscale(c, x):
    return [c * a for a in x]


def dot(x, y):
    s = x[0] * y[0]
    for a, b in zip(x[1:], y[1:]):
        s += a * b
    return s


def mat_vec(m, x):
    return [dot(row, x) for row in m]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[dot(row, col) for col in bt] for row in a]


def mat_add(a, b):
    return [vadd(r, s) for r, s in zip(a, b)]


def mat_sub(a, b):
    return [vsub(r, s) for r, s in zip(a, b)]


def mat_scale(c, a):
    return [vscale(c, r) for r in a]


def transpose(a):
    return [list(r) for r in zip(*a)]


def identity(n):
    return [unit(n, i) for i in range(n)]


def trace(a):
    s = a[0][0]
    for i in range(1, len(a)):
        s += a[i][i]
    return s


def mat_eq(a, b):
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def _is_zero(x):
    return not x if isinstance(x, QuadExt) else x == 0


def rref(m):
    """Row-reduce a copy of m in place; returns (rref_rows, pivot_cols)."""
    m = [list(r) for r in m]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if not _is_zero(m[i][c])), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c] if not isinstance(m[r][c], QuadExt) else m[r][c].inverse()
        m[r] = [inv * x for x in m[r]]
        for i in range(nrows):
            if i != r and not _is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank_exact(m):
    if not m:
        return 0
    _, pivots = rref(m)
    return len(pivots)


def inverse(m):
    """Exact inverse of a square matrix (Gauss-Jordan)."""
    n = len(m)
    aug = [list(r) + unit(n, i) for i, r in enumerate(m)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def solve(m, rhs):
    """Solve m x = rhs exactly (m square invertible)."""
    n = len(m)
    aug = [list(r) + [b] for r, b in zip(m, rhs)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular matrix")
    return [row[n] for row in red]


def span_rref(vectors):
    """An incremental RREF basis for a span; supports membership tests.

    Returns an object with .add(v) -> bool (True if v enlarged the span),
    .contains(v), .dim.
    """
    return _SpanBasis(vectors)


class _SpanBasis:
    def __init__(self, vectors=()):
        self.rows = []       # reduced rows
        self.pivots = []     # pivot column per row
        for v in vectors:
            self.add(v)

    def _reduce(self, v):
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            if not _is_zero(v[p]):
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, v):
        v = self._reduce(v)
        p = next((i for i, x in enumerate(v) if not _is_zero(x)), None)
        if p is None:
            return False
        inv = 1 / v[p] if not isinstance(v[p], QuadExt) else v[p].inverse()
        v = [inv * x for x in v]
        for i, row in enumerate(self.rows):
            if not _is_zero(row[p]):
                f = row[p]
                self.rows[i] = [x - f * y for x, y in zip(row, v)]
        self.rows.append(v)
        self.pivots.append(p)
        return True

    def contains(self, v):
        v = self._reduce(v)
        return all(_is_zero(x) for x in v)

    @property
    def dim(self):
        return len(self.rows)


def congruent_diagonal(gram):
    """Diagonalize a symmetric matrix by congruence: returns diag entries d
    with P gram P^T = diag(d) for some invertible P (P not returned).

    Symmetric Gaussian elimination; handles zero diagonal via row/col moves.
    """
    m = [list(r) for r in gram]
    n = len(m)
    diag = []
    idx = list(range(n))
    for k in range(n):
        # find a nonzero diagonal entry; if none, fix one up with a row+col add
        piv = next((i for i in range(k, n) if m[i][i] != 0), None)
        if piv is None:
            pair = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if m[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                diag.extend([mpq(0)] * (n - k))
                break
            i, j = pair
            # row_i += row_j ; col_i += col_j  => diagonal entry 2*m[i][j]
            for c in range(n):
                m[i][c] = m[i][c] + m[j][c]
            for r in range(n):
                m[r][i] = m[r][i] + m[r][j]
            piv = i
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            for r in range(n):
                m[r][k], m[r][piv] = m[r][piv], m[r][k]
        d = m[k][k]
        diag.append(d)
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] / d
                for c in range(k, n):
                    m[i][c] = m[i][c] - f * m[k][c]
                for r in range(k, n):
                    m[r][i] = m[r][i] - f * m[r][k]
    return diag


def polarize_quartic(Q, x1, x2, x3, x4):
    """The symmetric 4-linear lift of a homogeneous quartic Q, by
    inclusion-exclusion over nonempty subsets of the four arguments:

        q(x1,x2,x3,x4) = (1/24) sum_S (-1)^(4-|S|) Q(sum_{i in S} x_i).

    Satisfies q(x,x,x,x) = Q(x) and full S4-symmetry.
    """
    n = len(x1)
    vecs = (x1, x2, x3, x4)
    if any(len(v) != n for v in vecs):
        raise ValueError("dimension mismatch in polarize_quartic")
    total = mpq(0)
    for mask in range(1, 16):
        s = zeros(n)
        bits = 0
        for i in range(4):
            if mask >> i & 1:
                s = vadd(s, vecs[i])
                bits += 1
        term = Q(s)
        total += term if bits % 2 == 0 else -term
    return total / 24


class Vec:
    """Immutable exact vector with dimension checking."""

    __slots__ = ("data",)

    def __init__(self, entries):
        self.data = tuple(mpq(e) if not isinstance(e, QuadExt) else e
                          for e in entries)

    def __len__(self):
        return len(self.data)

    def __getitem__(self, i):
        return self.data[i]

    def __iter__(self):
        return iter(self.data)

    def _chk(self, other):
        if len(other) != len(self):
            raise ValueError("dimension mismatch: %d vs %d" % (len(self), len(other)))

    def __add__(self, other):
        self._chk(other)
        return Vec(vadd(self.data, list(other)))

    def __sub__(self, other):
        self._chk(other)
        return Vec(vsub(self.data, list(other)))

    def __rmul__(self, c):
        return Vec(vscale(mpq(c), self.data))

    def __eq__(self, other):
        return len(self) == len(other) and all(a == b for a, b in zip(self, other))

    def __repr__(self):
        return "Vec(%s)" % (list(map(str, self.data)),)


class Mat:
    """Immutable exact matrix with dimension checking."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(tuple(mpq(e) if not isinstance(e, QuadExt) else e
                                for e in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def tolists(self):
        return [list(r) for r in self.rows]

    def __matmul__(self, other):
        if isinstance(other, Vec):
            if self.ncols != len(other):
                raise ValueError("dimension mismatch")
            return Vec(mat_vec(self.tolists(), list(other)))
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        return Mat(mat_mul(self.tolists(), other.tolists()))

    def __add__(self, other):
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")
        return Mat(mat_add(self.tolists(), other.tolists()))

    def __eq__(self, other):
        return self.rows == other.rows

    def transpose(self):
        return Mat(transpose(self.tolists()))

    def trace(self):
        return trace(self.rows)

    def rank(self):
        return rank_exact(self.tolists())

    def inverse(self):
        return Mat(inverse(self.tolists()))

    def __repr__(self):
        return "Mat(%dx%d)" % (self.nrows, self.ncols)


def random_int_vector(n, rng=None, lo=-10, hi=10):
    rng = rng or random
    return [mpq(rng.randint(lo, hi)) for _ in range(n)]
