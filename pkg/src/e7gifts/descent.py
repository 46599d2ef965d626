"""Quaternionic descent: gifts with non-split coefficient algebras.

The split gift is End(V) for the 56-dimensional Albert triple system V.
For a quadratic field K = F(sqrt(a)) and a nonzero multiplier b, the
diagonal-and-swap map

    eta(x) = t(omega(conj(x))),   t = diag(1/b, b Id; Id, b^2)

is a semilinear similarity of V (x) K whose square is multiplication by
b, so f -> Int(t) (omega conj) (f) is a semilinear algebra involution
theta of End(V (x) K).  Its fixed space is a 3136-dimensional F-algebra
with quaternionic coefficient algebra; sigma and pi restrict to it, and
the result is a gift that is not of the split kind when a < 0 < b fails
appropriately (over real-closed fields, (a, b) = (-1, -1) gives the
compact coefficient quaternions).

The symplectic-embedding verifier checks, for a diagonal quaternionic
hermitian module, the explicit matrices realizing it inside a split
symplectic algebra: an injective homomorphism gf from Q (x) M_n into
M_2n(F(sqrt(alpha))), the descent datum Int(m) conj fixing its image,
and the transfer of the involution, which identifies the adjoint of the
hermitian form <c_1 a_1, ..., c_n a_n>.

Witt indices over a real-closed field reduce to signatures: the trace
quadratic form of a hermitian form h over quaternions is 4-dimensional
per coefficient, and the hermitian Witt index (counting hyperbolic
planes with multiplicity two) is half the quadratic Witt index of the
trace form.
"""

import random

from gmpy2 import mpq

from . import report as rep
from .albert import split_albert, division_albert
from .composition import quaternions
from .forms import QuadraticForm, signature_and_witt
from .fts import build_albert
from .gift import Gift, end_of, random_matrix
from .linalg import identity, inverse, mat_mul, mat_sub, transpose
from .scalars import QuadExt, is_square, qx_conj, sqrt_gen

ALBERT_DIM = 27
DIM = 56
END_DIM = DIM * DIM


# -- K-matrix helpers ------------------------------------------------------
#
# Matrices over K = F(sqrt(a)) are carried as QuadExt entries at the
# interface, but split into a pair of rational matrices for arithmetic,
# so the hot loops stay on gmpy2 rationals.

def k_split(f):
    re = [[x.u if isinstance(x, QuadExt) else mpq(x) for x in row]
          for row in f]
    im = [[x.v if isinstance(x, QuadExt) else mpq(0) for x in row]
          for row in f]
    return re, im


def k_join(re, im, a):
    return [[QuadExt(u, v, a) for u, v in zip(ru, rv)]
            for ru, rv in zip(re, im)]


def _mat_addr(x, y):
    return [[u + v for u, v in zip(rx, ry)] for rx, ry in zip(x, y)]


def _mat_subr(x, y):
    return [[u - v for u, v in zip(rx, ry)] for rx, ry in zip(x, y)]


def _adjoint_fast(gram, ginv):
    """The b-adjoint f -> ginv f^T gram in O(n^2), for Gram matrices
    with a single nonzero entry per row (true for the Albert pairing)."""
    n = len(gram)

    def one_nonzero(row):
        nz = [(k, v) for k, v in enumerate(row) if v]
        assert len(nz) == 1
        return nz[0]

    gcol = [one_nonzero(row) for row in gram]    # gram[j][gcol[j]] pattern
    # column j of gram has its nonzero at row m(j)
    col_of = [None] * n
    for r, (c, v) in enumerate(gcol):
        col_of[c] = (r, v)
    irow = [one_nonzero(row) for row in ginv]

    def sigma(f):
        out = [[None] * n for _ in range(n)]
        for i in range(n):
            mi, wi = irow[i]
            for j in range(n):
                mj, sj = col_of[j]
                out[i][j] = wi * sj * f[mj][mi]
        return out

    return sigma


# -- descent datum ---------------------------------------------------------

class DescentDatum:
    """The pair (K = F(sqrt(a)), b) with the twist map t and the Galois
    action it induces on the split gift.

    The Jordan coordinate maps psi and their transpose companions are
    identities here (the split Albert algebra plays its own K-form), so
    the datum is determined by the diagonal similarity t and the
    coordinate swap omega.
    """

    def __init__(self, a, b):
        a = mpq(a)
        b = mpq(b)
        if b == 0:
            raise ValueError("zero multiplier")
        if a == 0 or is_square(a):
            raise ValueError("descent needs a nonsquare field parameter,"
                             " got %s" % a)
        self.a = a
        self.b = b
        self.ts = build_albert()
        # t = diag(1/b, b on j, 1 on j', b^2), in the (alpha, j, j', beta)
        # coordinates of the 56-dimensional space
        d = [mpq(1) / b] + [b] * ALBERT_DIM + [mpq(1)] * ALBERT_DIM + [b * b]
        self.t_diag = d
        # omega: (alpha, j, j', beta) -> (beta, j', j, alpha)
        perm = [DIM - 1] + list(range(1 + ALBERT_DIM, 1 + 2 * ALBERT_DIM)) \
            + list(range(1, 1 + ALBERT_DIM)) + [0]
        self.perm = perm

    def s_form(self, x, y):
        """The symplectic form sqrt(a) * b(x, y) on V (x) K."""
        return sqrt_gen(self.a) * self.ts.b.apply(x, y)

    def eta(self, x):
        """The semilinear twist t(omega(conj(x))) on K-vectors."""
        d, perm = self.t_diag, self.perm
        return [d[i] * qx_conj(x[perm[i]]) for i in range(DIM)]

    def theta(self, f):
        """The induced semilinear involution of End(V (x) K):
        theta(f) = t P conj(f) P t^{-1} with P the omega permutation.
        Entrywise this is O(n^2)."""
        d, perm = self.t_diag, self.perm
        out = [[None] * DIM for _ in range(DIM)]
        for i in range(DIM):
            di = d[i]
            pi_ = perm[i]
            row = out[i]
            for j in range(DIM):
                row[j] = (di / d[j]) * qx_conj(f[pi_][perm[j]])
        return out

    def checks(self, config=None):
        cfg = config or rep.RunConfig()
        rng = random.Random(cfg.seed ^ 0x9D)
        out = []

        # psi and its transpose companion are both the identity of the
        # split Albert algebra; their trace-form compatibility
        # T(psi j, psi' j') = T(j, j') is then the tautology recorded here
        J = self.ts.meta["albert"]
        ok = True
        for _ in range(5):
            j1 = J.from_coords([rng.randint(-3, 3) for _ in range(27)])
            j2 = J.from_coords([rng.randint(-3, 3) for _ in range(27)])
            if J.trace_T(j1, j2) != J.trace_T(j1, j2):
                ok = False
        out.append(rep.passed("coordinate-maps-compatible",
                              {"psi": "identity", "note": "split form"})
                   if ok else rep.failed("coordinate-maps-compatible", {}))

        bad = None
        for k in range(min(cfg.samples, 20)):
            x = [QuadExt(rng.randint(-3, 3), rng.randint(-3, 3), self.a)
                 for _ in range(DIM)]
            y = [QuadExt(rng.randint(-3, 3), rng.randint(-3, 3), self.a)
                 for _ in range(DIM)]
            lhs = self.s_form(self.eta(x), self.eta(y))
            rhs = self.b * self.s_form(x, y).conj()
            if lhs != rhs:
                bad = (x, y)
                break
        out.append(rep.passed("twist-similarity-multiplier",
                              {"multiplier": self.b, "exact": True})
                   if bad is None else
                   rep.failed("twist-similarity-multiplier",
                              {"x": bad[0], "y": bad[1]}))

        # eta o eta = b * id, an exact matrix identity
        basis_ok = True
        for i in range(DIM):
            e = [mpq(0)] * DIM
            e[i] = mpq(1)
            ee = self.eta(self.eta(e))
            if any(ee[k] != (self.b if k == i else 0) for k in range(DIM)):
                basis_ok = False
                break
        out.append(rep.passed("cocycle-square-is-multiplier",
                              {"exact": True, "on": "all basis vectors"})
                   if basis_ok else
                   rep.failed("cocycle-square-is-multiplier", {"index": i}))
        return out


class DescendedGift(Gift):
    """A gift presented as the theta-fixed subalgebra of a split gift
    over K; random elements are produced by theta-symmetrization."""

    def random_element(self, rng, lo=-3, hi=3):
        dat = self.meta["datum"]
        f = k_join(random_matrix(self.n, rng, lo, hi),
                   random_matrix(self.n, rng, lo, hi), dat.a)
        return _mat_addr(f, dat.theta(f))


def fixed_basis_descriptors(datum):
    """Sparse descriptors of an explicit F-basis of the theta-fixed
    algebra: theta maps the matrix unit E_uv to c E_u'v' with (u', v')
    the omega-permuted pair and c = d_u' / d_v', and the permutation has
    no fixed pairs, so the 56^2 units fall into 1568 orbits of size two,
    each contributing E + theta(E) and sqrt(a)(E - theta(E)).

    Returns a list of 3136 dicts {(row, col): QuadExt}.
    """
    d, perm, a = datum.t_diag, datum.perm, datum.a
    out = []
    for u in range(DIM):
        for v in range(DIM):
            up, vp = perm[u], perm[v]
            if (up, vp) < (u, v):
                continue
            assert (up, vp) != (u, v)
            # theta(E_uv) = (d_u'/d_v') E_u'v' since the permutation is
            # an involution and t is diagonal
            coeff = d[up] / d[vp]
            out.append({(u, v): QuadExt(1, 0, a),
                        (up, vp): QuadExt(coeff, 0, a)})
            out.append({(u, v): QuadExt(0, 1, a),
                        (up, vp): QuadExt(0, -coeff, a)})
    return out


def quatconst_build(a, b):
    """The descended gift for the quadratic field F(sqrt(a)) and
    multiplier b: the theta-fixed subalgebra of End(V (x) K), with sigma
    and pi restricted from the split gift."""
    datum = DescentDatum(a, b)
    g0 = end_of(datum.ts)
    sigma0 = _adjoint_fast(datum.ts.b.gram, datum.ts.b.gram_inv)
    pi0 = g0.pi
    aa = datum.a

    def mul(f, g):
        f1, f2 = k_split(f)
        g1, g2 = k_split(g)
        re = _mat_addr(mat_mul(f1, g1),
                       [[aa * x for x in row] for row in mat_mul(f2, g2)])
        im = _mat_addr(mat_mul(f1, g2), mat_mul(f2, g1))
        return k_join(re, im, aa)

    def sigma(f):
        f1, f2 = k_split(f)
        return k_join(sigma0(f1), sigma0(f2), aa)

    def pi(f):
        f1, f2 = k_split(f)
        return k_join(pi0(f1), pi0(f2), aa)

    def trd(f):
        s = f[0][0]
        for i in range(1, DIM):
            s = s + f[i][i]
        return s

    meta = {"datum": datum, "split_gift": g0, "field_param": aa,
            "multiplier": datum.b,
            "coefficient_quaternions": (aa, datum.b)}
    return DescendedGift(DIM, sigma, pi, mul=mul, trd=trd,
                         kind="descended-quaternionic", meta=meta)


def descended_gift_checks(g, config=None):
    """Closure of the fixed algebra under the gift structure, plus the
    explicit basis count."""
    cfg = config or rep.RunConfig()
    rng = random.Random(cfg.seed ^ 0x41)
    dat = g.meta["datum"]
    out = list(dat.checks(cfg))

    desc = fixed_basis_descriptors(dat)
    # descriptors occupy disjoint position pairs orbit by orbit, and the
    # two members of each orbit are visibly independent, so the count is
    # the dimension
    n_orbits = len({tuple(sorted(d)) for d in desc})
    dim_ok = len(desc) == END_DIM and n_orbits == END_DIM // 2
    out.append(rep.passed("fixed-algebra-dimension",
                          {"dim": END_DIM, "orbits": n_orbits})
               if dim_ok else
               rep.failed("fixed-algebra-dimension",
                          {"count": len(desc)}))

    def fixed(f):
        return dat.theta(f) == f

    bad = None
    for k in range(min(cfg.samples, 10)):
        x = g.random_element(rng)
        y = g.random_element(rng)
        if not (fixed(x) and fixed(y)):
            bad = ("sample", k)
            break
        if not fixed(g.mul(x, y)):
            bad = ("product", k)
            break
        if not fixed(g.sigma(x)):
            bad = ("sigma", k)
            break
        if not fixed(g.pi(x)):
            bad = ("pi", k)
            break
    out.append(rep.passed("fixed-algebra-closure",
                          {"samples": min(cfg.samples, 10),
                           "under": ["mul", "sigma", "pi"]})
               if bad is None else
               rep.failed("fixed-algebra-closure",
                          {"failed_at": list(bad)}))
    return out


# -- symplectic-embedding verifier -----------------------------------------

def _k_zero_mat(n2, a):
    return [[QuadExt(0, 0, a) for _ in range(n2)] for _ in range(n2)]


def _gf_block(alpha, beta, cs, unit, r, s):
    """The 2x2 block over F(sqrt(alpha)) representing the quaternion
    basis unit (1, i, j, ij) tensored with the matrix unit E_rs."""
    ra = sqrt_gen(alpha)
    cr, cs_ = mpq(cs[r]), mpq(cs[s])
    one = QuadExt(1, 0, alpha)
    z = QuadExt(0, 0, alpha)
    if unit == 0:
        return [[one, z], [z, one * (cs_ / cr)]]
    if unit == 1:
        return [[ra, z], [z, -(cs_ / cr) * ra]]
    if unit == 2:
        return [[z, one * cs_], [one * (mpq(beta) / cr), z]]
    return [[z, ra * cs_], [-(mpq(beta) / cr) * ra, z]]


class QuaternionMatrix:
    """An element of Q (x) M_n: an n x n array of quaternion coordinate
    vectors in the (1, i, j, ij) basis."""

    __slots__ = ("alg", "entries")

    def __init__(self, alg, entries):
        self.alg = alg
        self.entries = [[list(map(mpq, q)) for q in row] for row in entries]

    @property
    def n(self):
        return len(self.entries)

    def __mul__(self, other):
        A = self.alg
        n = self.n
        out = [[A.zero() for _ in range(n)] for _ in range(n)]
        for r in range(n):
            for k in range(n):
                x = self.entries[r][k]
                if all(c == 0 for c in x):
                    continue
                for s in range(n):
                    p = A.multiply(x, other.entries[k][s])
                    out[r][s] = [u + v for u, v in zip(out[r][s], p)]
        return QuaternionMatrix(A, out)

    def conj_transpose_weighted(self, weights):
        """The adjoint for the diagonal hermitian form with the given
        weights: entry (u, v) becomes (w_v / w_u) conj(x_vu)."""
        A = self.alg
        n = self.n
        out = [[A.conj(self.entries[v][u]) for v in range(n)]
               for u in range(n)]
        for u in range(n):
            for v in range(n):
                w = mpq(weights[v]) / mpq(weights[u])
                out[u][v] = [w * c for c in out[u][v]]
        return QuaternionMatrix(A, out)

    def __eq__(self, other):
        return self.entries == other.entries


def _gf_map(alpha, beta, cs, X):
    """The embedding of Q (x) M_n into M_2n(F(sqrt(alpha)))."""
    n = X.n
    out = _k_zero_mat(2 * n, alpha)
    for r in range(n):
        for s in range(n):
            q = X.entries[r][s]
            for unit, coeff in enumerate(q):
                if coeff == 0:
                    continue
                blk = _gf_block(alpha, beta, cs, unit, r, s)
                for dr in range(2):
                    for dc in range(2):
                        out[2 * r + dr][2 * s + dc] = \
                            out[2 * r + dr][2 * s + dc] + coeff * blk[dr][dc]
    return out


def symplem_verify(alpha, beta, a_coeffs, c_coeffs, config=None):
    """Verify the explicit symplectic realization of the diagonal
    quaternionic hermitian module with form <a_1, ..., a_n> twisted by
    scalars c_i, for Q = (alpha, beta) and n <= 3.

    Checks, all exact:
      * gf is an algebra homomorphism on random elements of Q (x) M_n;
      * the image is fixed by Int(m) conj for the block matrix m with
        blocks ((0, c_i), (beta/c_i, 0));
      * the symplectic adjoint tau = Int(diag((sqrt(alpha) a_i)^{-1} J))
        of the block form transfers to the hermitian adjoint of
        <c_1 a_1, ..., c_n a_n> on the quaternionic side.

    Returns (hermitian_form, checks).
    """
    cfg = config or rep.RunConfig()
    rng = random.Random(cfg.seed ^ 0x17)
    alpha, beta = mpq(alpha), mpq(beta)
    if is_square(alpha):
        raise ValueError("alpha must be a nonsquare (the split case needs"
                         " no embedding)")
    if beta == 0:
        raise ValueError("beta must be nonzero")
    n = len(a_coeffs)
    if not 1 <= n <= 3 or len(c_coeffs) != n:
        raise ValueError("need matching coefficient lists of length 1..3")
    a_coeffs = [mpq(x) for x in a_coeffs]
    c_coeffs = [mpq(x) for x in c_coeffs]
    if any(x == 0 for x in a_coeffs + c_coeffs):
        raise ValueError("zero coefficient")
    A = quaternions(alpha, beta)
    checks = []

    def gf(X):
        return _gf_map(alpha, beta, c_coeffs, X)

    def random_qmat():
        return QuaternionMatrix(
            A, [[[rng.randint(-3, 3) for _ in range(4)] for _ in range(n)]
                for _ in range(n)])

    bad = None
    for k in range(min(cfg.samples, 20)):
        X = random_qmat()
        Y = random_qmat()
        if gf(X * Y) != mat_mul(gf(X), gf(Y)):
            bad = k
            break
    checks.append(rep.passed("embedding-homomorphism",
                             {"samples": min(cfg.samples, 20),
                              "exact": True})
                  if bad is None else
                  rep.failed("embedding-homomorphism", {"sample": bad}))

    # m: block diagonal with blocks ((0, c_i), (beta/c_i, 0))
    m = _k_zero_mat(2 * n, alpha)
    for i in range(n):
        m[2 * i][2 * i + 1] = QuadExt(c_coeffs[i], 0, alpha)
        m[2 * i + 1][2 * i] = QuadExt(beta / c_coeffs[i], 0, alpha)
    m_inv = inverse(m)

    def galois_fixed(Ymat):
        conj = [[x.conj() for x in row] for row in Ymat]
        return mat_mul(mat_mul(m, conj), m_inv) == Ymat

    bad = None
    for k in range(min(cfg.samples, 20)):
        if not galois_fixed(gf(random_qmat())):
            bad = k
            break
    checks.append(rep.passed("image-galois-fixed",
                             {"samples": min(cfg.samples, 20)})
                  if bad is None else
                  rep.failed("image-galois-fixed", {"sample": bad}))

    # tau = Int(W) o transpose, W block diagonal (sqrt(alpha) a_i)^{-1} J
    ra = sqrt_gen(alpha)
    W = _k_zero_mat(2 * n, alpha)
    for i in range(n):
        c = (ra * a_coeffs[i]).inverse()
        W[2 * i][2 * i + 1] = c
        W[2 * i + 1][2 * i] = -c
    W_inv = inverse(W)

    def tau(Ymat):
        return mat_mul(mat_mul(W, transpose(Ymat)), W_inv)

    # the matrix identity holds with diagonal weights a_i / c_i; scaling
    # the i-th variable by the central scalar c_i multiplies the weight
    # by the norm c_i^2, so the isometry class is <c_1 a_1, ..., c_n a_n>
    weights = [a / c for c, a in zip(c_coeffs, a_coeffs)]
    herm = [c * a for c, a in zip(c_coeffs, a_coeffs)]
    bad = None
    for k in range(min(cfg.samples, 20)):
        X = random_qmat()
        if tau(gf(X)) != gf(X.conj_transpose_weighted(weights)):
            bad = k
            break
    checks.append(rep.passed(
        "involution-transfers-to-hermitian-adjoint",
        {"adjoint_weights": weights, "hermitian_coefficients": herm,
         "samples": min(cfg.samples, 20)})
        if bad is None else
        rep.failed("involution-transfers-to-hermitian-adjoint",
                   {"sample": bad}))

    h = HermitianForm((alpha, beta), herm)
    return h, checks


# -- hermitian Witt indices over real-closed fields ------------------------

class HermitianForm:
    """A diagonal hermitian form <c_1, ..., c_n> over a quaternion
    algebra (a, b), the c_i nonzero rationals."""

    __slots__ = ("quat_params", "coeffs")

    def __init__(self, quat_params, coeffs):
        self.quat_params = (mpq(quat_params[0]), mpq(quat_params[1]))
        self.coeffs = tuple(mpq(c) for c in coeffs)
        if any(p == 0 for p in self.quat_params) or \
                any(c == 0 for c in self.coeffs):
            raise ValueError("zero parameter in hermitian form")

    @property
    def dim(self):
        return len(self.coeffs)

    def __repr__(self):
        return "HermitianForm(Q=%s, <%s>)" % (
            self.quat_params, ", ".join(map(str, self.coeffs)))


def hermitian_trace_form(h):
    """The trace quadratic form of a diagonal hermitian form: each
    coefficient c contributes c times the quaternion norm form."""
    nd = quaternions(*h.quat_params).norm_diag
    coeffs = []
    for c in h.coeffs:
        coeffs.extend(c * d for d in nd)
    return QuadraticForm(coeffs)


def witt_index_hermitian(h):
    """The hermitian Witt index over a real-closed field, in the
    normalization where one hyperbolic plane counts two: half the
    quadratic Witt index of the trace form."""
    _, _, w = signature_and_witt(hermitian_trace_form(h))
    assert w % 2 == 0, "trace-form Witt index of a hermitian form is even"
    return w // 2


def e7_real_table():
    """Witt indices of the rank-28 hermitian forms <1> perp T(J) over a
    real-closed field, for the two coefficient quaternion algebras and
    the two Jordan algebras, with the associated group types.

    The form has 28 diagonal entries: 1 and the 27 trace-form
    coefficients of J.  Over the split quaternions every form is
    hyperbolic; over (-1, -1) the index is computed from signatures.
    """
    labels = {
        ("split", "split"): "E_{7,7}^0",
        ("split", "division"): "E_{7,3}^{28}",
        ("division", "split"): "E_{7,4}^9",
        ("division", "division"): "E_{7,0}^{133}",
    }
    quats = [("split", (1, 1)), ("division", (-1, -1))]
    jordans = [("split", split_albert()), ("division", division_albert())]
    rows = []
    for qname, qparams in quats:
        for jname, J in jordans:
            coeffs = (mpq(1),) + J.trace_form().coeffs
            h = HermitianForm(qparams, coeffs)
            rows.append({
                "coefficient_algebra": qname,
                "jordan_algebra": jname,
                "witt_index": witt_index_hermitian(h),
                "group_type": labels[(qname, jname)],
            })
    return rows
