"""Freudenthal triple systems (V, b, t) over Q, built exactly.

A triple system is a nondegenerate skew form b together with a symmetric
trilinear product t on the same space; the 4-linear form

    q(x, y, z, w) := b(x, t(y, z, w))

must be symmetric (FTS1), nonzero (FTS2), and satisfy the fundamental
identity

    FTS3:  t(t(x,x,x), x, y) = b(y,x) t(x,x,x) + q(y,x,x,x) x.

Both tensors are stored sparsely on sorted basis tuples, values exact
rationals; t and q determine each other through b-duality, so a system can
be constructed from either one.

Two families are built here.  Both live on V = F + W + W + F with
coordinates (alpha, j, j', beta):

* `build_ms(w_dim)`: W a symplectic space (s skew), quartic
  q(x,x,x,x) = 12 det(x)^2 with det(x) = alpha beta - s(j, j'), which is
  visibly a square, so the system is degenerate;
* `build_albert(J)`: W = J a 27-dimensional Albert algebra, quartic
  built from the determinant analogue alpha beta - T(j, j'), the adjoint
  pairing T(sharp(j), sharp(j')) and the cubic norms N(j), N(j'), with
  coefficients pinned down by FTS3 itself (see `calibrate_albert_coeffs`).

The trace criterion `classify` separates the two: a triple system is
degenerate exactly when the identity

    tr(p(x@x) p(y@y)) = 24 (q(x,x,y,y) - 2 b(y,x)^2)

fails for some pair, where p(u@v)w := t(u,v,w) - b(w,u)v - b(w,v)u.
"""

import itertools
import random

from gmpy2 import mpq

from . import report as rep
from .forms import SkewForm, SkewPairing, standard_symplectic
from .linalg import random_int_vector, vadd, vscale, vsub, zeros
from .albert import AlbertAlgebra

# coefficients (c1, c2, c3) of the nondegenerate quartic
#   c1 (alpha beta - T(j,j'))^2 + c2 T(sharp j, sharp j')
#   + c3 (alpha N(j) + beta N(j'))
# frozen from `calibrate_albert_coeffs`: FTS3 admits exactly two solutions
# with c2 != 0, differing only in the sign of c3; they are exchanged by
# the isometry (alpha, j; j', beta) -> (alpha, -j; -j', beta), and the
# representative with c3 < 0 is the frozen one (regression-tested against
# a fresh calibration)
ALBERT_COEFFS = (mpq(12), mpq(-48), mpq(-48))


def _sorted3(i, j, k):
    return tuple(sorted((i, j, k)))


def _sorted4(i, j, k, l):
    return tuple(sorted((i, j, k, l)))


def _sparse_rows(mat):
    return [[(j, x) for j, x in enumerate(row) if x != 0] for row in mat]


class TripleSystem:
    """(V, b, t) with sparse symmetric tensors for t and q.

    Exactly one of q_sym / t_sym may be omitted; the other is derived
    through b.  `q_sym` maps sorted basis 4-tuples to q(e_i,e_j,e_k,e_l),
    `t_sym` maps sorted basis triples to sparse coordinate dicts of
    t(e_i,e_j,e_k).
    """

    def __init__(self, b, q_sym=None, t_sym=None, quartic=None,
                 kind="custom", meta=None):
        if q_sym is None and t_sym is None:
            raise ValueError("need q_sym or t_sym")
        self.b = b
        self.n = b.dim
        self.quartic = quartic
        self.kind = kind
        self.meta = dict(meta or {})
        self._brows = _sparse_rows(b.gram)
        if b.gram_inv is not None:
            self._ginv_cols = _sparse_rows(
                [list(col) for col in zip(*b.gram_inv)])
        elif t_sym is None:
            raise ValueError("a degenerate pairing cannot recover t from q;"
                             " pass t_sym explicitly")
        self.q_conflicts = []
        if q_sym is not None:
            self.q_sym = {k: mpq(v) for k, v in q_sym.items() if v != 0}
            self.t_sym = t_sym if t_sym is not None else self._t_from_q()
        else:
            self.t_sym = t_sym
            self.q_sym = self._q_from_t()
        self._t_flat = None

    # -- tensor derivations ------------------------------------------------

    def _triple_functionals(self):
        """For each basis triple in the support of q, the set of pairs
        (l, value) with q(e_l, triple) = value."""
        out = {}
        for key, val in self.q_sym.items():
            seen = set()
            for pos in range(4):
                l = key[pos]
                tri = _sorted3(*(key[:pos] + key[pos + 1:]))
                if (l, tri) in seen:
                    continue
                seen.add((l, tri))
                out.setdefault(tri, {})[l] = val
        return out

    def _t_from_q(self):
        """t(e_i,e_j,e_k) is the unique vector with b(e_l, t) = q(e_l, ...),
        i.e. gram_inv applied to the covector of q-values."""
        t_sym = {}
        gcols = self._ginv_cols
        for tri, covec in self._triple_functionals().items():
            tvec = {}
            for l, val in covec.items():
                for n, g in gcols[l]:
                    tvec[n] = tvec.get(n, mpq(0)) + g * val
            tvec = {n: v for n, v in tvec.items() if v != 0}
            if tvec:
                t_sym[tri] = tvec
        return t_sym

    def _q_from_t(self):
        """q values from t via b; conflicting values between different
        decompositions of the same 4-tuple (a failure of FTS1) are
        recorded in q_conflicts rather than raised."""
        q_sym = {}
        for tri, tvec in self.t_sym.items():
            covec = {}
            for n, tv in tvec.items():
                for l, bv in self._brows[n]:
                    # b(e_l, e_n) = -b(e_n, e_l)
                    covec[l] = covec.get(l, mpq(0)) - bv * tv
            for l, val in covec.items():
                key = _sorted4(l, *tri)
                if key in q_sym:
                    if q_sym[key] != val:
                        self.q_conflicts.append((key, q_sym[key], val))
                else:
                    q_sym[key] = val
        return {k: v for k, v in q_sym.items() if v != 0}

    # -- contractions ------------------------------------------------------

    @property
    def t_flat(self):
        """The full (ordered) t tensor: entries (i, j, k, items) over all
        distinct permutations of each stored triple."""
        if self._t_flat is None:
            flat = []
            for tri, tvec in self.t_sym.items():
                items = sorted(tvec.items())
                for perm in set(itertools.permutations(tri)):
                    flat.append((perm[0], perm[1], perm[2], items))
            self._t_flat = flat
        return self._t_flat

    def t3(self, x, y, z):
        """t(x, y, z), exact."""
        out = [mpq(0)] * self.n
        for i, j, k, items in self.t_flat:
            c = x[i] * y[j] * z[k]
            if c:
                for n, v in items:
                    out[n] += c * v
        return out

    def q4(self, x, y, z, w):
        """q(x, y, z, w) = b(x, t(y, z, w))."""
        return self.b.apply(x, self.t3(y, z, w))

    def quartic_value(self, x):
        return self.q4(x, x, x, x)

    def p_map(self, u, v):
        """The operator p(u @ v): w -> t(u,v,w) - b(w,u)v - b(w,v)u,
        as a dense matrix."""
        n = self.n
        m = [[mpq(0)] * n for _ in range(n)]
        for i, j, k, items in self.t_flat:
            c = u[i] * v[j]
            if c:
                for a, val in items:
                    m[a][k] += c * val
        bu = [self.b.apply_basis(k, u) for k in range(n)]
        bv = [self.b.apply_basis(k, v) for k in range(n)]
        for a in range(n):
            ua, va = u[a], v[a]
            row = m[a]
            for k in range(n):
                row[k] -= bu[k] * va + bv[k] * ua
        return m

    def scaled(self, lam):
        """Scale b and t by the same nonzero factor (q picks up lam^2);
        the identity map is then a similarity with multiplier lam."""
        lam = mpq(lam)
        if lam == 0:
            raise ValueError("zero scaling factor")
        form_cls = SkewForm if self.b.gram_inv is not None else SkewPairing
        b2 = form_cls([[lam * x for x in row] for row in self.b.gram])
        t2 = {tri: {n: lam * v for n, v in tvec.items()}
              for tri, tvec in self.t_sym.items()}
        q2 = {k: lam * lam * v for k, v in self.q_sym.items()}
        quart = (lambda x, f=self.quartic: lam * lam * f(x)) \
            if self.quartic else None
        meta = dict(self.meta, scaled_by=lam)
        return TripleSystem(b2, q_sym=q2, t_sym=t2, quartic=quart,
                            kind=self.kind, meta=meta)

    def __repr__(self):
        return "TripleSystem(kind=%r, dim=%d)" % (self.kind, self.n)


def trace_product(m1, m2):
    """tr(m1 m2) for dense square matrices."""
    s = mpq(0)
    for a, row in enumerate(m1):
        for b_, x in enumerate(row):
            if x:
                s += x * m2[b_][a]
    return s


# -- symmetric multilinear component tensors -------------------------------

def _pairing_square_tensor(phi_pairs):
    """The symmetric 4-linear lift of x -> phi(x,x)^2 for a symmetric
    bilinear phi given by its sparse Gram entries {(i<=j): phi(e_i,e_j)}:

        A(x1,x2,x3,x4) = (1/3) [phi(12)phi(34) + phi(13)phi(24)
                                + phi(14)phi(23)].
    """
    def ph(i, j):
        return phi_pairs.get((i, j) if i <= j else (j, i), mpq(0))

    keys = list(phi_pairs)
    support = set()
    for (a, b), (c, d) in itertools.combinations_with_replacement(keys, 2):
        support.add(_sorted4(a, b, c, d))
    tensor = {}
    for key in support:
        a, b, c, d = key
        val = (ph(a, b) * ph(c, d) + ph(a, c) * ph(b, d)
               + ph(a, d) * ph(b, c)) / 3
        if val:
            tensor[key] = val
    return tensor


def _albert_half_cross(J):
    """Sparse coordinates of (1/2) e_a x e_b for a <= b; the diagonal
    entries are sharp(e_a)."""
    basis = [J.basis_element(k) for k in range(27)]
    out = {}
    for a in range(27):
        for b in range(a, 27):
            if a == b:
                v = J.sharp(basis[a]).coords()
            else:
                v = [c / 2 for c in J.cross(basis[a], basis[b]).coords()]
            sp = {k: c for k, c in enumerate(v) if c != 0}
            if sp:
                out[(a, b)] = sp
    return out


def _albert_q_components(J):
    """The three symmetric 4-tensors (on V = F + J + J + F, coordinates
    alpha, j[27], j'[27], beta) whose combination is the quartic of the
    Albert-pair triple system:

        A: lift of (alpha beta - T(j, j'))^2
        B: lift of T(sharp(j), sharp(j'))
        C: lift of alpha N(j) + beta N(j').
    """
    tg = J.t_gram_diag
    jj = lambda a: 1 + a          # j block
    kk = lambda a: 28 + a         # j' block
    phi_pairs = {(0, 55): mpq(1, 2)}
    for a in range(27):
        phi_pairs[(jj(a), kk(a))] = -tg[a] / 2
    A = _pairing_square_tensor(phi_pairs)

    hc = _albert_half_cross(J)
    B = {}
    for (a, b), u in hc.items():
        for (c, d), v in hc.items():
            small, big = (u, v) if len(u) < len(v) else (v, u)
            s = sum((tg[k] * x * big[k] for k, x in small.items()
                     if k in big), mpq(0))
            if s:
                B[_sorted4(jj(a), jj(b), kk(c), kk(d))] = s / 6

    C = {}
    for a in range(27):
        for b in range(a, 27):
            for c, x in hc.get((a, b), {}).items():
                if c < b:
                    continue   # keep one representative per sorted triple
                val = tg[c] * x / 12
                C[(0, jj(a), jj(b), jj(c))] = val
                C[(kk(a), kk(b), kk(c), 55)] = val
    return A, B, C


def _merge_scaled(parts):
    out = {}
    for coeff, tensor in parts:
        if coeff == 0:
            continue
        for key, val in tensor.items():
            out[key] = out.get(key, mpq(0)) + coeff * val
    return {k: v for k, v in out.items() if v != 0}


# -- the two families ------------------------------------------------------

def _pair_gram(n_w, pair_gram, symmetric_pairing):
    """Gram matrix of b on F + W + W + F:

        b(x, y) = alpha delta - beta gamma + <j, k'> + <j', k>

    where <,> is s (skew, so b is skew) in the symplectic case, and
    T (symmetric; the j'-j block then needs the opposite sign) in the
    Albert case."""
    n = 2 * n_w + 2
    gram = [[mpq(0)] * n for _ in range(n)]
    gram[0][n - 1] = mpq(1)
    gram[n - 1][0] = mpq(-1)
    sign = mpq(-1) if symmetric_pairing else mpq(1)
    for r in range(n_w):
        for r2 in range(n_w):
            v = mpq(pair_gram[r][r2])
            if v:
                gram[1 + r][1 + n_w + r2] = v
            # b(j'-vector, j-vector) goes through the pairing in the
            # opposite slot order (with a minus in the symmetric case)
            w = sign * mpq(pair_gram[r2][r])
            if w:
                gram[1 + n_w + r2][1 + r] = w
    return gram


W_DIM_NOTE = ("the classical presentation takes dim W = 27, but no "
              "nondegenerate skew form exists in odd dimension; even "
              "dimensions (default 26) give honest triple systems, and an "
              "odd w_dim mirrors the classical formulas verbatim with a "
              "degenerate s (one radical line)")


def _ms_phi_pairs(w_dim, s_gram, n):
    """Sparse Gram entries of the symmetric bilinear phi with
    phi(x, x) = det(x) = alpha beta - s(j, j')."""
    phi_pairs = {(0, n - 1): mpq(1, 2)}
    for r in range(w_dim):
        for r2 in range(w_dim):
            v = s_gram[r][r2]
            if v:
                i, j = 1 + r, 1 + w_dim + r2
                key = (i, j) if i <= j else (j, i)
                phi_pairs[key] = phi_pairs.get(key, mpq(0)) - v / 2
    return phi_pairs


def build_ms(w_dim=26, s=None):
    """The degenerate triple system on V = F + W + W + F for W a
    symplectic space: quartic 12 det(x)^2 with
    det(x) = alpha beta - s(j, j'), and

        t(x,x,x) = 6 det(x) (-alpha, j; -j', beta).

    For even w_dim (the default, 26), t is recovered from q by b-duality.
    For odd w_dim, s is necessarily degenerate (standard symplectic on
    w_dim - 1 coordinates plus a radical line); t is then built from the
    polarized closed formula instead, and the resulting system mirrors the
    classical dim-27 formulas verbatim.  See W_DIM_NOTE.
    """
    formal = w_dim % 2 == 1
    if s is None:
        if formal:
            even = standard_symplectic(w_dim - 1)
            gram = [row + [mpq(0)] for row in even.gram]
            gram.append([mpq(0)] * w_dim)
            s = SkewPairing(gram)
        else:
            s = standard_symplectic(w_dim)
    elif s.dim != w_dim:
        raise ValueError("w_dim does not match the given form")
    n = 2 * w_dim + 2
    gram = _pair_gram(w_dim, s.gram, symmetric_pairing=False)
    phi_pairs = _ms_phi_pairs(w_dim, s.gram, n)

    def det(x):
        jp = x[1:1 + w_dim]
        jpp = x[1 + w_dim:1 + 2 * w_dim]
        return x[0] * x[n - 1] - s.apply(jp, jpp)

    meta = {"w_dim": w_dim, "w_dim_note": W_DIM_NOTE, "formal": formal,
            "s": s}
    quartic = lambda x: 12 * det(x) ** 2
    if not formal:
        q_sym = _merge_scaled([(mpq(12), _pairing_square_tensor(phi_pairs))])
        return TripleSystem(SkewForm(gram), q_sym=q_sym, quartic=quartic,
                            kind="ms", meta=meta)
    # degenerate b: build t directly from the unique symmetric trilinear
    # lift of the cubic x -> 6 det(x) xt, with xt = (-alpha, j; -j', beta):
    #   t(x, y, z) = 2 [phi(x,y) zt + phi(y,z) xt + phi(z,x) yt]
    tilde = [mpq(1)] * n
    tilde[0] = mpq(-1)
    for r in range(w_dim):
        tilde[1 + w_dim + r] = mpq(-1)

    def ph(i, j):
        return phi_pairs.get((i, j) if i <= j else (j, i), mpq(0))

    t_sym = {}
    for (a, c) in phi_pairs:
        for k in range(n):
            tri = _sorted3(a, c, k)
            if tri in t_sym:
                continue
            i, j, k2 = tri
            vec = {}
            for (u, v, w2) in ((i, j, k2), (j, k2, i), (k2, i, j)):
                c0 = 2 * ph(u, v)
                if c0:
                    vec[w2] = vec.get(w2, mpq(0)) + c0 * tilde[w2]
            vec = {m: val for m, val in vec.items() if val != 0}
            if vec:
                t_sym[tri] = vec
    return TripleSystem(SkewPairing(gram), t_sym=t_sym, quartic=quartic,
                        kind="ms", meta=meta)


def build_albert(J=None, coeffs=ALBERT_COEFFS, kind=None):
    """The nondegenerate triple system of an Albert algebra J on
    V = F + J + J + F (56-dimensional)."""
    if J is None:
        from .albert import split_albert
        J = split_albert()
    if not isinstance(J, AlbertAlgebra):
        raise ValueError("need an Albert algebra")
    b = SkewForm(_pair_gram(27, _diag_gram(J.t_gram_diag),
                            symmetric_pairing=True))
    c1, c2, c3 = (mpq(c) for c in coeffs)
    A, B, C = _albert_q_components(J)
    q_sym = _merge_scaled([(c1, A), (c2, B), (c3, C)])

    def quartic(x):
        alpha, beta = x[0], x[55]
        j = J.from_coords(x[1:28])
        jp = J.from_coords(x[28:55])
        det = alpha * beta - J.trace_T(j, jp)
        return (c1 * det * det + c2 * J.trace_T(J.sharp(j), J.sharp(jp))
                + c3 * (alpha * J.norm_N(j) + beta * J.norm_N(jp)))

    if kind is None:
        kind = "albert-division" \
            if J.octonions.is_division_over_real_closure() else "albert-split"
    meta = {"coeffs": (c1, c2, c3)}
    ts = TripleSystem(b, q_sym=q_sym, quartic=quartic, kind=kind, meta=meta)
    ts.meta["albert"] = J
    return ts


def _diag_gram(diag):
    n = len(diag)
    g = [[mpq(0)] * n for _ in range(n)]
    for k, d in enumerate(diag):
        g[k][k] = d
    return g


def calibrate_albert_coeffs(J=None, samples=3, seed=7):
    """Recover the quartic coefficients (c1, c2, c3) from FTS3 alone.

    The residual of FTS3 is quadratic in the unknown coefficient vector
    (the left side is quadratic in t, the right side linear), so a few
    random points give a polynomial system with four solutions: zero, the
    degenerate branch (12, 0, 0) whose quartic is a perfect square, and a
    pair (12, c2, +-c3) exchanged by the isometry negating j and j'.
    Returns the representative with c2 != 0 and c3 < 0.
    """
    import sympy

    if J is None:
        from .albert import split_albert
        J = split_albert()
    b = SkewForm(_pair_gram(27, _diag_gram(J.t_gram_diag),
                            symmetric_pairing=True))
    comps = _albert_q_components(J)
    systems = [TripleSystem(b, q_sym=comp) for comp in comps]
    cs = sympy.symbols("c1 c2 c3")
    rng = random.Random(seed)
    equations = []
    for _ in range(samples):
        x = random_int_vector(56, rng, -3, 3)
        y = random_int_vector(56, rng, -3, 3)
        u = [ts.t3(x, x, x) for ts in systems]
        byx = b.apply(y, x)
        lhs = {}   # (S, T) -> vector
        for si, ts in enumerate(systems):
            for ti, ut in enumerate(u):
                lhs[(si, ti)] = ts.t3(ut, x, y)
        rhs = [vadd(vscale(byx, u[ti]), vscale(b.apply(y, u[ti]), x))
               for ti in range(3)]
        for coord in range(56):
            expr = sympy.Integer(0)
            for (si, ti), vec in lhs.items():
                if vec[coord]:
                    expr += cs[si] * cs[ti] * sympy.Rational(str(vec[coord]))
            for ti in range(3):
                if rhs[ti][coord]:
                    expr -= cs[ti] * sympy.Rational(str(rhs[ti][coord]))
            if expr != 0:
                equations.append(expr)
    sols = sympy.solve(equations, cs, dict=True)
    good = []
    for sol in sols:
        vals = tuple(sol.get(c, sympy.Integer(0)) for c in cs)
        if all(v.is_Rational for v in vals) and vals[1] != 0 and vals[2] < 0:
            good.append(tuple(mpq(str(v)) for v in vals))
    if len(good) != 1:
        raise ValueError("calibration did not isolate a unique solution"
                         " with c2 != 0, c3 < 0: %r" % (sols,))
    return good[0]


# -- checks ----------------------------------------------------------------

def check_axioms(ts, config=None):
    """Verify FTS1-FTS3 (plus the linearized FTS3' and the trace-quartic
    consistency tr(p(x@x)^2) = 24 q(x,x,x,x)).

    FTS1 is checked exhaustively and exactly on basis tuples.  FTS3 and
    its variants are checked exactly on random points; with
    config.exhaustive they are additionally checked on all basis tuples
    modulo several random primes (see the `exhaustive` module).
    """
    config = config or rep.RunConfig()
    rng = random.Random(config.seed)
    out = [_check_fts1(ts), _check_fts2(ts, rng)]
    out.append(_check_sampled(
        ts, "triple-identity", _fts3_residual, 2, rng, config.samples))
    out.append(_check_sampled(
        ts, "triple-identity-linearized", _fts3p_residual, 3, rng,
        config.samples))
    tq = _check_sampled(
        ts, "trace-quartic-consistency", _trace_quartic_residual, 1, rng,
        config.samples)
    factor = _trace_quartic_factor(ts)
    tq.evidence["trace_factor"] = factor
    if factor != 24:
        tq.evidence["dimension_adjusted"] = True
        tq.evidence["note"] = (
            "the trace of p(x@x)^2 carries a dim(W) contribution; the"
            " stated constant 24 is specific to total dimension 56 and is"
            " replaced by 24 + (dim V - 56)/3 here")
    out.append(tq)
    if ts.quartic is not None:
        out.append(_check_sampled(
            ts, "quartic-closed-form", _closed_form_residual, 1, rng,
            config.samples))
    if config.exhaustive:
        from . import exhaustive
        out.append(exhaustive.fts3_exhaustive_mod_p(ts, config))
    return out


def _check_fts1(ts):
    """q is symmetric, checked exhaustively and exactly over the whole
    support: every basis value b(e_l, t(e_i,e_j,e_k)) must agree with the
    stored symmetric tensor, and every stored value must be reproduced by
    each of the four ways of splitting its 4-tuple into (e_l, triple)."""
    checked = 0
    for tri, tvec in ts.t_sym.items():
        covec = {}
        for n, tv in tvec.items():
            for l, bv in ts._brows[n]:
                covec[l] = covec.get(l, mpq(0)) - bv * tv
        for l, val in covec.items():
            key = _sorted4(l, *tri)
            checked += 1
            if val != ts.q_sym.get(key, mpq(0)):
                return rep.failed("quartic-form-symmetric",
                                  {"tuple": list(key), "stored":
                                   ts.q_sym.get(key, mpq(0)), "derived": val})
    for key, val in ts.q_sym.items():
        for pos in range(4):
            l = key[pos]
            tri = _sorted3(*(key[:pos] + key[pos + 1:]))
            tvec = ts.t_sym.get(tri, {})
            derived = sum((bv * tvec.get(n, mpq(0))
                           for n, bv in ts._brows[l]), mpq(0))
            checked += 1
            if derived != val:
                return rep.failed("quartic-form-symmetric",
                                  {"tuple": list(key), "stored": val,
                                   "derived": derived, "split_position": pos})
    return rep.passed("quartic-form-symmetric",
                      {"basis_values_checked": checked, "exhaustive": True,
                       "exact": True})


def _check_fts2(ts, rng):
    """q is not identically zero; a witness vector is reported."""
    n = ts.n
    cands = [[mpq(1 if k in (0, n - 1) else 0) for k in range(n)]]
    for _ in range(50):
        cands.append(random_int_vector(n, rng, -3, 3))
    for x in cands:
        v = ts.quartic_value(x)
        if v != 0:
            return rep.passed("quartic-form-nonzero",
                              {"exact": True}, {"x": x, "q": v})
    if ts.q_sym:
        return rep.failed("quartic-form-nonzero",
                          {"note": "no witness found but tensor is nonzero"})
    return rep.failed("quartic-form-nonzero", {"note": "q tensor is zero"})


def _fts3_residual(ts, x, y):
    u = ts.t3(x, x, x)
    lhs = ts.t3(u, x, y)
    rhs = vadd(vscale(ts.b.apply(y, x), u),
               vscale(ts.b.apply(y, u), x))
    return vsub(lhs, rhs)


def _fts3p_residual(ts, x, z, y):
    txxz = ts.t3(x, x, z)
    txzz = ts.t3(x, z, z)
    lhs = vadd(ts.t3(txxz, z, y), ts.t3(txzz, x, y))
    rhs = vadd(vadd(vscale(ts.b.apply(y, txxz), z),
                    vscale(ts.b.apply(y, txzz), x)),
               vadd(vscale(ts.b.apply(y, z), txxz),
                    vscale(ts.b.apply(y, x), txzz)))
    return vsub(lhs, rhs)


def _trace_quartic_factor(ts):
    """24 for the 56-dimensional systems the theory is stated for; the
    even-w symplectic-pair variants pick up a dimension correction."""
    return mpq(24) + mpq(ts.n - 56, 3)


def _trace_quartic_residual(ts, x):
    p = ts.p_map(x, x)
    return [trace_product(p, p)
            - _trace_quartic_factor(ts) * ts.quartic_value(x)]


def _closed_form_residual(ts, x):
    return [ts.quartic_value(x) - ts.quartic(x)]


def _check_sampled(ts, name, residual, arity, rng, samples):
    for k in range(samples):
        args = [random_int_vector(ts.n, rng, -5, 5) for _ in range(arity)]
        r = residual(ts, *args)
        if any(c != 0 for c in r):
            return rep.failed(name, {"args": args, "residual": r},
                              {"sample": k})
    return rep.passed(name, {"samples": samples, "exact": True})


# -- classification --------------------------------------------------------

def trace_pairing_residual(ts, x, y):
    """tr(p(x@x) p(y@y)) - 24 (q(x,x,y,y) - 2 b(y,x)^2); identically zero
    exactly for nondegenerate systems."""
    lhs = trace_product(ts.p_map(x, x), ts.p_map(y, y))
    byx = ts.b.apply(y, x)
    return lhs - 24 * (ts.q4(x, x, y, y) - 2 * byx * byx)


def degeneracy_witness_pair(ts):
    """For the symplectic-pair family, a deterministic pair violating the
    trace pairing identity: x = (0, e0, e1, 0), y = (0, e2, e3, 0)."""
    w = ts.meta.get("w_dim")
    if w is None or w < 4:
        return None
    n = ts.n
    x = zeros(n)
    y = zeros(n)
    x[1], x[2 + w] = mpq(1), mpq(1)        # j = e0, j' = e1; s(j, j') = 1
    y[3], y[4 + w] = mpq(1), mpq(1)        # k = e2, k' = e3; cross terms 0
    return x, y


def classify(ts, config=None):
    """Degenerate or nondegenerate, by the trace pairing identity.

    A violating pair certifies degeneracy exactly.  Absence of a violation
    is graded evidence for nondegeneracy: exact random pairs by default,
    plus an exhaustive mod-p sweep of all basis pairs with
    config.exhaustive.  Returns (label, CheckResult).
    """
    config = config or rep.RunConfig()
    rng = random.Random(config.seed)
    pairs = []
    w = degeneracy_witness_pair(ts)
    if w is not None:
        pairs.append(w)
    for _ in range(config.samples):
        pairs.append((random_int_vector(ts.n, rng, -4, 4),
                      random_int_vector(ts.n, rng, -4, 4)))
    for k, (x, y) in enumerate(pairs):
        r = trace_pairing_residual(ts, x, y)
        if r != 0:
            res = rep.passed("trace-pairing-criterion",
                             {"structured_witness": k == 0 and w is not None,
                              "exact": True},
                             {"x": x, "y": y, "residual": r})
            res.evidence["classification"] = "degenerate"
            return "degenerate", res
    evidence = {"classification": "nondegenerate", "samples": len(pairs),
                "exact": True, "exhaustive": False}
    if config.exhaustive:
        from . import exhaustive
        sweep = exhaustive.trace_pairing_exhaustive_mod_p(ts, config)
        if sweep.status == rep.FAIL:
            # the sweep confirms modular hits exactly over Q before
            # reporting them, so this is a certificate of degeneracy
            evidence = {"classification": "degenerate",
                        "polarized_basis_witness": True}
            return "degenerate", rep.passed("trace-pairing-criterion",
                                            evidence, sweep.witness)
        evidence.update(sweep.evidence)
        evidence["exhaustive"] = True
    return "nondegenerate", rep.passed("trace-pairing-criterion", evidence)


# -- diagnostics for the degenerate family ---------------------------------

def _ms_parts(ts, x):
    w = ts.meta["w_dim"]
    return x[0], x[1:1 + w], x[1 + w:1 + 2 * w], x[1 + 2 * w]


def _ms_s(ts):
    if "s" not in ts.meta:
        ts.meta["s"] = _recover_s(ts)
    return ts.meta["s"]


def ms_det(ts, x):
    """det(x) = alpha beta - s(j, j')."""
    alpha, j, jp, beta = _ms_parts(ts, x)
    return alpha * beta - _ms_s(ts).apply(j, jp)


def ms_wdet(ts, x):
    """The weighted determinant 3 alpha beta - s(j, j')."""
    alpha, j, jp, beta = _ms_parts(ts, x)
    return 3 * alpha * beta - _ms_s(ts).apply(j, jp)


def ms_det_lin(ts, x, y):
    """The linearized determinant det(x + y) - det(x) - det(y)."""
    return ms_det(ts, vadd(x, y)) - ms_det(ts, x) - ms_det(ts, y)


def _recover_s(ts):
    w = ts.meta["w_dim"]
    return SkewForm([[ts.b.gram[1 + r][1 + w + r2] for r2 in range(w)]
                     for r in range(w)])


def ms_diagnostics(ts, x, y):
    """The closed-form trace computation for the symplectic-pair family:

        (1/8) tr(p(x@x) p(y@y)) = 3 q(x,x,y,y) - b(y,x)^2
                                  + (w - 7) det(x) det(y) - 5 det(x,y)^2

    and the remainder against (1/8 of) the trace pairing identity,

        5 b(x,y)^2 + (w - 7) det(x) det(y) - 5 det(x,y)^2,

    which is what a violating pair makes nonzero.  The det(x)det(y)
    coefficient is 20 in the classical w = 27 presentation; the w-linear
    term comes from the trace of the identity on each W block.  Returns a
    dict of the values plus an exact check of the closed form.
    """
    if "w_dim" not in ts.meta:
        raise ValueError("diagnostics only apply to the symplectic-pair kind")
    cw = mpq(ts.meta["w_dim"] - 7)
    tr = trace_product(ts.p_map(x, x), ts.p_map(y, y))
    dx, dy = ms_det(ts, x), ms_det(ts, y)
    dxy = ms_det_lin(ts, x, y)
    byx = ts.b.apply(y, x)
    bxy = ts.b.apply(x, y)
    closed = 3 * ts.q4(x, x, y, y) - byx * byx + cw * dx * dy - 5 * dxy * dxy
    remainder = 5 * bxy * bxy + cw * dx * dy - 5 * dxy * dxy
    return {
        "trace": tr,
        "closed_form": closed,
        "closed_form_matches": tr == 8 * closed,
        "det_coefficient": cw,
        "det_x": dx, "det_y": dy, "det_lin": dxy,
        "wdet_x": ms_wdet(ts, x), "wdet_y": ms_wdet(ts, y),
        "remainder": remainder,
        "trace_pairing_residual": trace_pairing_residual(ts, x, y),
    }


# -- maps of the degenerate family -----------------------------------------

def varpi_matrix(ts):
    """The isometry (alpha, j; j', beta) -> (-beta, j'; j, alpha) of the
    symplectic-pair system."""
    w = ts.meta["w_dim"]
    n = ts.n
    m = [[mpq(0)] * n for _ in range(n)]
    m[0][n - 1] = mpq(-1)
    m[n - 1][0] = mpq(1)
    for r in range(w):
        m[1 + r][1 + w + r] = mpq(1)
        m[1 + w + r][1 + r] = mpq(1)
    return m


def s_adjoint(s, phi):
    """sigma(phi) with s(phi(w), w') = s(w, sigma(phi)(w'))."""
    from .linalg import inverse, mat_mul, transpose
    return mat_mul(s.gram_inv, mat_mul(transpose(phi), s.gram))


def f_matrix(ts, c, u, phi):
    """The invertible map

        (alpha, j; j', beta) -> (c alpha, phi(j);
                                 alpha u + dagger(phi)(j'),
                                 (1/c)(beta + s(phi(j), u)))

    of the symplectic-pair system, with dagger(phi) = sigma(phi)^{-1};
    an isometry for every (c, u, phi) with c != 0 and phi invertible."""
    from .linalg import inverse, mat_vec
    c = mpq(c)
    if c == 0:
        raise ValueError("c must be invertible")
    s = _ms_s(ts)
    w = s.dim
    n = ts.n
    dag = inverse(s_adjoint(s, phi))
    m = [[mpq(0)] * n for _ in range(n)]
    m[0][0] = c
    for r in range(w):
        for r2 in range(w):
            m[1 + r][1 + r2] = mpq(phi[r][r2])
            m[1 + w + r][1 + w + r2] = dag[r][r2]
        m[1 + w + r][0] = mpq(u[r])
    # beta row: (1/c) beta + (1/c) s(phi(j), u)
    m[n - 1][n - 1] = 1 / c
    # s(phi(j), u) = sum_r j_r s(phi(e_r), u) = sum_r j_r (phi^T S u)_r
    su_phi = mat_vec([list(row) for row in zip(*phi)],
                     mat_vec(s.gram, [mpq(x) for x in u]))
    for r in range(w):
        m[n - 1][1 + r] = su_phi[r] / c
    return m


def f_compose_params(ts, params1, params2):
    """(c, u, phi)(d, v, psi) = (cd, d u + dagger(phi)(v), phi psi)."""
    from .linalg import inverse, mat_mul, mat_vec
    s = _ms_s(ts)
    c, u, phi = params1
    d, v, psi = params2
    dag = inverse(s_adjoint(s, phi))
    u2 = vadd(vscale(mpq(d), [mpq(x) for x in u]),
              mat_vec(dag, [mpq(x) for x in v]))
    return (mpq(c) * mpq(d), u2, mat_mul(phi, psi))


def is_similarity(ts, g, rng=None, samples=25):
    """The multiplier lambda if g is a similarity of ts (checked exactly on
    random triples), else None.  Multiplier 1 means isometry."""
    from .linalg import mat_vec
    rng = rng or random.Random(0)
    n = ts.n
    x0 = random_int_vector(n, rng, -3, 3)
    y0 = random_int_vector(n, rng, -3, 3)
    num = ts.b.apply(mat_vec(g, x0), mat_vec(g, y0))
    den = ts.b.apply(x0, y0)
    if den == 0 or num == 0:
        return None
    lam = num / den
    for _ in range(samples):
        x = random_int_vector(n, rng, -3, 3)
        y = random_int_vector(n, rng, -3, 3)
        z = random_int_vector(n, rng, -3, 3)
        gx, gy, gz = mat_vec(g, x), mat_vec(g, y), mat_vec(g, z)
        if ts.b.apply(gx, gy) != lam * ts.b.apply(x, y):
            return None
        if ts.t3(gx, gy, gz) != vscale(lam, mat_vec(g, ts.t3(x, y, z))):
            return None
    return lam


def is_isometry(ts, g, rng=None, samples=25):
    return is_similarity(ts, g, rng, samples) == 1
