"""Gifts: a degree-56 matrix algebra with a symplectic involution sigma
and a linear map pi, the axiom suite, and the translation to and from
triple systems.

A is always carried in a faithful matrix representation (56x56 over the
base field for split gifts; descended gifts supply an explicit basis of
the fixed subalgebra inside the extended matrix algebra).  The reduced
trace is the matrix trace in the representation.

The identification phi_b : V (x) V -> End(V) is phi_b(x (x) y) w
= x b(y, w).  Elements of A (x) A are handled in phi_b-factored form:
a list of ((x1, x2), (x3, x4)) vector-pair pairs standing for
sum phi_b(x1 (x) x2) (x) phi_b(x3 (x) x4); this keeps the sandwich map
evaluable without materializing 3136^2 tensors.
"""

import random

import numpy as np
from gmpy2 import mpq

from . import modular
from . import report as rep
from .fts import TripleSystem, trace_product
from .linalg import (mat_mul, mat_sub, mat_vec, span_rref, trace,
                     transpose, unit)


def random_matrix(n, rng, lo=-3, hi=3):
    return [[mpq(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]


class Gift:
    """(A, sigma, pi) with A a degree-n matrix algebra, sigma a
    symplectic involution and pi a linear map on A.  Trd is the matrix
    trace of the representation."""

    def __init__(self, n, sigma, pi, mul=None, trd=None, basis=None,
                 kind="custom", meta=None):
        self.n = n
        self.sigma = sigma
        self.pi = pi
        self.mul = mul or mat_mul
        self.trd = trd or trace
        self.basis = basis
        self.kind = kind
        self.meta = dict(meta or {})

    @property
    def b(self):
        """The skew form sigma is adjoint to, when known."""
        return self.meta.get("b")

    def random_element(self, rng, lo=-3, hi=3):
        if self.basis is None:
            return random_matrix(self.n, rng, lo, hi)
        out = [[0 * self.basis[0][0][0]] * self.n for _ in range(self.n)]
        for m in self.basis:
            c = mpq(rng.randint(lo, hi))
            if c:
                for r in range(self.n):
                    for s in range(self.n):
                        out[r][s] = out[r][s] + c * m[r][s]
        return out

    def random_skew(self, rng, lo=-3, hi=3):
        """A random sigma-skew element, as f - sigma(f)."""
        f = self.random_element(rng, lo, hi)
        return mat_sub(f, self.sigma(f))

    def __repr__(self):
        return "Gift(kind=%r, degree=%d)" % (self.kind, self.n)


# -- the identification phi_b ------------------------------------------------

def phi_b(bform, x, y):
    """The matrix of w -> x b(y, w)."""
    row = [-bform.apply_basis(c, y) for c in range(bform.dim)]
    # b(y, e_c) = -b(e_c, y)
    return [[xr * rc for rc in row] for xr in x]


def phi_b_inv_columns(bform, m):
    """Vectors c_0, ..., c_{n-1} with m = sum_k phi_b(c_k (x) e_k);
    they are the columns of m B^{-1}."""
    c = mat_mul(m, bform.gram_inv)
    return [[c[r][k] for r in range(len(c))] for k in range(len(c))]


def _pi_from_ts(ts):
    """pi = p phi_b^{-1} as a map on matrices, evaluated in one pass over
    the stored t tensor (cost scales with the sparsity of m B^{-1})."""
    bform = ts.b
    n = ts.n

    def pi(m):
        cols = phi_b_inv_columns(bform, m)
        cmat = {}
        for k, ck in enumerate(cols):
            for i, v in enumerate(ck):
                if v:
                    cmat[i, k] = v
        out = [[mpq(0)] * n for _ in range(n)]
        # sum_k t(c_k, e_k, e_w)_a
        for i, j, w, items in ts.t_flat:
            cv = cmat.get((i, j))
            if cv:
                row_w = w
                for a, val in items:
                    out[a][row_w] += cv * val
        # minus b(e_w, c_k) (e_k)_a + b(e_w, e_k) (c_k)_a
        gram = bform.gram
        for (i, k), v in cmat.items():
            # b(e_w, c_k) delta_{a k}: column-w sweep on row a = k
            rowk = out[k]
            for w in range(n):
                g = gram[w][i]
                if g:
                    rowk[w] -= g * v
            # b(e_w, e_k) (c_k)_a
            rowa = out[i]
            for w in range(n):
                g = gram[w][k]
                if g:
                    rowa[w] -= g * v
        return out

    return pi


def end_of(ts):
    """The gift (End(V), sigma, pi) of a triple system: sigma is the
    b-adjoint involution and pi = p phi_b^{-1}."""
    if ts.b.gram_inv is None:
        raise ValueError("need a nondegenerate pairing")
    bform = ts.b
    gram, ginv = bform.gram, bform.gram_inv

    def sigma(f):
        return mat_mul(ginv, mat_mul(transpose(f), gram))

    return Gift(ts.n, sigma, _pi_from_ts(ts), kind="end-" + ts.kind,
                meta={"ts": ts, "b": bform})


def gift_to_fts(g, bform=None):
    """The triple system of a split gift:
    t(x, y, w) = pi(phi_b(x (x) y)) w + b(w, x) y + b(w, y) x.

    The form sigma is adjoint to must be known (supplied or carried on
    the gift); recovering it from sigma alone is a linear problem with a
    scalar ambiguity and is not attempted.
    """
    bform = bform or g.b
    if bform is None:
        raise ValueError("need the skew form sigma is adjoint to")
    n = g.n
    t_sym = {}
    for i in range(n):
        ei = unit(n, i)
        for j in range(i, n):
            m = g.pi(phi_b(bform, ei, unit(n, j)))
            for k in range(j, n):
                tvec = {}
                for a in range(n):
                    v = m[a][k]
                    if a == j:
                        v += bform.gram[k][i]
                    if a == i:
                        v += bform.gram[k][j]
                    if v:
                        tvec[a] = v
                if tvec:
                    t_sym[(i, j, k)] = tvec
    return TripleSystem(bform, t_sym=t_sym, kind="from-" + g.kind)


# -- sigma_2 and the sandwich map -------------------------------------------

def sand_apply(g, u, x):
    """Sand(u)(x) for u in phi_b-factored form: Sand(a (x) b)(x) = a x b,
    and phi_b(x1 (x) x2) x phi_b(x3 (x) x4) = b(x2, x x3)
    phi_b(x1 (x) x4)."""
    bform = g.b
    n = g.n
    out = [[mpq(0)] * n for _ in range(n)]
    for (x1, x2), (x3, x4) in u:
        c = bform.apply(x2, mat_vec(x, x3))
        if c:
            row = [-c * bform.apply_basis(m, x4) for m in range(n)]
            for r, x1r in enumerate(x1):
                if x1r:
                    orow = out[r]
                    for m in range(n):
                        if row[m]:
                            orow[m] += x1r * row[m]
    return out


def sigma2_split(g, u):
    """sigma_2 on A (x) A for a split gift, in phi_b-factored form:
    phi_b(x1 (x) x2) (x) phi_b(x3 (x) x4) maps to
    - phi_b(x1 (x) x3) (x) phi_b(x2 (x) x4).  Defined implicitly by
    Sand(sigma_2(u))(x) = Sand(u)(sigma(x))."""
    if g.b is None:
        raise ValueError("sigma_2 in this form needs a split representation")
    return [((x1, x3), ([-c for c in x2], x4)) for (x1, x2), (x3, x4) in u]


def phi_factored(g, m):
    """A matrix as a phi_b-factored sum sum_k phi_b(c_k (x) e_k),
    dropping zero columns."""
    cols = phi_b_inv_columns(g.b, m)
    return [(ck, unit(g.n, k)) for k, ck in enumerate(cols)
            if any(v for v in ck)]


# -- axiom suite ------------------------------------------------------------

G2_BUDGET = 200


def _mat_is_zero(m):
    return all(not x for row in m for x in row)


def check_gift_axioms(g, config=None, budget=G2_BUDGET):
    """The five defining conditions, sampled:

    G1  sigma pi(a) = pi sigma(a) = -pi(a);
    G2  a pi(a) != 2 a^2 for some skew a (randomized witness search);
    G3  pi(pi(a) a) = 0 for skew a;
    G4  (pi^ + sigma^ - id^) = -(pi^ + sigma^ - id^) sigma_2 on random
        decomposables (split representation only);
    G5  Trd(pi(a) pi(a')) = 24 Trd(pi(a) a').
    """
    config = config or rep.RunConfig()
    rng = random.Random(config.seed)
    n = g.n
    out = []

    ok = True
    for k in range(config.samples):
        a = g.random_element(rng)
        pa = g.pi(a)
        neg = [[-x for x in row] for row in pa]
        if g.sigma(pa) != neg or g.pi(g.sigma(a)) != neg:
            out.append(rep.failed("G1-involution-anticompatibility",
                                  {"a": a}, {"sample": k}))
            ok = False
            break
    if ok:
        out.append(rep.passed("G1-involution-anticompatibility",
                              {"samples": config.samples, "exact": True}))

    witness = None
    for k in range(budget):
        a = g.random_skew(rng)
        lhs = g.mul(a, g.pi(a))
        rhs = [[2 * x for x in row] for row in g.mul(a, a)]
        if lhs != rhs:
            witness = (k, a)
            break
    if witness is None:
        out.append(rep.inconclusive("G2-nondegeneracy-witness",
                                    {"budget": budget,
                                     "note": "no witness found"}))
    else:
        out.append(rep.passed("G2-nondegeneracy-witness",
                              {"tries": witness[0] + 1},
                              {"a": witness[1]}))

    ok = True
    for k in range(config.samples):
        a = g.random_skew(rng)
        if not _mat_is_zero(g.pi(g.mul(g.pi(a), a))):
            out.append(rep.failed("G3-pi-nilpotence", {"a": a},
                                  {"sample": k}))
            ok = False
            break
    if ok:
        out.append(rep.passed("G3-pi-nilpotence",
                              {"samples": config.samples, "exact": True}))

    out.append(_check_g4(g, rng, config.samples))
    out.append(_check_g5(g, rng, config.samples))
    return out


def _g4_side(g, a, bb):
    """(pi^ + sigma^ - id^)(a (x) bb) = pi(a) bb + sigma(a) bb - a bb.

    With phi_b(x (x) y) w = x b(y, w) and sigma the b-adjoint, this is
    the combination whose sigma_2-antisymmetry is exactly the symmetry
    of t in its last two slots; expanding on decomposables shows the
    minus-sigma^ variant differs by terms in b alone and fails for
    every triple system.
    """
    m = [[u + v for u, v in zip(r1, r2)]
         for r1, r2 in zip(g.pi(a), g.sigma(a))]
    return mat_sub(g.mul(m, bb), g.mul(a, bb))


def _check_g4(g, rng, samples):
    if g.b is None:
        sg = g.meta.get("split_gift")
        if sg is not None:
            # the identity lives on decomposables of the split
            # representation, so check it there after extending scalars
            res = _check_g4(sg, rng, samples)
            res.evidence["after_scalar_extension"] = True
            return res
        return rep.inconclusive(
            "G4-hat-sigma2-symmetry",
            {"note": "needs a split representation; extend scalars first"})
    n = g.n
    from .linalg import random_int_vector
    for k in range(samples):
        xs = [random_int_vector(n, rng, -3, 3) for _ in range(4)]
        u = [((xs[0], xs[1]), (xs[2], xs[3]))]
        lhs = _g4_side(g, phi_b(g.b, xs[0], xs[1]), phi_b(g.b, xs[2], xs[3]))
        (y1, y3), (y2n, y4) = sigma2_split(g, u)[0]
        # minus the hat applied to sigma_2(u)
        rhs = _g4_side(g, phi_b(g.b, y1, y3),
                       phi_b(g.b, [-c for c in y2n], y4))
        if lhs != rhs:
            return rep.failed("G4-hat-sigma2-symmetry",
                              {"vectors": xs}, {"sample": k})
    return rep.passed("G4-hat-sigma2-symmetry",
                      {"samples": samples, "exact": True,
                       "on": "decomposables"})


def _check_g5(g, rng, samples):
    for k in range(samples):
        a = g.random_skew(rng)
        a2 = g.random_skew(rng)
        pa = g.pi(a)
        lhs = g.trd(g.mul(pa, g.pi(a2)))
        # writing this out on decomposables gives exactly the trace
        # pairing identity of the nondegeneracy criterion; with these
        # orientation conventions the proportionality constant is +24
        rhs = 24 * g.trd(g.mul(pa, a2))
        if lhs != rhs:
            return rep.failed("G5-trace-pairing",
                              {"a": a, "a_prime": a2, "lhs": lhs,
                               "rhs": rhs}, {"sample": k})
    return rep.passed("G5-trace-pairing",
                      {"samples": samples, "exact": True})


def skew_sym_dims(g, rng=None, samples=10):
    """(dim Skew, dim Sym) for a split gift.

    f -> Bf is a linear bijection carrying Skew(A, sigma) onto the
    symmetric matrices and Sym(A, sigma) onto the skew ones, so the
    dimensions are n(n+1)/2 and n(n-1)/2; the characterization is
    verified on random elements.
    """
    if g.b is None:
        raise ValueError("needs a split representation")
    rng = rng or random.Random(0)
    n = g.n
    gram = g.b.gram
    for _ in range(samples):
        f = random_matrix(n, rng)
        bf = mat_mul(gram, f)
        skew = g.sigma(f) == [[-x for x in row] for row in f]
        assert skew == (bf == transpose(bf))
        sym = g.sigma(f) == f
        assert sym == (bf == [[-x for x in row] for row in transpose(bf)])
    return n * (n + 1) // 2, n * (n - 1) // 2


# -- derivations ------------------------------------------------------------

def gd_residual(g, f, a):
    """pi(f a) - pi(a f) - f pi(a) + pi(a) f; zero when f is a
    derivation."""
    pa = g.pi(a)
    return mat_sub(mat_sub(g.pi(g.mul(f, a)), g.pi(g.mul(a, f))),
                   mat_sub(g.mul(f, pa), g.mul(pa, f)))


def pi_matrix_mod(ts, p):
    """The 3136x3136 matrix of pi = p phi_b^{-1} mod p, float64 exact.

    pi(E_{ab}) = sum_k B^{-1}[b, k] p(e_a (x) e_k); columns indexed by
    (a, b), rows by the (row, col) of the output matrix.
    """
    from .exhaustive import _p_ops_mod
    n = ts.n
    M, _ = _p_ops_mod(ts, p)
    binv = modular.to_mod_np(ts.b.gram_inv, p)
    # X[a, r, c, b] = sum_k M[a, k, r, c] binv[b, k]; 56-term dot
    # products of values < p stay below 2^53
    X = np.tensordot(M, binv, axes=([1], [1])) % p
    return X.transpose(1, 2, 0, 3).reshape(n * n, n * n)


def derivation_suite(g, config=None):
    """Sampled membership im pi <= Der plus the modular rank of pi.

    The rank is computed mod config.primes random primes only (no exact
    3136x3136 elimination); agreement across primes is the evidence
    grade, and each modular rank is a certified lower bound over Q.
    """
    config = config or rep.RunConfig()
    rng = random.Random(config.seed)
    out = []
    ok = True
    for k in range(config.samples):
        a = g.random_element(rng)
        a2 = g.random_element(rng)
        if not _mat_is_zero(gd_residual(g, g.pi(a), a2)):
            out.append(rep.failed("pi-image-derivation-property",
                                  {"a": a, "probe": a2}, {"sample": k}))
            ok = False
            break
    if ok:
        out.append(rep.passed("pi-image-derivation-property",
                              {"samples": config.samples, "exact": True}))

    ts = g.meta.get("ts")
    if ts is None:
        out.append(rep.inconclusive(
            "pi-rank", {"note": "rank path needs a triple-system backing"}))
        return out
    ranks = {}
    for p in modular.blas_primes(config.primes, rng):
        ranks[p] = modular.rank_mod_p_np(pi_matrix_mod(ts, p), p)
    vals = sorted(set(ranks.values()))
    out.append(rep.passed("pi-rank",
                          {"rank": max(vals), "per_prime": ranks,
                           "agreement": len(vals) == 1,
                           "primes": sorted(ranks)}))
    return out


# -- right ideals -----------------------------------------------------------

class RightIdeal:
    """A right ideal given by a spanning set of matrices; rank is
    dim_F(I) / deg A.

    For split gifts every right ideal is Hom(V, U) = {f : im f <= U};
    when built through `hom_ideal` the ideal also carries a basis of U
    (`u_basis`), which the predicate computations exploit: the spanning
    single-column matrices are phi_b-decomposables, so products, sigma
    and pi reduce to scalars times p(x (x) x') for x, x' in the U basis.
    """

    def __init__(self, g, spanning, u_basis=None):
        self.g = g
        self.spanning = [m for m in spanning]
        self.space = span_rref(
            [x for row in m for x in row] for m in spanning)
        self.u_basis = u_basis
        self.u_space = span_rref(u_basis) if u_basis is not None else None

    @property
    def dim(self):
        return self.space.dim

    @property
    def rank(self):
        r, rem = divmod(self.dim, self.g.n)
        if rem:
            raise ValueError("subspace dimension %d is not a multiple of "
                             "the degree" % self.dim)
        return r

    def contains(self, m):
        return self.space.contains([x for row in m for x in row])

    def check_closure(self, rng, samples=10):
        """I . A <= I on random algebra elements against random spanning
        elements."""
        if not self.spanning:
            return True
        for _ in range(samples):
            f = self.g.random_element(rng)
            m = self.spanning[rng.randrange(len(self.spanning))]
            mf = self.g.mul(m, f)
            if self.u_space is not None:
                # membership in Hom(V, U) is column membership in U
                if any(not self.u_space.contains([row[c] for row in mf])
                       for c in range(self.g.n)):
                    return False
            elif not self.contains(mf):
                return False
        return True


def hom_ideal(g, subspace_vectors):
    """The right ideal Hom(V, U) = {f : im f <= U} of a split gift, for
    U spanned by the given vectors; its rank is dim U."""
    n = g.n
    span = []
    for u in subspace_vectors:
        for c in range(n):
            m = [[mpq(0)] * n for _ in range(n)]
            for r in range(n):
                m[r][c] = u[r]
            span.append(m)
    return RightIdeal(g, span, u_basis=[list(map(mpq, u))
                                        for u in subspace_vectors])


def _hom_ideal_predicates(g, ideal):
    """Exact predicates through the U basis.  With u = phi_b(x (x) y)
    and v = phi_b(x' (x) y') spanning Hom(V, U):

        u sigma(v)       = -b(y, y') phi_b(x (x) x'),
        pi(u sigma(v))   = -b(y, y') p(x (x) x'),
        sigma(u) v       = -b(x, x') phi_b(y (x) y'),

    and as y, y' run over a basis dual to the nondegenerate b, some
    b(y, y') is nonzero for every (x, x') pair.  Membership in
    Hom(V, U) is column membership in U.
    """
    ts = g.meta.get("ts")
    basis = ideal.u_basis
    inner = True
    singular = True
    for x in basis:
        for x2 in basis:
            if ts is not None:
                pm = ts.p_map(x, x2)
            else:
                pm = g.pi(phi_b(g.b, x, x2))
            if _mat_is_zero(pm):
                continue
            singular = False
            for c in range(g.n):
                if not ideal.u_space.contains([row[c] for row in pm]):
                    inner = False
                    break
            if not inner:
                break
        if not inner:
            break
    isotropic = all(g.b.apply(x, x2) == 0
                    for x in basis for x2 in basis)
    return {"inner": inner, "singular": singular, "isotropic": isotropic,
            "rank": ideal.rank}


def ideal_predicates(g, ideal, rng=None, samples=10):
    """{inner, singular, isotropic, rank} for a right ideal:
    inner pi(I sigma(I)) <= I; singular pi(I sigma(I)) = 0; isotropic
    sigma(I) I = 0.  Computed exactly on a spanning set."""
    rng = rng or random.Random(0)
    if not ideal.check_closure(rng, samples):
        raise ValueError("input is not closed under right multiplication")
    if ideal.u_basis is not None:
        return _hom_ideal_predicates(g, ideal)
    inner = True
    singular = True
    isotropic = True
    for u in ideal.spanning:
        su = g.sigma(u)
        for v in ideal.spanning:
            sv = g.sigma(v)
            pw = g.pi(g.mul(u, sv))
            if not _mat_is_zero(pw):
                singular = False
                if not ideal.contains(pw):
                    inner = False
            if not _mat_is_zero(g.mul(su, v)):
                isotropic = False
    return {"inner": inner, "singular": singular, "isotropic": isotropic,
            "rank": ideal.rank}
