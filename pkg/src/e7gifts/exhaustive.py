"""Exhaustive multilinearized identity checks over several random primes.

The defining identity and the trace-pairing criterion are degree-4 in x,
so over a field of characteristic 0 each is equivalent to the vanishing
of its full polarization on all basis tuples.  The polarized tensors are
integer-denominator rationals; we sweep every basis tuple modulo several
random primes below 2^23 with float64 BLAS (all intermediates exact, see
the `modular` module).  A nonzero value mod p certifies a nonzero value
over Q, and every modular hit is re-evaluated exactly with rational
arithmetic before it is reported, so failures carry exact witnesses.
"""

import itertools
import random
from math import comb

import numpy as np
from gmpy2 import mpq

from . import modular
from . import report as rep
from .linalg import unit, vadd, vscale, vsub

# h-slab width for the defining-identity sweep; keeps the accumulator
# (distinct 4-tuples) x (slab) x (dim) comfortably under a gigabyte
H_SLAB = 4

_RETRIES = 3


def _ordered_t_mod(ts, p):
    """The full ordered t tensor mod p: T[i,j,k,a] = t(e_i,e_j,e_k)_a."""
    n = ts.n
    T = np.zeros((n, n, n, n))
    for i, j, k, items in ts.t_flat:
        for a, v in items:
            T[i, j, k, a] = modular.reduce_rational(v, p)
    return T


def _gram_mod(ts, p):
    return modular.to_mod_np(ts.b.gram, p)


def _triple_rows_mod(ts, triples, p):
    """U[r] = t(e_i,e_j,e_k) mod p for the r-th stored triple."""
    U = np.zeros((len(triples), ts.n))
    for r, tri in enumerate(triples):
        for a, v in ts.t_sym[tri].items():
            U[r, a] = modular.reduce_rational(v, p)
    return U


def _fts3_groups(ts, triples):
    """Key table for the polarized defining identity.

    Each stored triple r together with a fourth index g contributes to the
    sorted 4-tuple key sorted(triple + (g,)), with multiplicity the number
    of positions of the key holding g.  Returns (keys, key_ids, mults)
    with key_ids, mults of shape (n, len(triples)).
    """
    n = ts.n
    index = {}
    keys = []
    key_ids = np.empty((n, len(triples)), dtype=np.int64)
    mults = np.empty((n, len(triples)), dtype=np.float64)
    for g in range(n):
        for r, tri in enumerate(triples):
            key = tuple(sorted(tri + (g,)))
            kid = index.get(key)
            if kid is None:
                kid = index[key] = len(keys)
                keys.append(key)
            key_ids[g, r] = kid
            mults[g, r] = tri.count(g) + 1
    return keys, key_ids, mults


def _fts3_polarized_exact(ts, key, h):
    """The exact polarized defining-identity residual: the sum over the
    four positions g of

        t(t(rest), e_g, e_h) - b(e_h, e_g) t(rest) - q(e_h, rest) e_g.
    """
    n = ts.n
    eh = unit(n, h)
    out = [mpq(0)] * n
    for pos in range(4):
        g = key[pos]
        rest = [unit(n, i) for i in key[:pos] + key[pos + 1:]]
        u = ts.t3(*rest)
        term = vsub(ts.t3(u, unit(n, g), eh),
                    vadd(vscale(ts.b.apply_basis(h, unit(n, g)), u),
                         vscale(ts.b.apply(eh, u), unit(n, g))))
        out = vadd(out, term)
    return out


def _fts3_sweep_one_prime(ts, triples, keys, key_ids, mults, p):
    """All modular hits (key, h, coordinate) of the polarized defining
    identity mod p."""
    n = ts.n
    T = _ordered_t_mod(ts, p)
    Bg = _gram_mod(ts, p)
    U = _triple_rows_mod(ts, triples, p)
    # QV[r, h] = b(e_h, t(triple_r))
    QV = modular.matmul_mod(U, Bg.T, p)
    hits = []
    for h0 in range(0, n, H_SLAB):
        hs = min(H_SLAB, n - h0)
        acc = np.zeros((len(keys), hs, n))
        for g in range(n):
            # C[r, h, a] = (t(t(rest_r), e_g, e_h) - b(e_h,e_g) t(rest_r)
            #               - q(e_h, rest_r) e_g)_a  mod p
            Tg = T[:, g, h0:h0 + hs, :].reshape(n, hs * n)
            C = modular.matmul_mod(U, Tg, p).reshape(-1, hs, n)
            C -= Bg[h0:h0 + hs, g][None, :, None] * U[:, None, :]
            C[:, :, g] -= QV[:, h0:h0 + hs]
            C %= p
            C *= mults[g][:, None, None]
            np.add.at(acc, key_ids[g], C)
        acc %= p
        for kid, h, a in zip(*np.nonzero(acc)):
            hits.append((keys[int(kid)], h0 + int(h), int(a)))
    return hits


def fts3_exhaustive_mod_p(ts, config):
    """The fully polarized defining identity on every sorted basis
    4-tuple, every probe index and every coordinate, modulo
    config.primes random primes.  Hits are confirmed exactly over Q.
    """
    n = ts.n
    rng = random.Random((config.seed << 8) ^ 0x3A5)
    triples = sorted(ts.t_sym)
    keys, key_ids, mults = _fts3_groups(ts, triples)
    used = []
    for _ in range(config.primes):
        hits = None
        for _attempt in range(_RETRIES):
            p = modular.blas_primes(1, rng)[0]
            try:
                hits = _fts3_sweep_one_prime(
                    ts, triples, keys, key_ids, mults, p)
                break
            except modular.BadPrime:
                continue
        if hits is None:
            return rep.inconclusive("triple-identity-exhaustive",
                                    {"note": "all primes hit denominators"})
        used.append(p)
        if hits:
            key, h, a = hits[0]
            resid = _fts3_polarized_exact(ts, key, h)
            assert resid[a] != 0, "modular hit must be nonzero over Q"
            return rep.failed(
                "triple-identity-exhaustive",
                {"tuple": list(key), "probe_index": h, "coordinate": a,
                 "residual": resid[a]},
                {"prime": p, "confirmed_exactly": True})
    return rep.passed(
        "triple-identity-exhaustive",
        {"tuples_checked": comb(n + 3, 4),
         "nonzero_support_tuples": len(keys),
         "primes": used, "exhaustive": True})


# -- trace pairing sweep ----------------------------------------------------

def _p_ops_mod(ts, p):
    """M[i, j] = the matrix of p(e_i @ e_j) mod p, shape (n, n, n, n)
    with the last two axes the (row, column) of the operator."""
    n = ts.n
    Bg = _gram_mod(ts, p)
    M = _ordered_t_mod(ts, p).transpose(0, 1, 3, 2).copy()
    idx = np.arange(n)
    # row a = j picks up -b(e_k, e_i), row a = i picks up -b(e_k, e_j)
    M[:, idx, idx, :] -= Bg.T[:, None, :]
    M[idx, :, idx, :] -= Bg.T[None, :, :]
    return M % p, Bg


def _pair_quartic_mod(ts, iu, ju, pair_id, p):
    """Q[(i,j),(k,l)] = q(e_i,e_j,e_k,e_l) mod p on symmetric pairs."""
    npair = len(iu)
    Q = np.zeros((npair, npair))
    for key, val in ts.q_sym.items():
        v = modular.reduce_rational(val, p)
        for perm in set(itertools.permutations(key)):
            a = pair_id[tuple(sorted(perm[:2]))]
            b = pair_id[tuple(sorted(perm[2:]))]
            Q[a, b] = v
    return Q


def _trace_pairing_polarized_exact(ts, i, j, k, l):
    """tr(p(e_i@e_j) p(e_k@e_l)) - 24 q_{ijkl}
    + 24 (b(e_k,e_i) b(e_l,e_j) + b(e_l,e_i) b(e_k,e_j)), the full
    polarization of the trace pairing residual (up to the symmetrization
    constant)."""
    from .fts import trace_product
    n = ts.n
    ei, ej, ek, el = (unit(n, m) for m in (i, j, k, l))
    lhs = trace_product(ts.p_map(ei, ej), ts.p_map(ek, el))
    bki = ts.b.apply_basis(k, ei)
    blj = ts.b.apply_basis(l, ej)
    bli = ts.b.apply_basis(l, ei)
    bkj = ts.b.apply_basis(k, ej)
    return lhs - 24 * ts.q4(ei, ej, ek, el) + 24 * (bki * blj + bli * bkj)


def _trace_sweep_one_prime(ts, p):
    n = ts.n
    M, Bg = _p_ops_mod(ts, p)
    iu, ju = np.triu_indices(n)
    pair_id = {(int(i), int(j)): m for m, (i, j) in enumerate(zip(iu, ju))}
    P = M[iu, ju].reshape(len(iu), n * n)
    PT = M[iu, ju].transpose(0, 2, 1).reshape(len(iu), n * n)
    # G[a, b] = tr(p_a p_b), as a flattened-row dot against the transpose
    G = modular.matmul_mod(P, PT.T, p)
    Q = _pair_quartic_mod(ts, iu, ju, pair_id, p)
    # rows are the x-pair (i,j), columns the y-pair (k,l); the correction
    # is the polarization of -48 b(y,x)^2 on symmetric pairs
    Bki = Bg[np.ix_(iu, iu)].T
    Blj = Bg[np.ix_(ju, ju)].T
    Bli = Bg[np.ix_(ju, iu)].T
    Bkj = Bg[np.ix_(iu, ju)].T
    corr = (Bki * Blj + Bli * Bkj) % p
    diff = (G - 24 * Q + 24 * corr) % p
    hits = []
    for a, b in zip(*np.nonzero(diff)):
        i, j = int(iu[a]), int(ju[a])
        k, l = int(iu[b]), int(ju[b])
        hits.append((i, j, k, l))
    return hits


def trace_pairing_exhaustive_mod_p(ts, config):
    """The polarized trace pairing identity

        tr(p(e_i@e_j) p(e_k@e_l)) = 24 q_{ijkl}
            - 24 (b(e_k,e_i) b(e_l,e_j) + b(e_l,e_i) b(e_k,e_j))

    on every pair of symmetric basis pairs, modulo config.primes random
    primes.  A hit, confirmed exactly over Q, certifies that the identity
    fails, i.e. degeneracy; a clean sweep over several primes is strong
    (though one-sided) evidence that the identity holds identically.
    """
    n = ts.n
    rng = random.Random((config.seed << 8) ^ 0x7C1)
    npair = n * (n + 1) // 2
    used = []
    for _ in range(config.primes):
        hits = None
        for _attempt in range(_RETRIES):
            p = modular.blas_primes(1, rng)[0]
            try:
                hits = _trace_sweep_one_prime(ts, p)
                break
            except modular.BadPrime:
                continue
        if hits is None:
            return rep.inconclusive("trace-pairing-exhaustive",
                                    {"note": "all primes hit denominators"})
        used.append(p)
        if hits:
            i, j, k, l = hits[0]
            resid = _trace_pairing_polarized_exact(ts, i, j, k, l)
            assert resid != 0, "modular hit must be nonzero over Q"
            return rep.failed(
                "trace-pairing-exhaustive",
                {"x_pair": [i, j], "y_pair": [k, l], "residual": resid},
                {"prime": p, "confirmed_exactly": True})
    return rep.passed(
        "trace-pairing-exhaustive",
        {"pair_tuples_checked": npair * npair, "primes": used,
         "exhaustive": True})
