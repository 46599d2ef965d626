"""Modular (mod-p) arithmetic layers: random primes, modular rank, and
exact integer matrix products via float64 BLAS.

Rank over Q equals rank mod p for all but finitely many primes, and every
modular rank is a certified lower bound for the rational rank.  Two prime
regimes are used:

* generic `rank_modular`: random primes in [2^61, 2^62) (pure-Python
  elimination; meant for modest matrices);
* bulk numpy layers (`rank_modular_big`, `matmul_mod`): random primes
  below 2^23 so that all intermediate products fit exactly in float64 /
  int64.  Evidence is layered over several independent primes.
"""

import random

import numpy as np
from gmpy2 import mpq, mpz, next_prime

# 56 * p^2 < 2^53 keeps a 56-term float64 dot product exact
BLAS_PRIME_LO = 1 << 22
BLAS_PRIME_HI = 1 << 23

BIG_PRIME_LO = 1 << 61
BIG_PRIME_HI = 1 << 62


def random_prime(rng=None, lo=BIG_PRIME_LO, hi=BIG_PRIME_HI):
    rng = rng or random
    return int(next_prime(rng.randrange(lo, hi)))


def random_primes(k, rng=None, lo=BIG_PRIME_LO, hi=BIG_PRIME_HI):
    rng = rng or random
    ps = set()
    while len(ps) < k:
        ps.add(random_prime(rng, lo, hi))
    return sorted(ps)


def blas_primes(k, rng=None):
    return random_primes(k, rng, BLAS_PRIME_LO, BLAS_PRIME_HI)


class BadPrime(Exception):
    """The prime divides a denominator appearing in the input."""


def reduce_rational(x, p):
    """The image of a rational in F_p; raises BadPrime if p | denominator."""
    x = mpq(x)
    num = int(x.numerator) % p
    den = int(x.denominator) % p
    if den == 0:
        raise BadPrime(p)
    return num * pow(den, p - 2, p) % p


def reduce_matrix(m, p):
    return [[reduce_rational(x, p) for x in row] for row in m]


def rank_mod_p(m, p):
    """Rank of a rational matrix over F_p (pure Python elimination).

    Raises BadPrime if p divides any denominator.
    """
    rows = reduce_matrix(m, p)
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rank = 0
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        prow = rows[r]
        for i in range(r + 1, nrows):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def rank_modular(m, primes):
    """max over primes of rank mod p (certified lower bound for rank over Q).

    Primes dividing a denominator in the matrix are skipped and reported.
    Returns (rank, used_primes, skipped_primes).
    """
    best = 0
    used, skipped = [], []
    for p in primes:
        try:
            best = max(best, rank_mod_p(m, p))
            used.append(p)
        except BadPrime:
            skipped.append(p)
    return best, used, skipped


def rank_mod_p_np(m_np, p):
    """Rank mod p of an int64 numpy matrix with entries in [0, p), p < 2^31.

    Vectorized elimination; row updates use int64 products f*row < 2^62.
    """
    m = np.array(m_np, dtype=np.int64) % p
    nrows, ncols = m.shape
    rank = 0
    r = 0
    for c in range(ncols):
        col = m[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = m[r] * inv % p
        below = m[r + 1:, c]
        nzrows = np.nonzero(below)[0]
        if nzrows.size:
            idx = r + 1 + nzrows
            m[idx] = (m[idx] - below[nzrows, None] * m[r][None, :]) % p
        rank += 1
        r += 1
        if r == nrows:
            break
    return rank


def mod_np(a, p):
    """Exact mod-p reduction of a float64 integer array (values < 2^53)."""
    return np.mod(a, p)


def matmul_mod(a, b, p):
    """(a @ b) mod p for float64 integer arrays with entries in [0, p),
    p < 2^23.  The inner dimension is chunked so every partial dot product
    stays below 2^53 and hence is exact in float64.
    """
    k = a.shape[1]
    step = max(1, (1 << 53) // (p * p) - 1)
    out = np.zeros((a.shape[0], b.shape[1]))
    for s in range(0, k, step):
        out += np.mod(a[:, s:s + step] @ b[s:s + step], p)
    return np.mod(out, p)


def to_mod_np(entries, p):
    """Reduce a nested list / dict-of-rationals structure to float64 mod p."""
    if isinstance(entries, dict):
        return {k: reduce_rational(v, p) for k, v in entries.items()}
    arr = np.array([[reduce_rational(x, p) for x in row] for row in entries],
                   dtype=np.float64)
    return arr
