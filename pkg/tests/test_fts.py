"""Triple systems: the degenerate symplectic-pair family, the Albert
systems, classification, exhaustive sweeps, and the invariance gadgets."""

import random

import pytest
from gmpy2 import mpq

from e7gifts import exhaustive, fts
from e7gifts.linalg import mat_eq, mat_mul, random_int_vector, rank_exact
from e7gifts.report import FAIL, PASS, RunConfig

CFG = RunConfig(seed=0, samples=20, primes=1)


def by_name(checks):
    return {c.name: c for c in checks}


@pytest.mark.parametrize("w", [26, 28])
def test_ms_axioms(w):
    ts = fts.build_ms(w)
    res = by_name(fts.check_axioms(ts, CFG))
    assert res["quartic-form-symmetric"].status == PASS
    assert res["quartic-form-symmetric"].evidence.get("exhaustive")
    assert res["quartic-form-nonzero"].status == PASS
    assert res["triple-identity"].status == PASS
    assert res["triple-identity-linearized"].status == PASS
    assert res["trace-quartic-consistency"].status == PASS


def test_ms_classify_degenerate_with_structured_witness():
    ts = fts.build_ms(26)
    label, res = fts.classify(ts, CFG)
    assert label == "degenerate"
    assert res.evidence["structured_witness"]
    # the residual of the structured pair is 8 (w - 7)
    assert res.witness["residual"] == 8 * (26 - 7)


def test_ms_formal_mirror_matches_classical_residual():
    ts = fts.build_ms(27)
    assert ts.meta["formal"]
    label, res = fts.classify(ts, CFG)
    assert label == "degenerate"
    assert res.witness["residual"] == 160


def test_ms_diagnostics_closed_form():
    ts = fts.build_ms(27)
    rng = random.Random(4)
    for _ in range(10):
        x = random_int_vector(ts.n, rng, -3, 3)
        y = random_int_vector(ts.n, rng, -3, 3)
        d = fts.ms_diagnostics(ts, x, y)
        assert d["closed_form_matches"]
        assert d["det_coefficient"] == 20
        # the remainder is exactly one eighth of the criterion residual
        assert 8 * d["remainder"] == d["trace_pairing_residual"]


@pytest.mark.parametrize("kind", ["split", "division"])
def test_albert_axioms_and_classification(kind):
    if kind == "split":
        ts = fts.build_albert()
    else:
        from e7gifts.albert import division_albert
        ts = fts.build_albert(division_albert())
    res = by_name(fts.check_axioms(ts, CFG))
    assert all(c.status == PASS for c in res.values()), res
    label, _ = fts.classify(ts, CFG)
    assert label == "nondegenerate"


def test_albert_quartic_closed_form():
    ts = fts.build_albert()
    rng = random.Random(8)
    for _ in range(5):
        x = random_int_vector(ts.n, rng, -3, 3)
        assert ts.quartic(x) == ts.quartic_value(x)


def test_calibration_recovers_frozen_coefficients():
    assert fts.calibrate_albert_coeffs() == fts.ALBERT_COEFFS


def test_scaled_system_keeps_axioms_and_detects_similarity():
    ts = fts.build_albert()
    ts2 = ts.scaled(-3)
    res = by_name(fts.check_axioms(ts2, RunConfig(seed=1, samples=5)))
    assert all(c.status == PASS for c in res.values())
    n = ts.n
    ident = [[mpq(1) if i == j else mpq(0) for j in range(n)]
             for i in range(n)]
    assert fts.is_isometry(ts2, ident)
    # b and q really did pick up the factors
    from e7gifts.linalg import unit
    assert ts2.b.gram[0][55] == -3 * ts.b.gram[0][55]
    x = [mpq(1)] * ts.n
    assert ts2.quartic_value(x) == 9 * ts.quartic_value(x)


def test_exhaustive_sweep_passes_on_ms():
    ts = fts.build_ms(26)
    res = exhaustive.fts3_exhaustive_mod_p(ts, RunConfig(seed=2, samples=1,
                                                         primes=1))
    assert res.status == PASS
    assert res.evidence["exhaustive"]


def test_exhaustive_sweep_catches_mutation():
    # corrupt one structure constant by 1/3 and demand an exact witness
    ts = fts.build_ms(26)
    tri = sorted(ts.t_sym)[0]
    coord = sorted(ts.t_sym[tri])[0]
    t2 = {k: dict(v) for k, v in ts.t_sym.items()}
    t2[tri][coord] += mpq(1, 3)
    broken = fts.TripleSystem(ts.b, t_sym=t2, kind="mutated")
    res = exhaustive.fts3_exhaustive_mod_p(broken,
                                           RunConfig(seed=2, primes=1))
    assert res.status == FAIL
    assert res.witness["residual"] != 0
    assert res.evidence["confirmed_exactly"]


def test_trace_sweep_flags_degenerate_exactly():
    ts = fts.build_ms(26)
    res = exhaustive.trace_pairing_exhaustive_mod_p(
        ts, RunConfig(seed=3, primes=1))
    assert res.status == FAIL
    assert res.witness["residual"] != 0


# -- invariance gadgets of the degenerate family ---------------------------

def test_varpi_is_isometry():
    ts = fts.build_ms(26)
    assert fts.is_isometry(ts, fts.varpi_matrix(ts))


def _random_params(ts, rng):
    w = ts.meta["w_dim"]
    while True:
        phi = [[mpq(rng.randint(-2, 2)) for _ in range(w)]
               for _ in range(w)]
        if rank_exact(phi) == w:
            break
    u = [mpq(rng.randint(-3, 3)) for _ in range(w)]
    c = mpq(rng.choice([1, 2, -1, 3, mpq(1, 2)]))
    return c, u, phi


def test_f_family_composition_law_and_isometry():
    ts = fts.build_ms(26)
    rng = random.Random(12)
    for k in range(5):
        p1 = _random_params(ts, rng)
        p2 = _random_params(ts, rng)
        lhs = mat_mul(fts.f_matrix(ts, *p1), fts.f_matrix(ts, *p2))
        rhs = fts.f_matrix(ts, *fts.f_compose_params(ts, p1, p2))
        assert mat_eq(lhs, rhs)
        if k == 0:
            assert fts.is_isometry(ts, fts.f_matrix(ts, *p1))


def test_build_errors():
    with pytest.raises(ValueError):
        fts.build_albert(J="not an algebra")
    from e7gifts.forms import standard_symplectic
    with pytest.raises(ValueError):
        fts.build_ms(26, s=standard_symplectic(24))
