"""Exact constructions and checks for 56-dimensional symplectic triple
systems, their twisted endomorphism algebras, and quaternionic descent.

The library builds the degenerate symplectic-pair family and the Albert
triple systems over the rationals, verifies the defining identities
exactly (with optional exhaustive multilinearized sweeps modulo random
primes), classifies by the trace-pairing nondegeneracy criterion,
descends the split endomorphism gift to quaternionic coefficients, and
reproduces the real-closed Witt-index table.
"""

from .fts import (TripleSystem, build_albert, build_ms, check_axioms,
                  classify)
from .gift import Gift, check_gift_axioms, end_of, gift_to_fts
from .brown import BrownElement, brown_conj, brown_descend, brown_mul
from .descent import (HermitianForm, e7_real_table, hermitian_trace_form,
                      quatconst_build, symplem_verify, witt_index_hermitian)
from .report import Report, RunConfig

__all__ = [
    "TripleSystem", "build_albert", "build_ms", "check_axioms", "classify",
    "Gift", "check_gift_axioms", "end_of", "gift_to_fts",
    "BrownElement", "brown_conj", "brown_descend", "brown_mul",
    "HermitianForm", "e7_real_table", "hermitian_trace_form",
    "quatconst_build", "symplem_verify", "witt_index_hermitian",
    "Report", "RunConfig",
]

__version__ = "0.1.0"
