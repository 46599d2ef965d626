"""Check results and machine-readable reports.

Every failing check carries a witness; every passing check carries its
evidence grade (sample count, primes used, whether an exhaustive
multilinearized layer ran).
"""

import json
import time
from dataclasses import dataclass, field

from gmpy2 import mpq

from .scalars import QuadExt, rat_str

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


def serialize_value(v):
    """Witness serialization: rationals as reduced 'p/q' strings, vectors
    and matrices as (nested) arrays."""
    if isinstance(v, QuadExt):
        return {"u": rat_str(v.u), "v": rat_str(v.v), "a": rat_str(v.a)}
    if isinstance(v, (list, tuple)):
        return [serialize_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): serialize_value(x) for k, x in v.items()}
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, (int, float, str)):
        return v
    try:
        return rat_str(mpq(v))
    except (TypeError, ValueError):
        return str(v)


@dataclass
class CheckResult:
    name: str
    status: str
    witness: dict = field(default_factory=dict)
    evidence: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "check_name": self.name,
            "status": self.status,
            "witness": serialize_value(self.witness),
            "evidence": serialize_value(self.evidence),
        }

    @property
    def passed(self):
        return self.status == PASS


def passed(name, evidence=None, witness=None):
    return CheckResult(name, PASS, witness or {}, evidence or {})


def failed(name, witness, evidence=None):
    return CheckResult(name, FAIL, witness, evidence or {})


def inconclusive(name, evidence=None):
    return CheckResult(name, INCONCLUSIVE, {}, evidence or {})


@dataclass
class RunConfig:
    """Reproducibility knobs shared by all check suites."""
    seed: int = 0
    samples: int = 100
    primes: int = 3
    exhaustive: bool = False
    out: str = None

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if self.primes < 1:
            raise ValueError("primes must be >= 1")


class Report:
    """A JSON-serializable run report: command echo, config echo, ordered
    check results, timing."""

    def __init__(self, command, config):
        self.command = command
        self.config = config
        self.checks = []
        self._t0 = time.monotonic()

    def add(self, result):
        if isinstance(result, (list, tuple)):
            self.checks.extend(result)
        else:
            self.checks.append(result)

    @property
    def all_passed(self):
        return all(c.status != FAIL for c in self.checks)

    def as_dict(self):
        cfg = self.config
        return {
            "command": self.command,
            "config": {
                "seed": cfg.seed, "samples": cfg.samples,
                "primes": cfg.primes, "exhaustive": cfg.exhaustive,
            },
            "checks": [c.as_dict() for c in self.checks],
            "elapsed_ms": int(1000 * (time.monotonic() - self._t0)),
        }

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=False)
