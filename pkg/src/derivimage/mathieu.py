"""Mathieu-subspace tooling for homogeneous subspaces of Q[x].

Every graded piece of Q[x] is one-dimensional, so a homogeneous subspace
is the span of x^n over a set of exponents; the sets arising here are all
eventually periodic, which keeps the "all positive multiples of d" ray
condition decidable.  The truncated checks are falsifiers and regression
probes, never proofs: the Mathieu property quantifies over all
sufficiently large powers, which no finite run certifies.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Optional, Sequence

from .poly import Polynomial


@dataclass(frozen=True)
class ExponentSet:
    """Eventually periodic set of monomial exponents.

    n belongs to the set when n is exceptional, or when n >= threshold and
    n mod modulus is a listed residue.  Canonical form keeps the
    exceptional entries below the threshold or off the periodic tail.
    """

    exceptional: frozenset
    modulus: int
    residues: frozenset
    threshold: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("the modulus must be positive")
        if self.threshold < 0:
            raise ValueError("the threshold must be nonnegative")
        exceptional = frozenset(int(n) for n in self.exceptional)
        residues = frozenset(int(r) for r in self.residues)
        if any(n < 0 for n in exceptional):
            raise ValueError("exponents are nonnegative")
        if any(r < 0 or r >= self.modulus for r in residues):
            raise ValueError("residues must lie below the modulus")
        tail = {
            n
            for n in exceptional
            if n >= self.threshold and n % self.modulus in residues
        }
        object.__setattr__(self, "exceptional", exceptional - tail)
        object.__setattr__(self, "residues", residues)

    @classmethod
    def from_finite(cls, values: Iterable[int]) -> ExponentSet:
        return cls(frozenset(values), 1, frozenset(), 0)

    @classmethod
    def periodic(
        cls,
        modulus: int,
        residues: Iterable[int],
        threshold: int = 0,
        exceptional: Iterable[int] = (),
    ) -> ExponentSet:
        return cls(frozenset(exceptional), modulus, frozenset(residues), threshold)

    def __contains__(self, n: int) -> bool:
        if n in self.exceptional:
            return True
        return n >= self.threshold and n % self.modulus in self.residues

    @property
    def is_finite(self) -> bool:
        return not self.residues

    @property
    def is_cofinite(self) -> bool:
        """Whether some full tail {n >= N} is contained in the set."""
        return len(self.residues) == self.modulus

    @property
    def is_everything(self) -> bool:
        return self.is_cofinite and all(n in self for n in range(self.threshold))

    def members_below(self, bound: int) -> list:
        return [n for n in range(bound) if n in self]

    def same_members(self, other: ExponentSet) -> bool:
        period = self.modulus * other.modulus // gcd(self.modulus, other.modulus)
        bound = max(
            self.threshold,
            other.threshold,
            max(self.exceptional, default=0) + 1,
            max(other.exceptional, default=0) + 1,
        ) + 2 * period
        return all((n in self) == (n in other) for n in range(bound))

    def to_json_dict(self) -> dict:
        return {
            "exceptional": sorted(self.exceptional),
            "modulus": self.modulus,
            "residues": sorted(self.residues),
            "threshold": self.threshold,
        }

    @classmethod
    def from_json_dict(cls, obj) -> ExponentSet:
        try:
            return cls(
                frozenset(obj["exceptional"]),
                int(obj["modulus"]),
                frozenset(obj["residues"]),
                int(obj["threshold"]),
            )
        except (KeyError, TypeError) as exc:
            raise ValueError("malformed exponent-set JSON: %s" % (exc,)) from exc


def span_member(s: ExponentSet) -> Callable[[Polynomial], bool]:
    """Membership oracle for the span of x^n over the exponents of s."""

    def member(f: Polynomial) -> bool:
        return all(n in s for n, c in enumerate(f.coeffs) if c)

    return member


def _is_ray(s: ExponentSet, d: int) -> bool:
    g = gcd(d, s.modulus)
    if any(r not in s.residues for r in range(0, s.modulus, g)):
        return False
    m = 1
    while m * d < s.threshold:
        if m * d not in s.exceptional:
            return False
        m += 1
    return True


def smallest_ray(s: ExponentSet) -> Optional[int]:
    """Least d >= 1 with every positive multiple of d in the set, if any.

    For d >= threshold only the periodic tail matters, and the tail
    condition depends on gcd(d, modulus) alone, so the least valid d (if
    one exists) is at most threshold + modulus.
    """
    for d in range(1, s.threshold + s.modulus + 1):
        if _is_ray(s, d):
            return d
    return None


class MSClause(Enum):
    FULL = "full"
    FINITE_DIM_NO_ONE = "finite-dim-no-one"
    COFINITE_NO_ONE = "cofinite-no-one"
    SPARSE_NO_RAY = "sparse-no-ray"
    NOT_MS = "not-ms"


@dataclass(frozen=True)
class MSVerdict:
    """Classification of a homogeneous subspace.

    ray_witness is set only when the subspace fails to be a Mathieu
    subspace because of a full multiple ray; failures caused by containing
    the constants carry no witness.
    """

    clause: MSClause
    ray_witness: Optional[int] = None

    @property
    def is_mathieu(self) -> bool:
        return self.clause is not MSClause.NOT_MS

    def to_json_dict(self) -> dict:
        return {
            "clause": self.clause.value,
            "ray_witness": self.ray_witness,
            "is_mathieu": self.is_mathieu,
        }


def classify_homogeneous(
    s: ExponentSet, contains_constants: bool, finite_dim: bool
) -> MSVerdict:
    """Decide whether the span of x^n (n in s) is a Mathieu subspace.

    The two flags restate facts derivable from s and are validated against
    it.  The subspace qualifies exactly when it is everything, or omits
    the constants and is finite dimensional, cofinite, or ray-free.
    """
    if finite_dim != s.is_finite:
        raise ValueError("finite_dim flag contradicts the exponent set")
    if contains_constants != (0 in s):
        raise ValueError("contains_constants flag contradicts the exponent set")
    if s.is_everything:
        return MSVerdict(MSClause.FULL)
    if 0 in s:
        return MSVerdict(MSClause.NOT_MS)
    if s.is_finite:
        return MSVerdict(MSClause.FINITE_DIM_NO_ONE)
    if s.is_cofinite:
        return MSVerdict(MSClause.COFINITE_NO_ONE)
    ray = smallest_ray(s)
    if ray is None:
        return MSVerdict(MSClause.SPARSE_NO_RAY)
    return MSVerdict(MSClause.NOT_MS, ray)


@dataclass(frozen=True)
class MSViolation:
    candidate: Polynomial
    multiplier: Polynomial


@dataclass(frozen=True)
class MSCheckReport:
    power_window: int
    multiplier_degree: int
    power_complete: tuple
    violations: tuple

    @property
    def clean(self) -> bool:
        return not self.violations


def truncated_ms_check(
    member: Callable[[Polynomial], bool],
    candidates: Sequence[Polynomial],
    power_window: int,
    multiplier_degree: int,
) -> MSCheckReport:
    """Empirical Mathieu-property probe; reports, never proves.

    A candidate a is power-complete when a^1..a^window all pass the
    oracle.  For each power-complete a and each monomial b of degree up to
    multiplier_degree, the products a^m * b must pass from some point on
    within the window; a pair with no stabilization point inside the
    window is flagged as a potential violation.
    """
    if power_window < 2:
        raise ValueError("the power window must be at least 2")
    power_complete = []
    violations = []
    for a in candidates:
        powers = [None]
        current = Polynomial.one()
        complete = True
        for _ in range(power_window):
            current = current * a
            if not member(current):
                complete = False
                break
            powers.append(current)
        if not complete:
            continue
        power_complete.append(a)
        for e in range(multiplier_degree + 1):
            b = Polynomial.monomial(e)
            # stabilization exists inside the window iff the last product passes
            if not member(powers[power_window] * b):
                violations.append(MSViolation(a, b))
    return MSCheckReport(
        power_window, multiplier_degree, tuple(power_complete), tuple(violations)
    )


@dataclass(frozen=True)
class RadicalScanReport:
    degree_bound: int
    power_window: int
    candidates_checked: int
    survivors: tuple

    @property
    def clean(self) -> bool:
        return not self.survivors


def radical_scan(
    member: Callable[[Polynomial], bool],
    degree_bound: int,
    coeff_samples: Iterable,
    power_window: int,
) -> RadicalScanReport:
    """Hunt for small nonzero f with f^1..f^window all inside the target.

    A trivial-radical claim predicts zero survivors over any honest
    window; survivors are reported, never raised, because a finite window
    proves nothing by itself.  The enumeration order (and hence the
    report) is deterministic: coefficient vectors ascend lexicographically
    over the sorted sample values.
    """
    if power_window < 1:
        raise ValueError("the power window must be at least 1")
    if degree_bound < 0:
        raise ValueError("the degree bound must be nonnegative")
    samples = sorted({Fraction(v) for v in coeff_samples})
    survivors = []
    checked = 0
    for vector in itertools.product(samples, repeat=degree_bound + 1):
        f = Polynomial(vector)
        if f.is_zero:
            continue
        checked += 1
        power = Polynomial.one()
        alive = True
        for _ in range(power_window):
            power = power * f
            if not member(power):
                alive = False
                break
        if alive:
            survivors.append(f)
    survivors.sort(key=lambda p: (len(p.coeffs), p.coeffs))
    return RadicalScanReport(degree_bound, power_window, checked, tuple(survivors))
