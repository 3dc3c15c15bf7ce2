"""Classifiers built on the k-unit machinery.

Fermat-liar counting, Carmichael numbers via the Korselt criterion,
i-Knodel sets, the generalized Carmichael sets C_k, and sweep tooling for
exponent rules that depend on n (n-i, n+i, a*n+b, arbitrary integer
polynomials).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd, prod

from .arith import SUPPORTED_BOUND, Factorization, factorize
from .errors import CapabilityError, DomainError
from .solver import is_rdu_one

__all__ = [
    "BRUTE_FORCE_BOUND",
    "ClassificationReport",
    "ExponentRule",
    "SweepSpec",
    "SweepResult",
    "count_fermat_liars",
    "is_carmichael",
    "korselt_failure",
    "is_knodel",
    "is_generalized_carmichael",
    "classify",
    "parse_rule",
    "sweep",
]

BRUTE_FORCE_BOUND = 10**7


def count_fermat_liars(n: int, *, bound: int = SUPPORTED_BOUND) -> int:
    """Number of units a modulo odd n with a^(n-1) = 1: prod of gcd(n-1, p-1).

    For prime n this is n - 1 (every unit); for composite n it counts the
    bases for which n is a Fermat probable prime.
    """
    if n < 3 or n % 2 == 0:
        raise DomainError(f"count_fermat_liars requires odd n >= 3, got {n}")
    f = factorize(n, bound=bound)
    return prod(gcd(n - 1, p - 1) for p, _ in f.factors)


def korselt_failure(n: int, *, bound: int = SUPPORTED_BOUND) -> str | None:
    """Why n fails to be a Carmichael number, or None when it is one."""
    if n < 2:
        return f"{n} is not composite"
    if n % 2 == 0:
        return f"{n} is even"
    f = factorize(n, bound=bound)
    if not f.is_composite:
        return f"{n} is prime"
    for p, e in f.factors:
        if e > 1:
            return f"not squarefree: {p}^{e} divides {n}"
    for p, _ in f.factors:
        if (n - 1) % (p - 1):
            return f"{p} - 1 does not divide {n} - 1"
    return None


def is_carmichael(n: int, *, bound: int = SUPPORTED_BOUND) -> bool:
    """Korselt test: n odd, composite, squarefree, and p-1 | n-1 for all p | n."""
    if n < 1:
        raise DomainError(f"is_carmichael requires n >= 1, got {n}")
    return korselt_failure(n, bound=bound) is None


def is_knodel(n: int, i: int, *, bound: int = SUPPORTED_BOUND) -> bool:
    """Membership of n in the i-Knodel set: composite n > i whose every unit
    satisfies a^(n-i) = 1.  The 1-Knodel numbers are the Carmichael numbers."""
    if i < 1:
        raise DomainError(f"is_knodel requires i >= 1, got {i}")
    if n < 1:
        raise DomainError(f"is_knodel requires n >= 1, got {n}")
    if n <= i:
        return False
    f = factorize(n, bound=bound)
    if not f.is_composite:
        return False
    return is_rdu_one(n, n - i, bound=bound)


def is_generalized_carmichael(n: int, k: int, *, bound: int = BRUTE_FORCE_BOUND) -> bool:
    """Membership of n in C_k: min(n, n+k) > 1 and a^(n+k) = a mod n for ALL a.

    Decided by exhaustive check over a in [0, n), non-units included; one
    period of residues suffices for all natural a.  k may be negative.
    """
    if n < 1:
        raise DomainError(f"is_generalized_carmichael requires n >= 1, got {n}")
    if n > bound:
        raise CapabilityError(f"n = {n} exceeds the brute-force bound {bound}")
    if min(n, n + k) <= 1:
        return False
    e = n + k
    return all(pow(a, e, n) == a for a in range(n))


_RULE_CONST = re.compile(r"const:(\d+)\Z")
_RULE_SHIFT = re.compile(r"n(?:([+-])(\d+))?\Z")
_RULE_LINEAR = re.compile(r"(\d+)\*n([+-]\d+)?\Z")
_RULE_POLY = re.compile(r"poly:(-?\d+(?:,-?\d+)*)\Z")


@dataclass(frozen=True)
class ExponentRule:
    """An integer exponent as a function of n, kept as a polynomial.

    ``coeffs`` is constant-term first, so f(n) = sum(c_j * n^j).  ``kind``
    remembers the surface syntax (const, shift, linear, poly) for display.
    """

    kind: str
    coeffs: tuple[int, ...]

    def __call__(self, n: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * n + c
        return value

    @property
    def text(self) -> str:
        if self.kind == "const":
            return f"const:{self.coeffs[0]}"
        if self.kind == "shift":
            b = self.coeffs[0]
            return "n" if b == 0 else f"n{b:+d}"
        if self.kind == "linear":
            a, b = self.coeffs[1], self.coeffs[0]
            return f"{a}*n" if b == 0 else f"{a}*n{b:+d}"
        return "poly:" + ",".join(str(c) for c in self.coeffs)


def parse_rule(text: str) -> ExponentRule:
    """Parse an exponent rule: const:K, n, n-I, n+I, A*n+B, or poly:c0,c1,...

    Shift offsets obey n-I with I >= 1 and n+I with I >= 0; linear rules
    need A >= 1.  Polynomial coefficients are unrestricted integers (the
    sweep skips any n where the exponent comes out below 1).
    """
    text = text.strip()
    if m := _RULE_CONST.match(text):
        k = int(m.group(1))
        if k < 1:
            raise DomainError(f"constant exponent must be >= 1, got {k}")
        return ExponentRule("const", (k,))
    if m := _RULE_SHIFT.match(text):
        sign, digits = m.group(1), m.group(2)
        if sign is None:
            return ExponentRule("shift", (0, 1))
        offset = int(digits)
        if sign == "-" and offset < 1:
            raise DomainError("rule n-I requires I >= 1")
        return ExponentRule("shift", (offset if sign == "+" else -offset, 1))
    if m := _RULE_LINEAR.match(text):
        a = int(m.group(1))
        if a < 1:
            raise DomainError(f"rule A*n+B requires A >= 1, got A={a}")
        b = int(m.group(2) or 0)
        return ExponentRule("linear", (b, a))
    if m := _RULE_POLY.match(text):
        coeffs = tuple(int(c) for c in m.group(1).split(","))
        return ExponentRule("poly", coeffs)
    raise DomainError(
        f"malformed exponent rule {text!r}; expected const:K, n, n-I, n+I, "
        f"A*n+B, or poly:c0,c1,..."
    )


@dataclass(frozen=True)
class SweepSpec:
    """A range [lo, hi] and an exponent rule to test rdu_f(n)(n) = 1 over."""

    lo: int
    hi: int
    rule: ExponentRule
    predicate: str = "rdu_exponent_equals_one"

    def __post_init__(self) -> None:
        if self.lo < 1 or self.hi < self.lo:
            raise DomainError(f"invalid sweep range [{self.lo}, {self.hi}]")
        if self.predicate != "rdu_exponent_equals_one":
            raise DomainError(f"unknown sweep predicate {self.predicate!r}")


@dataclass(frozen=True)
class SweepResult:
    """Hits (n with rdu_f(n)(n) = 1) and the n skipped for exponent < 1."""

    spec: SweepSpec
    hits: tuple[int, ...]
    skipped: tuple[int, ...]


def sweep(
    spec: SweepSpec,
    *,
    composite_only: bool = False,
    odd_only: bool = False,
    bound: int = SUPPORTED_BOUND,
) -> SweepResult:
    """Scan the range for n with rdu_f(n)(n) = 1, in ascending order.

    Filters narrow the candidate set before the exponent is evaluated; an
    n that survives the filters but has exponent f(n) < 1 is recorded as
    skipped rather than silently dropped.
    """
    hits: list[int] = []
    skipped: list[int] = []
    for n in range(spec.lo, spec.hi + 1):
        if odd_only and n % 2 == 0:
            continue
        if composite_only and not factorize(n, bound=bound).is_composite:
            continue
        e = spec.rule(n)
        if e < 1:
            skipped.append(n)
            continue
        if is_rdu_one(n, e, bound=bound):
            hits.append(n)
    return SweepResult(spec=spec, hits=tuple(hits), skipped=tuple(skipped))


@dataclass(frozen=True)
class ClassificationReport:
    """Per-n classifier verdicts with the factorization used as evidence."""

    n: int
    is_composite: bool
    fermat_liar_count: int | None
    carmichael: bool
    knodel_for: tuple[tuple[int, bool], ...]
    gen_carmichael_for: tuple[tuple[int, bool], ...]
    evidence: Factorization
    carmichael_reason: str | None = field(default=None, compare=False)


def classify(
    n: int,
    *,
    liars: bool = False,
    knodel_indices: tuple[int, ...] = (),
    gen_carmichael_ks: tuple[int, ...] = (),
    bound: int = SUPPORTED_BOUND,
    brute_bound: int = BRUTE_FORCE_BOUND,
) -> ClassificationReport:
    """Assemble the requested classifier verdicts for n into one report."""
    if n < 1:
        raise DomainError(f"classify requires n >= 1, got {n}")
    f = factorize(n, bound=bound)
    liar_count = None
    if liars and n % 2 and n >= 3:
        liar_count = prod(gcd(n - 1, p - 1) for p, _ in f.factors)
    reason = korselt_failure(n, bound=bound)
    return ClassificationReport(
        n=n,
        is_composite=f.is_composite,
        fermat_liar_count=liar_count,
        carmichael=reason is None,
        knodel_for=tuple((i, is_knodel(n, i, bound=bound)) for i in knodel_indices),
        gen_carmichael_for=tuple(
            (k, is_generalized_carmichael(n, k, bound=brute_bound)) for k in gen_carmichael_ks
        ),
        evidence=f,
        carmichael_reason=reason,
    )
