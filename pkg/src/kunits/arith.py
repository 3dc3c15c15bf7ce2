"""Exact integer primitives: primality, factorization, totient, divisors.

Everything here is arbitrary precision and deterministic.  Primality uses
the fixed Miller-Rabin base set that is a proof for every modulus below
``3.3e24`` (Sorenson & Webster), so there are no probabilistic false
positives anywhere in the toolkit; inputs the backend cannot certify raise
:class:`~kunits.errors.CapabilityError` rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod

from .errors import CapabilityError, DomainError

__all__ = [
    "SUPPORTED_BOUND",
    "Factorization",
    "is_prime",
    "factorize",
    "euler_phi",
    "nu",
    "divisors",
    "pow_mod",
]

# Default gate for the primality / factorization fast paths.  Callers may
# raise it per call up to the certified Miller-Rabin limit below.
SUPPORTED_BOUND = 2**64 - 1

# Smallest composite that fools the 12-base set below; every verdict for
# moduli under this limit is a proof, not a probable-prime answer.
_CERTIFIED_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_LIMIT = 1 << 16


@lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    """Primes below 2**16 by a sieve of Eratosthenes."""
    limit = _TRIAL_LIMIT
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its sorted prime-power decomposition.

    ``factors`` is a tuple of ``(prime, exponent)`` pairs with strictly
    increasing primes and exponents >= 1; it is empty exactly for n = 1.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"Factorization requires n >= 1, got {self.n}")
        object.__setattr__(self, "factors", tuple(tuple(pe) for pe in self.factors))
        previous = 1
        for p, e in self.factors:
            if p <= previous:
                raise DomainError("factor primes must be strictly increasing")
            if e < 1:
                raise DomainError("factor exponents must be >= 1")
            previous = p
        if prod(p**e for p, e in self.factors) != self.n:
            raise DomainError(f"factors do not multiply back to {self.n}")

    @property
    def is_one(self) -> bool:
        return self.n == 1

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_composite(self) -> bool:
        return self.n > 1 and not self.is_prime

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    def exponent_of(self, p: int) -> int:
        """Multiplicity of the prime p in n (0 when p does not divide n)."""
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def _miller_rabin(n: int) -> bool:
    """Miller-Rabin on the fixed base set; a proof only below _CERTIFIED_LIMIT."""
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _is_prime_unchecked(n: int) -> bool:
    """Primality without the bound gate; 'composite' verdicts are always certain."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    return _miller_rabin(n)


def is_prime(n: int, *, bound: int = SUPPORTED_BOUND) -> bool:
    """Deterministic primality test for 0 <= n <= bound.

    Raises CapabilityError above the bound (or above the certified
    Miller-Rabin limit, whichever is smaller) instead of answering
    probabilistically.
    """
    if n < 0:
        raise DomainError(f"primality is defined for n >= 0, got {n}")
    limit = min(bound, _CERTIFIED_LIMIT)
    if n > limit:
        raise CapabilityError(
            f"cannot certify primality of {n}: exceeds the supported bound {limit}"
        )
    return _is_prime_unchecked(n)


def _brent_cycle(n: int, c: int) -> int:
    """One run of Brent's cycle finder on x -> x^2 + c mod n; returns a gcd."""
    y, r, q = 2, 1, 1
    g = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(128, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += 128
        r <<= 1
    if g == n:
        g = 1
        y = ys
        while g == 1:
            y = (y * y + c) % n
            g = gcd(abs(x - y), n)
    return g


def _split(n: int) -> int | None:
    """A nontrivial divisor of the odd composite n, or None when the
    deterministic schedule of Brent runs is exhausted."""
    s = isqrt(n)
    if s * s == n:
        return s
    for c in range(1, 64):
        g = _brent_cycle(n, c)
        if 1 < g < n:
            return g
    return None


def factorize(n: int, *, bound: int = SUPPORTED_BOUND) -> Factorization:
    """Prime-power decomposition of n >= 1.

    Trial division by the primes below 2**16, then Brent's rho with
    deterministic primality certification of every reported prime.  Inputs
    with a cofactor the backend cannot split or certify raise
    CapabilityError; a wrong factorization is never returned.
    """
    if n < 1:
        raise DomainError(f"factorization requires n >= 1, got {n}")
    original = n
    counts: dict[int, int] = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    if n > 1:
        if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
            # no prime factor below sqrt(n), so n itself is prime
            counts[n] = counts.get(n, 0) + 1
        else:
            stack = [n]
            while stack:
                m = stack.pop()
                if _is_prime_unchecked(m):
                    if m > _CERTIFIED_LIMIT:
                        raise CapabilityError(
                            f"cofactor {m} of {original} is a probable prime but lies "
                            f"beyond the certified bound {_CERTIFIED_LIMIT}"
                        )
                    counts[m] = counts.get(m, 0) + 1
                    continue
                d = _split(m)
                if d is None:
                    raise CapabilityError(
                        f"cannot split the composite cofactor {m} of {original}; "
                        f"the supported factorization bound is {bound}"
                    )
                stack.append(d)
                stack.append(m // d)
    return Factorization(original, tuple(sorted(counts.items())))


def _as_factorization(f: Factorization | int) -> Factorization:
    return factorize(f) if isinstance(f, int) else f


def euler_phi(f: Factorization | int) -> int:
    """Euler's totient; accepts an integer or a ready Factorization."""
    f = _as_factorization(f)
    return prod((p - 1) * p ** (e - 1) for p, e in f.factors)


def nu(p: int, n: int) -> int:
    """Exponent of the greatest power of the prime p dividing n >= 1."""
    if not is_prime(p):
        raise DomainError(f"nu requires a prime first argument, got {p}")
    if n < 1:
        raise DomainError(f"nu requires n >= 1, got {n}")
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def divisors(f: Factorization | int) -> list[int]:
    """All divisors of n in ascending order; accepts an int or Factorization."""
    f = _as_factorization(f)
    out = [1]
    for p, e in f.factors:
        powers = [p**i for i in range(e + 1)]
        out = [d * q for d in out for q in powers]
    out.sort()
    return out


def pow_mod(a: int, e: int, n: int) -> int:
    """a**e reduced mod n >= 1, with a**0 == 1 mod n."""
    if a < 0 or e < 0:
        raise DomainError("pow_mod requires a >= 0 and e >= 0")
    if n < 1:
        raise DomainError(f"pow_mod requires a positive modulus, got {n}")
    return pow(a, e, n)
