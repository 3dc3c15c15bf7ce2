"""Structure of the unit group of Z_n and k-unit counting.

A k-unit modulo n is a unit a with a^k = 1.  The closed forms here rest on
two facts: the k-units of a cyclic group of order r number gcd(k, r), and
the count is multiplicative over a direct product of cyclic factors.  The
group U(Z_n) itself decomposes per prime power: trivial for 2^0 and 2^1,
C_2 for 4, C_2 x C_{2^(a-2)} for 2^a with a >= 3, and cyclic of order
phi(p^a) for odd p.

``enumerate_k_units`` is the brute-force oracle every closed form is
tested against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

import numpy as np

from .arith import SUPPORTED_BOUND, euler_phi, factorize
from .errors import CapabilityError, DomainError

__all__ = [
    "ENUMERATION_BOUND",
    "CyclicDecomposition",
    "KUnitStats",
    "unit_group_structure",
    "du_k_cyclic",
    "du_k_product",
    "du_k_two_power",
    "k_unit_stats",
    "enumerate_k_units",
    "reduce_exponent",
    "is_rdu_one_product",
]

ENUMERATION_BOUND = 10**7


@dataclass(frozen=True)
class CyclicDecomposition:
    """An abelian unit group given as an ordered product of cyclic factors.

    ``orders`` lists the cyclic factor orders; ``modulus`` is the n whose
    unit group this is, or None for an abstract product.
    """

    orders: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "orders", tuple(self.orders))
        if any(r < 1 for r in self.orders):
            raise DomainError("cyclic factor orders must be >= 1")
        if self.modulus is not None and self.modulus < 1:
            raise DomainError("modulus must be >= 1")

    @property
    def origin(self) -> str:
        return "abstract" if self.modulus is None else f"Z_{self.modulus}"

    @property
    def group_order(self) -> int:
        return prod(self.orders)


@dataclass(frozen=True)
class KUnitStats:
    """The k-unit census of Z_n: count du, proportion pdu, ratio rdu.

    Invariants: du divides phi(n), rdu * du == phi(n), and pdu is the
    exact reduced fraction du / phi(n).
    """

    n: int
    k: int
    du: int
    pdu: Fraction
    rdu: int

    @property
    def phi(self) -> int:
        return self.du * self.rdu


def unit_group_structure(n: int, *, bound: int = SUPPORTED_BOUND) -> CyclicDecomposition:
    """Cyclic decomposition of U(Z_n), prime power by prime power.

    Factors appear in ascending order of the underlying prime, with the
    2-power contributing [2, 2^(a-2)] in that order; n = 1 and n = 2 give
    the empty (trivial) decomposition.
    """
    f = factorize(n, bound=bound)
    orders: list[int] = []
    for p, e in f.factors:
        if p == 2:
            if e == 2:
                orders.append(2)
            elif e >= 3:
                orders.append(2)
                orders.append(1 << (e - 2))
        else:
            orders.append((p - 1) * p ** (e - 1))
    return CyclicDecomposition(tuple(orders), modulus=n)


def du_k_cyclic(k: int, r: int) -> int:
    """Number of k-units in a cyclic group of order r: gcd(k, r)."""
    if k < 1 or r < 1:
        raise DomainError("du_k_cyclic requires k >= 1 and r >= 1")
    return gcd(k, r)


def du_k_product(k: int, decomposition: CyclicDecomposition) -> int:
    """Number of k-units in a product of cyclic groups: prod of gcd(k, r_i)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return prod(gcd(k, r) for r in decomposition.orders)


def du_k_two_power(k: int, alpha: int) -> int:
    """Number of k-units modulo 2^alpha for alpha >= 3.

    1 for odd k; 2 * gcd(k, 2^(alpha-2)) for even k.  Callers handle
    alpha <= 2 directly.
    """
    if alpha < 3:
        raise DomainError(f"du_k_two_power requires alpha >= 3, got {alpha}")
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if k % 2:
        return 1
    return 2 * gcd(k, 1 << (alpha - 2))


def k_unit_stats(n: int, k: int, *, bound: int = SUPPORTED_BOUND) -> KUnitStats:
    """du, pdu and rdu for (n, k) from the prime factorization of n.

    Writing n = 2^alpha * m with m odd, du is the product of
    gcd(k, phi(p^e)) over the odd prime powers p^e of m, times the 2-part
    contribution: nothing for alpha <= 1 or odd k, a factor 2 for even k
    with alpha == 2, and 2 * gcd(k, 2^(alpha-2)) for even k with
    alpha >= 3.
    """
    if n < 1 or k < 1:
        raise DomainError(f"k_unit_stats requires n >= 1 and k >= 1, got n={n}, k={k}")
    f = factorize(n, bound=bound)
    alpha = f.exponent_of(2)
    du = prod(gcd(k, (p - 1) * p ** (e - 1)) for p, e in f.factors if p != 2)
    if k % 2 == 0 and alpha == 2:
        du *= 2
    elif k % 2 == 0 and alpha >= 3:
        du *= 2 * gcd(k, 1 << (alpha - 2))
    phi = euler_phi(f)
    return KUnitStats(n=n, k=k, du=du, pdu=Fraction(du, phi), rdu=phi // du)


# Below this the per-call overhead of the vectorized scan exceeds the
# pure-Python loop.
_VECTOR_CUTOFF = 128


def _scan_k_units(n: int, k: int) -> list[int]:
    """Vectorized residue scan: a^k mod n over [1, n) by square-and-multiply.

    int64 is safe because intermediate products stay below n^2 and the
    enumeration bound keeps n well under 2**31.5.
    """
    residues = np.arange(1, n, dtype=np.int64)
    acc = np.ones(n - 1, dtype=np.int64)
    base = residues.copy()
    e = k
    while e:
        if e & 1:
            acc *= base
            acc %= n
        e >>= 1
        if e:
            base *= base
            base %= n
    return residues[acc == 1].tolist()


def enumerate_k_units(n: int, k: int, *, bound: int = ENUMERATION_BOUND) -> list[int]:
    """Brute-force list of the k-units modulo n, ascending.

    Scans every residue and keeps those with a^k = 1 (such a is a unit
    automatically: a * a^(k-1) = 1); n = 1 returns [0], the single trivial
    unit of Z_1.  Independent of the closed forms above, which makes it
    the oracle they are tested against.
    """
    if n < 1 or k < 1:
        raise DomainError(f"enumerate_k_units requires n >= 1 and k >= 1, got n={n}, k={k}")
    if n > bound:
        raise CapabilityError(f"n = {n} exceeds the enumeration bound {bound}")
    if n == 1:
        return [0]
    if n >= _VECTOR_CUTOFF:
        return _scan_k_units(n, k)
    return [a for a in range(1, n) if gcd(a, n) == 1 and pow(a, k, n) == 1]


def reduce_exponent(n: int, k: int, *, bound: int = SUPPORTED_BOUND) -> int:
    """The reduced exponent d = gcd(k, phi(n)); the d-units equal the k-units."""
    if n < 1 or k < 1:
        raise DomainError(f"reduce_exponent requires n >= 1 and k >= 1, got n={n}, k={k}")
    return gcd(k, euler_phi(factorize(n, bound=bound)))


def is_rdu_one_product(k: int, decomposition: CyclicDecomposition) -> bool:
    """True iff every unit of the decomposed group is a k-unit: each factor
    order must divide k."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return all(k % r == 0 for r in decomposition.orders)
