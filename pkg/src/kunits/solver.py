"""Complete solution of rdu_k(n) = 1 for a fixed exponent k.

rdu_k(n) = 1 says every unit modulo n is a k-unit.  For odd k the only
solutions are n = 1 and n = 2.  For even k = 2^beta * M (M odd) the
solutions are exactly the divisors of

    n_max = 2^(beta+2) * prod(A) * prod(q^(nu_q(M)+1) for q in B),

where A and B collect the primes of the form 2^l * d + 1 with 0 < l <= beta
and d | M, split by whether the prime divides M (A: it does not, B: it
does).  The solution count is (beta+3) * 2^|A| * prod(nu_q(M)+2), which is
the divisor count of n_max.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterator

from .arith import SUPPORTED_BOUND, Factorization, divisors, factorize, is_prime, nu
from .errors import CapabilityError, DomainError

__all__ = [
    "SOLUTION_CAP",
    "RduOneSolution",
    "solve_rdu_one",
    "count_rdu_one_solutions",
    "enumerate_rdu_one_solutions",
    "is_rdu_one",
    "check_korselt_general",
]

SOLUTION_CAP = 10**6


def _nu2(k: int) -> int:
    return (k & -k).bit_length() - 1


@dataclass(frozen=True)
class RduOneSolution:
    """Everything known about the solution set of rdu_k(n) = 1.

    k = 2^beta * m with m odd; set_a holds the qualifying primes not
    dividing m, set_b the qualifying primes dividing m paired with their
    exponent nu_q(m) + 1 in n_max.  Odd k is the degenerate case
    beta = 0 with empty sets, n_max = 2 and count = 2.
    """

    k: int
    k_parity: str
    beta: int
    m: int
    set_a: tuple[int, ...]
    set_b: tuple[tuple[int, int], ...]
    n_max: int
    count: int

    def n_max_factorization(self) -> Factorization:
        """Prime-power form of n_max, assembled from the solution parts."""
        pairs = [(2, self.beta + 2)] if self.k_parity == "even" else [(2, 1)]
        pairs += [(p, 1) for p in self.set_a]
        pairs += list(self.set_b)
        return Factorization(self.n_max, tuple(sorted(pairs)))


def solve_rdu_one(k: int, *, bound: int = SUPPORTED_BOUND) -> RduOneSolution:
    """Solve rdu_k(n) = 1 in closed form.

    Candidates 2^l * d + 1 are scanned over the divisors d of the odd part
    of k (ascending) and l = 1..beta, kept when prime, deduplicated, and
    partitioned into A and B by divisibility of the odd part.
    """
    if k < 1:
        raise DomainError(f"solve_rdu_one requires k >= 1, got {k}")
    if k % 2:
        return RduOneSolution(
            k=k, k_parity="odd", beta=0, m=k, set_a=(), set_b=(), n_max=2, count=2
        )
    beta = _nu2(k)
    m = k >> beta
    fm = factorize(m, bound=bound)
    candidates: set[int] = set()
    for d in divisors(fm):
        for l in range(1, beta + 1):
            c = (1 << l) * d + 1
            if is_prime(c, bound=max(bound, c)):
                candidates.add(c)
    set_a = tuple(sorted(p for p in candidates if m % p != 0))
    set_b = tuple((q, nu(q, m) + 1) for q in sorted(p for p in candidates if m % p == 0))
    n_max = (1 << (beta + 2)) * prod(set_a) * prod(q**e for q, e in set_b)
    count = (beta + 3) * (1 << len(set_a)) * prod(e + 1 for _, e in set_b)
    return RduOneSolution(
        k=k,
        k_parity="even",
        beta=beta,
        m=m,
        set_a=set_a,
        set_b=set_b,
        n_max=n_max,
        count=count,
    )


def count_rdu_one_solutions(k: int, *, bound: int = SUPPORTED_BOUND) -> int:
    """Number of solutions of rdu_k(n) = 1; equals the divisor count of n_max."""
    return solve_rdu_one(k, bound=bound).count


def _ascending_divisors(f: Factorization) -> Iterator[int]:
    """Divisors of f.n in ascending order, lazily (heap with dedup)."""
    caps = [(p, p**e) for p, e in f.factors]
    heap = [1]
    seen = {1}
    while heap:
        d = heapq.heappop(heap)
        yield d
        for p, cap in caps:
            if d % cap:
                nd = d * p
                if nd not in seen:
                    seen.add(nd)
                    heapq.heappush(heap, nd)


def enumerate_rdu_one_solutions(
    k: int,
    limit: int | None = None,
    *,
    cap: int = SOLUTION_CAP,
    bound: int = SUPPORTED_BOUND,
) -> list[int]:
    """All solutions of rdu_k(n) = 1 ascending, i.e. the divisors of n_max.

    Truncates to the first ``limit`` values when given; otherwise refuses
    (CapabilityError) when the solution count exceeds ``cap``, since the
    count grows exponentially in |A|.
    """
    sol = solve_rdu_one(k, bound=bound)
    if limit is None and sol.count > cap:
        raise CapabilityError(
            f"rdu_{k}(n) = 1 has {sol.count} solutions, above the enumeration "
            f"cap {cap}; pass a limit to truncate"
        )
    if limit is not None and limit < 0:
        raise DomainError(f"limit must be >= 0, got {limit}")
    stop = sol.count if limit is None else min(limit, sol.count)
    out: list[int] = []
    for d in _ascending_divisors(sol.n_max_factorization()):
        if len(out) >= stop:
            break
        out.append(d)
    return out


def is_rdu_one(n: int, k: int, *, bound: int = SUPPORTED_BOUND) -> bool:
    """Fast membership test for rdu_k(n) = 1, without touching the k-units.

    Writing n = 2^alpha * m (m odd): every odd prime power p^e of m must
    have phi(p^e) | k, and alpha must satisfy alpha <= 1, or alpha == 2
    with k even, or 3 <= alpha <= nu_2(k) + 2.
    """
    if n < 1 or k < 1:
        raise DomainError(f"is_rdu_one requires n >= 1 and k >= 1, got n={n}, k={k}")
    f = factorize(n, bound=bound)
    alpha = 0
    for p, e in f.factors:
        if p == 2:
            alpha = e
        elif k % ((p - 1) * p ** (e - 1)):
            return False
    if alpha <= 1:
        return True
    if alpha == 2:
        return k % 2 == 0
    return alpha <= _nu2(k) + 2


def check_korselt_general(n: int, k: int, *, bound: int = SUPPORTED_BOUND) -> bool:
    """Squarefree-and-(p-1 | k) test for odd composite n with gcd(k, n) = 1.

    Under those preconditions the verdict coincides with is_rdu_one(n, k);
    violated preconditions raise DomainError naming the clause rather than
    silently extending the equivalence.
    """
    if n < 1 or k < 1:
        raise DomainError(f"check_korselt_general requires n >= 1 and k >= 1, got n={n}, k={k}")
    if n % 2 == 0:
        raise DomainError(f"precondition violated: n = {n} is not odd")
    f = factorize(n, bound=bound)
    if not f.is_composite:
        raise DomainError(f"precondition violated: n = {n} is not composite")
    if gcd(k, n) != 1:
        raise DomainError(f"precondition violated: k = {k} is not relatively prime to n = {n}")
    return f.is_squarefree and all(k % (p - 1) == 0 for p, _ in f.factors)
