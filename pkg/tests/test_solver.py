import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kunits import (
    CapabilityError,
    DomainError,
    check_korselt_general,
    count_rdu_one_solutions,
    divisors,
    enumerate_k_units,
    enumerate_rdu_one_solutions,
    euler_phi,
    factorize,
    is_prime,
    is_rdu_one,
    k_unit_stats,
    solve_rdu_one,
)

from oracles import brute_rdu_is_one


class TestSolveRduOne:
    def test_k2_diagonal(self):
        sol = solve_rdu_one(2)
        assert (sol.beta, sol.m) == (1, 1)
        assert sol.set_a == (3,)
        assert sol.set_b == ()
        assert sol.n_max == 24
        assert sol.count == 8

    def test_k10(self):
        sol = solve_rdu_one(10)
        assert sol.set_a == (3, 11)
        assert sol.set_b == ()
        assert sol.n_max == 264
        assert sol.count == 16

    def test_k252(self):
        sol = solve_rdu_one(252)
        assert (sol.beta, sol.m) == (2, 63)
        assert sol.set_a == (5, 13, 19, 29, 37, 43, 127)
        assert sol.set_b == ((3, 3), (7, 2))
        assert sol.n_max == 153185861359440
        assert sol.count == 7680

    def test_odd_k(self):
        for k in (1, 3, 99, 1001):
            sol = solve_rdu_one(k)
            assert sol.k_parity == "odd"
            assert (sol.beta, sol.m) == (0, k)
            assert sol.set_a == () and sol.set_b == ()
            assert (sol.n_max, sol.count) == (2, 2)

    def test_domain(self):
        with pytest.raises(DomainError):
            solve_rdu_one(0)

    @given(st.integers(1, 5000))
    @settings(max_examples=300)
    def test_structural_invariants(self, k):
        sol = solve_rdu_one(k)
        assert sol.k == k
        assert sol.k_parity == ("even" if k % 2 == 0 else "odd")
        assert sol.m % 2 == 1
        assert (1 << sol.beta) * sol.m == k
        a_set = set(sol.set_a)
        b_primes = {q for q, _ in sol.set_b}
        assert not (a_set & b_primes)
        for p in sol.set_a:
            assert is_prime(p)
            assert sol.m % p != 0
            assert self._has_qualifying_form(p, sol.beta, sol.m)
        for q, e in sol.set_b:
            assert is_prime(q)
            assert sol.m % q == 0
            assert self._has_qualifying_form(q, sol.beta, sol.m)
            nu_q = 0
            m = sol.m
            while m % q == 0:
                m //= q
                nu_q += 1
            assert e == nu_q + 1
        if sol.k_parity == "even":
            n_max = 1 << (sol.beta + 2)
            for p in sol.set_a:
                n_max *= p
            for q, e in sol.set_b:
                n_max *= q**e
            assert sol.n_max == n_max
            count = (sol.beta + 3) * (1 << len(sol.set_a))
            for _, e in sol.set_b:
                count *= e + 1
            assert sol.count == count

    @staticmethod
    def _has_qualifying_form(p: int, beta: int, m: int) -> bool:
        # p - 1 = 2^l * d with 0 < l <= beta and d | m
        return any(
            (p - 1) % (1 << l) == 0 and m % ((p - 1) >> l) == 0
            for l in range(1, beta + 1)
            if (p - 1) >> l >= 1
        )

    def test_candidates_never_include_two(self):
        for k in range(1, 200):
            sol = solve_rdu_one(k)
            assert 2 not in sol.set_a
            assert all(q != 2 for q, _ in sol.set_b)

    def test_n_max_factorization_helper(self):
        for k in (1, 2, 10, 24, 252):
            sol = solve_rdu_one(k)
            f = sol.n_max_factorization()
            assert f.n == sol.n_max
            assert f.factors == factorize(sol.n_max).factors


class TestCountSolutions:
    def test_examples(self):
        assert count_rdu_one_solutions(2) == 8
        assert count_rdu_one_solutions(252) == 7680
        for k in (1, 3, 5, 77):
            assert count_rdu_one_solutions(k) == 2

    def test_count_is_divisor_count_of_n_max_up_to_5000(self):
        # independent route: factor n_max from scratch and multiply (e+1)
        for k in range(1, 5001):
            sol = solve_rdu_one(k)
            tau = 1
            for _, e in factorize(sol.n_max).factors:
                tau *= e + 1
            assert sol.count == tau, k


class TestEnumerateSolutions:
    def test_k2(self):
        assert enumerate_rdu_one_solutions(2) == [1, 2, 3, 4, 6, 8, 12, 24]

    def test_k1(self):
        assert enumerate_rdu_one_solutions(1) == [1, 2]

    def test_k10(self):
        sols = enumerate_rdu_one_solutions(10)
        assert len(sols) == 16
        assert sols[:7] == [1, 2, 3, 4, 6, 8, 11]
        assert sols == divisors(264)

    def test_matches_divisors_for_various_k(self):
        for k in (2, 4, 6, 12, 24, 100, 252):
            sol = solve_rdu_one(k)
            assert enumerate_rdu_one_solutions(k) == divisors(sol.n_max_factorization())

    def test_limit_truncates_ascending_prefix(self):
        full = enumerate_rdu_one_solutions(252)
        assert len(full) == 7680
        assert enumerate_rdu_one_solutions(252, limit=10) == full[:10]
        assert enumerate_rdu_one_solutions(252, limit=0) == []

    def test_cap_exceeded_is_capability_error_naming_count(self):
        sol = solve_rdu_one(30030)
        assert sol.count > 10**6
        with pytest.raises(CapabilityError) as err:
            enumerate_rdu_one_solutions(30030)
        assert str(sol.count) in str(err.value)
        # a limit bypasses the cap
        assert enumerate_rdu_one_solutions(30030, limit=5) == [1, 2, 3, 4, 6]

    def test_negative_limit_rejected(self):
        with pytest.raises(DomainError):
            enumerate_rdu_one_solutions(2, limit=-1)


class TestIsRduOne:
    def test_examples(self):
        assert is_rdu_one(24, 2)
        assert not is_rdu_one(16, 2)
        assert is_rdu_one(2, 3)
        assert is_rdu_one(1, 17)

    def test_agrees_with_stats_full_grid(self):
        for n in range(1, 2001):
            for k in range(1, 65):
                assert is_rdu_one(n, k) == (k_unit_stats(n, k).rdu == 1), (n, k)

    @given(st.integers(1, 1500), st.integers(1, 64))
    @settings(max_examples=200)
    def test_agrees_with_brute_force(self, n, k):
        assert is_rdu_one(n, k) == brute_rdu_is_one(n, k)

    def test_divisor_closedness(self):
        for k in (2, 10, 24):
            for n in enumerate_rdu_one_solutions(k):
                for d in divisors(n):
                    assert is_rdu_one(d, k), (k, n, d)

    def test_solution_sets_are_complete_at_small_scale(self):
        for k in (2, 4, 6, 10):
            expected = set(enumerate_rdu_one_solutions(k))
            found = {n for n in range(1, 2001) if brute_rdu_is_one(n, k)}
            assert found == {n for n in expected if n <= 2000}


class TestCheckKorseltGeneral:
    def test_561(self):
        assert check_korselt_general(561, 560)
        assert check_korselt_general(561, 80)  # lcm(2, 10, 16)
        assert len(enumerate_k_units(561, 80)) == euler_phi(561) == 320

    def test_45_never_passes(self):
        for k in (1, 2, 4, 7, 8, 11):  # coprime to 45
            assert not check_korselt_general(45, k)

    def test_matches_is_rdu_one_under_preconditions(self):
        from math import gcd

        checked = 0
        for n in range(9, 2000, 2):
            if factorize(n).is_prime:
                continue
            for k in (2, 4, 8, 16, 80, 560):
                if gcd(k, n) != 1:
                    continue
                assert check_korselt_general(n, k) == is_rdu_one(n, k), (n, k)
                checked += 1
        assert checked > 1000

    def test_precondition_errors_name_the_clause(self):
        with pytest.raises(DomainError, match="odd"):
            check_korselt_general(10, 3)
        with pytest.raises(DomainError, match="composite"):
            check_korselt_general(13, 4)
        with pytest.raises(DomainError, match="relatively prime"):
            check_korselt_general(45, 3)
