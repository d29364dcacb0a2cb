import random

import pytest

from cyclosum.weights import (
    CharCheckInput,
    char_constraint_check,
    frobenius_bound,
    is_weight,
    smallest_positive_weight,
    weight_set,
)
from cyclosum.census import enumerate_minimal


def reachable(generators, limit):
    reach = [False] * (limit + 1)
    reach[0] = True
    for g in generators:
        for n in range(g, limit + 1):
            if reach[n - g]:
                reach[n] = True
    return reach


# -- the three introductory moduli ---------------------------------------------------


def test_weight_set_13():
    ws = weight_set(13)
    assert ws.periodic and ws.conductor is None and ws.gaps == ()
    assert ws.members(40) == [0, 13, 26, 39]


def test_weight_set_14():
    ws = weight_set(14)
    assert ws.primes == (2, 7)
    assert ws.conductor == 6
    assert ws.gaps == (1, 3, 5)
    assert ws.members(12) == [0, 2, 4, 6, 7, 8, 9, 10, 11, 12]


def test_weight_set_15():
    ws = weight_set(15)
    assert ws.primes == (3, 5)
    assert ws.conductor == 8
    assert ws.gaps == (1, 2, 4, 7)
    assert ws.members(12) == [0, 3, 5, 6, 8, 9, 10, 11, 12]


def test_weight_set_even_moduli():
    # 2-power: the even numbers
    ws = weight_set(16)
    assert ws.periodic
    assert ws.members(10) == [0, 2, 4, 6, 8, 10]
    # even but not a 2-power: evens below the smallest odd prime p, then all n >= p - 1
    for m, p in [(20, 5), (12, 3), (22, 11), (30, 3)]:
        ws = weight_set(m)
        expected = sorted(set(range(0, p, 2)) | set(range(p - 1, 3 * p)))
        assert ws.members(3 * p - 1) == expected


def test_weight_set_divisible_by_six():
    ws = weight_set(30)
    assert ws.members(10) == [0, 2, 3, 4, 5, 6, 7, 8, 9, 10]


def test_weight_set_rejects_small_modulus():
    with pytest.raises(ValueError):
        weight_set(1)


def test_zero_in_one_out():
    for m in range(2, 60):
        ws = weight_set(m)
        assert 0 in ws
        assert 1 not in ws


def test_membership_equals_dp_below_and_above_conductor():
    for m in (14, 15, 30, 77, 128, 105):
        ws = weight_set(m)
        limit = 3 * (ws.conductor or 10) + 20
        reach = reachable(ws.primes, limit)
        for n in range(limit + 1):
            assert (n in ws) == reach[n], (m, n)


def test_semigroup_closure():
    for m in (14, 15, 30, 105):
        ws = weight_set(m)
        limit = 3 * ws.conductor
        members = ws.members(limit)
        for a in members:
            for b in members:
                if a + b <= limit:
                    assert (a + b) in ws


def test_primes_are_members():
    for m in (14, 15, 30, 105, 210):
        ws = weight_set(m)
        for p in ws.primes:
            assert p in ws


def test_is_weight_examples():
    assert not is_weight(30, 1)
    assert is_weight(30, 6)
    assert not is_weight(15, 7)


def test_smallest_positive_weight():
    assert smallest_positive_weight(30) == 2
    assert smallest_positive_weight(15) == 3
    assert smallest_positive_weight(13) == 13
    ws = weight_set(30)
    assert all(n not in ws for n in range(1, smallest_positive_weight(30)))


# -- Frobenius-style bound ---------------------------------------------------------------


def test_frobenius_bound_examples():
    assert frobenius_bound(2, 5) == 4
    assert frobenius_bound(3, 5) == 8
    assert not is_weight(15, 7)
    assert frobenius_bound(2, 3) == 2
    assert all(is_weight(6, n) for n in range(2, 50))


def test_frobenius_bound_rejects_non_coprime():
    with pytest.raises(ValueError):
        frobenius_bound(4, 6)


def test_frobenius_bound_holds_and_is_sharp():
    from math import gcd

    for p in range(2, 21):
        for q in range(2, 21):
            if gcd(p, q) != 1:
                continue
            bound = frobenius_bound(p, q)
            reach = reachable((p, q), bound + 2 * max(p, q))
            assert all(reach[n] for n in range(bound, len(reach)))
            assert not reach[bound - 1]


# -- existence cross-check against the census ------------------------------------------------


def test_weights_match_census_existence():
    # for small moduli, n <= 12 is achievable iff some nonnegative combination
    # of the census minimal weights reaches n
    for m in (12, 14, 15, 30):
        weights = sorted({r.weight for r in enumerate_minimal(m, 7)})
        reach = reachable(tuple(weights), 12)
        for n in range(13):
            assert is_weight(m, n) == reach[n], (m, n)


# -- character-value checks -------------------------------------------------------------------


@pytest.mark.parametrize(
    "degree, value, order, expected",
    [
        (7, 0, 10, True),
        (7, -1, 15, True),
        (6, 1, 14, True),
        (3, 0, 4, False),
    ],
)
def test_char_check_examples(degree, value, order, expected):
    verdict = char_constraint_check(CharCheckInput(degree, value, order))
    assert verdict.passed is expected
    assert verdict.t == degree + abs(value)


def test_char_check_positive_even_t_is_unconstrained():
    verdict = char_constraint_check(CharCheckInput(5, 1, 14))
    assert verdict.passed
    assert "no constraint" in verdict.rule


def test_char_check_odd_t_without_odd_prime_fails():
    verdict = char_constraint_check(CharCheckInput(4, 1, 8))
    assert not verdict.passed


def test_char_check_input_validation():
    with pytest.raises(ValueError):
        CharCheckInput(0, 0, 5)
    with pytest.raises(ValueError):
        CharCheckInput(3, 4, 5)
    with pytest.raises(ValueError):
        CharCheckInput(3, 1, 0)


def test_char_check_random_consistency():
    # a nonpositive-value pass must always be witnessed by the weight set
    rng = random.Random(61)
    for _ in range(100):
        degree = rng.randint(1, 30)
        value = rng.randint(-degree, 0)
        order = rng.randint(2, 60)
        verdict = char_constraint_check(CharCheckInput(degree, value, order))
        assert verdict.passed == is_weight(order, verdict.t)
