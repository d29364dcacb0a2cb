"""Independent brute-force oracle for the census tests.

Everything here is deliberately written from scratch against the library:
cyclotomic polynomials via the Moebius product formula (not recursive
division), kernel membership via direct polynomial remainders, enumeration of
all exponent multisets with no anchoring and no pruning, and minimality by a
full scan over proper sub-multisets.  Slow and simple on purpose.
"""

from __future__ import annotations

from itertools import combinations_with_replacement


def moebius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    quo = [0] * max(len(num) - len(den) + 1, 1)
    while len(num) >= len(den) and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        q, r = divmod(num[-1], den[-1])
        assert r == 0, "division is only used with monic denominators"
        shift = len(num) - len(den)
        quo[shift] = q
        for i, c in enumerate(den):
            num[shift + i] -= q * c
        num.pop()
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return quo, num


def naive_cyclotomic(m: int) -> list[int]:
    """Phi_m as a coefficient list, via prod_{d|m} (X^d - 1)^moebius(m/d)."""
    numerator = [1]
    denominator = [1]
    for d in range(1, m + 1):
        if m % d:
            continue
        mu = moebius(m // d)
        factor = [-1] + [0] * (d - 1) + [1]
        if mu == 1:
            numerator = _poly_mul(numerator, factor)
        elif mu == -1:
            denominator = _poly_mul(denominator, factor)
    quo, rem = _poly_divmod(numerator, denominator)
    assert not any(rem)
    return quo


def _monomial_remainders(m: int) -> list[tuple[int, ...]]:
    phi = naive_cyclotomic(m)
    deg = len(phi) - 1
    table = []
    for e in range(m):
        monomial = [0] * e + [1]
        _, rem = _poly_divmod(monomial, phi)
        rem = rem + [0] * (deg - len(rem))
        table.append(tuple(rem[:deg]))
    return table


def naive_in_kernel(coeffs, m: int) -> bool:
    table = _monomial_remainders(m)
    deg = len(table[0])
    acc = [0] * deg
    for e, c in enumerate(coeffs):
        if c:
            for i in range(deg):
                acc[i] += c * table[e][i]
    return not any(acc)


def naive_canon(coeffs) -> tuple[int, ...]:
    m = len(coeffs)
    return max(tuple(coeffs[(j - k) % m] for j in range(m)) for k in range(m))


def _sub_multisets(support: list[tuple[int, int]]):
    ranges = [range(c + 1) for _, c in support]

    def walk(idx, acc):
        if idx == len(support):
            yield tuple(acc)
            return
        for take in ranges[idx]:
            acc.append(take)
            yield from walk(idx + 1, acc)
            acc.pop()

    yield from walk(0, [])


def naive_minimal_classes(m: int, max_weight: int) -> set[tuple[int, ...]]:
    """Canonical coefficient tuples of every minimal class of weight <= max_weight."""
    table = _monomial_remainders(m)
    deg = len(table[0])
    classes: set[tuple[int, ...]] = set()
    for k in range(1, max_weight + 1):
        for multiset in combinations_with_replacement(range(m), k):
            acc = [0] * deg
            for e in multiset:
                for i in range(deg):
                    acc[i] += table[e][i]
            if any(acc):
                continue
            coeffs = [0] * m
            for e in multiset:
                coeffs[e] += 1
            support = [(e, c) for e, c in enumerate(coeffs) if c]
            total = sum(c for _, c in support)
            minimal = True
            for choice in _sub_multisets(support):
                taken = sum(choice)
                if taken == 0 or taken == total:
                    continue
                sub = [0] * deg
                for (e, _), c in zip(support, choice):
                    if c:
                        for i in range(deg):
                            sub[i] += c * table[e][i]
                if not any(sub):
                    minimal = False
                    break
            if minimal:
                classes.add(naive_canon(coeffs))
    return classes
