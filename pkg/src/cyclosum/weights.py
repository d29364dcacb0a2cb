"""Weight sets of vanishing sums and the numerical semigroup behind them.

The achievable weights of vanishing sums of m-th roots of unity form the
numerical semigroup generated by the distinct primes dividing m.  This module
computes that set (conductor and gaps), answers membership queries, and
applies the same arithmetic to integrality constraints on character values of
finite group elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .groupring import factorize


def _reachable(generators: tuple[int, ...], limit: int) -> list[bool]:
    # Coin-style DP: reach[n] iff n is a nonnegative integer combination.
    reach = [False] * (limit + 1)
    reach[0] = True
    for g in generators:
        for n in range(g, limit + 1):
            if reach[n - g]:
                reach[n] = True
    return reach


@dataclass(frozen=True)
class WeightSet:
    """The set of achievable weights for a fixed modulus.

    For r >= 2 primes the set is cofinite: `conductor` is the least c with
    every n >= c a member and `gaps` lists the finitely many non-members
    below it.  For r = 1 the set is the multiples of the single prime;
    `periodic` is True, `conductor` is None and `gaps` is empty.
    """

    m: int
    primes: tuple[int, ...]
    conductor: int | None
    gaps: tuple[int, ...]
    periodic: bool

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if self.periodic:
            return n % self.primes[0] == 0
        if n >= self.conductor:
            return True
        return n not in self.gaps

    def members(self, limit: int) -> list[int]:
        """All members up to and including limit, ascending."""
        return [n for n in range(limit + 1) if n in self]

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "primes": list(self.primes),
            "conductor": self.conductor,
            "gaps": list(self.gaps),
        }


@lru_cache(maxsize=None)
def weight_set(m: int) -> WeightSet:
    """The weight set for modulus m >= 2: the semigroup generated by its primes.

    The gap scan runs up to (p1-1)*(p2-1) for the two smallest primes, which
    already bounds the conductor; extra primes can only shrink it.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    primes = factorize(m).primes
    if len(primes) == 1:
        return WeightSet(m, primes, None, (), periodic=True)
    ceiling = (primes[0] - 1) * (primes[1] - 1)
    reach = _reachable(primes, max(ceiling - 1, 0))
    gaps = tuple(n for n in range(1, ceiling) if not reach[n])
    conductor = (gaps[-1] + 1) if gaps else 0
    return WeightSet(m, primes, conductor, gaps, periodic=False)


def is_weight(m: int, n: int) -> bool:
    """Whether a nonempty-or-empty vanishing sum of m-th roots of unity has weight n."""
    return n in weight_set(m)


def smallest_positive_weight(m: int) -> int:
    """The least nonzero achievable weight: the smallest prime divisor of m."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return factorize(m).primes[0]


def frobenius_bound(p: int, q: int) -> int:
    """(p-1)*(q-1): every n at or above it lies in Np + Nq for coprime p, q."""
    if p < 1 or q < 1:
        raise ValueError("arguments must be positive")
    if gcd(p, q) != 1:
        raise ValueError(f"{p} and {q} are not coprime")
    return (p - 1) * (q - 1)


# -- character-value constraints ----------------------------------------------


@dataclass(frozen=True)
class CharCheckInput:
    """Character data for one group element: degree chi(1), the integer value
    chi(g), and the order m of g."""

    degree: int
    value: int
    order: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError(f"degree must be >= 1, got {self.degree}")
        if abs(self.value) > self.degree:
            raise ValueError(
                f"|value| = {abs(self.value)} exceeds degree {self.degree}; "
                "a character value on an element is a sum of `degree` roots of unity"
            )
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")


@dataclass(frozen=True)
class CharCheckVerdict:
    passed: bool
    t: int
    rule: str

    def __str__(self) -> str:
        return f"{'pass' if self.passed else 'fail'}: {self.rule} (t = {self.t})"


def char_constraint_check(data: CharCheckInput) -> CharCheckVerdict:
    """Necessary conditions on an integer character value of an order-m element.

    With t = degree + |value|: a nonpositive value forces t into the semigroup
    generated by the primes dividing the order; a positive value with odd t
    forces t to be at least the smallest odd prime dividing the order (the
    sum then involves 2m-th roots of unity, contributing only evenness).  A
    positive value with even t is unconstrained, and the verdict says so
    rather than certifying anything.
    """
    t = data.degree + abs(data.value)
    primes = factorize(data.order).primes
    if data.value <= 0:
        reach = _reachable(primes, t) if primes else [n == 0 for n in range(t + 1)]
        if reach[t]:
            return CharCheckVerdict(True, t, "t is a nonnegative combination of the primes dividing the order")
        return CharCheckVerdict(False, t, "t is not a nonnegative combination of the primes dividing the order")
    if t % 2 == 1:
        odd = [p for p in primes if p != 2]
        if odd and t >= odd[0]:
            return CharCheckVerdict(True, t, f"odd t is at least the smallest odd prime {odd[0]} dividing the order")
        if odd:
            return CharCheckVerdict(False, t, f"odd t is below the smallest odd prime {odd[0]} dividing the order")
        return CharCheckVerdict(False, t, "odd t but the order has no odd prime divisor")
    return CharCheckVerdict(True, t, "no constraint applicable (positive value, even t)")
