"""Exact arithmetic in the integer group ring of a finite cyclic group.

The group is written multiplicatively with a fixed generator z of order m, and
an element is stored as a dense length-m vector of Python ints, coeffs[k]
being the coefficient of z^k.  Products are cyclic convolutions of exponent
sequences.  All coefficient arithmetic is arbitrary precision, so every
operation is exact; there is no floating point anywhere in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its sorted prime factorization."""

    m: int
    primes: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"modulus must be positive, got {self.m}")
        if len(self.primes) != len(self.exponents):
            raise ValueError("primes and exponents must have equal length")
        if any(self.primes[i] >= self.primes[i + 1] for i in range(len(self.primes) - 1)):
            raise ValueError("primes must be strictly increasing")
        if any(a < 1 for a in self.exponents):
            raise ValueError("exponents must be positive")
        n = 1
        for p, a in zip(self.primes, self.exponents):
            n *= p**a
        if n != self.m:
            raise ValueError(f"factorization does not multiply out to {self.m}")

    @property
    def r(self) -> int:
        """Number of distinct prime divisors."""
        return len(self.primes)

    @property
    def radical(self) -> int:
        """Product of the distinct prime divisors (1 for m = 1)."""
        n = 1
        for p in self.primes:
            n *= p
        return n

    @property
    def is_squarefree(self) -> bool:
        return all(a == 1 for a in self.exponents)


def factorize(m: int) -> Factorization:
    """Factor m >= 1 by trial division (moduli here are desk scale)."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    primes: list[int] = []
    exponents: list[int] = []
    n = m
    p = 2
    while p * p <= n:
        if n % p == 0:
            a = 0
            while n % p == 0:
                n //= p
                a += 1
            primes.append(p)
            exponents.append(a)
        p += 1 if p == 2 else 2
    if n > 1:
        primes.append(n)
        exponents.append(1)
    return Factorization(m, tuple(primes), tuple(exponents))


@dataclass(frozen=True)
class GroupRingElement:
    """An element sum_k coeffs[k] * z^k of the group ring of a cyclic group.

    Values are immutable; every operation returns a new element.  The partial
    order `y >= x` compares coefficientwise, so it is a genuine partial order
    (both directions may be False), exactly like subset comparison on sets.
    """

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")
        if len(self.coeffs) != self.modulus:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, expected {self.modulus}"
            )
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("coefficients must be ints")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, m: int) -> GroupRingElement:
        return cls(m, (0,) * m)

    @classmethod
    def one(cls, m: int) -> GroupRingElement:
        return cls.monomial(m, 0)

    @classmethod
    def monomial(cls, m: int, exponent: int, coeff: int = 1) -> GroupRingElement:
        """The element coeff * z^exponent (exponent taken mod m)."""
        coeffs = [0] * m
        coeffs[exponent % m] = coeff
        return cls(m, tuple(coeffs))

    @classmethod
    def from_dict(cls, m: int, terms: dict[int, int]) -> GroupRingElement:
        coeffs = [0] * m
        for e, c in terms.items():
            coeffs[e % m] += c
        return cls(m, tuple(coeffs))

    # -- ring structure ----------------------------------------------------

    def _check_same_modulus(self, other: GroupRingElement) -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._check_same_modulus(other)
        return GroupRingElement(
            self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        self._check_same_modulus(other)
        return GroupRingElement(
            self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement(self.modulus, tuple(-a for a in self.coeffs))

    def __mul__(self, other: GroupRingElement | int) -> GroupRingElement:
        if isinstance(other, int):
            return GroupRingElement(self.modulus, tuple(other * a for a in self.coeffs))
        self._check_same_modulus(other)
        m = self.modulus
        out = [0] * m
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % m] += a * b
        return GroupRingElement(m, tuple(out))

    def __rmul__(self, other: int) -> GroupRingElement:
        return self.__mul__(other)

    # -- partial order (coefficientwise) -----------------------------------

    def __ge__(self, other: GroupRingElement) -> bool:
        self._check_same_modulus(other)
        return all(a >= b for a, b in zip(self.coeffs, other.coeffs))

    def __le__(self, other: GroupRingElement) -> bool:
        return other.__ge__(self)

    def is_nonnegative(self) -> bool:
        """Whether the element lies in the positive cone (all coefficients >= 0)."""
        return all(c >= 0 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # -- derived quantities --------------------------------------------------

    def augmentation(self) -> int:
        """Sum of the coefficients: the weight of the vanishing sum the element encodes."""
        return sum(self.coeffs)

    def support_size(self) -> int:
        """Number of nonzero coefficients."""
        return sum(1 for c in self.coeffs if c)

    def support(self) -> tuple[int, ...]:
        return tuple(k for k, c in enumerate(self.coeffs) if c)

    def rotate(self, k: int) -> GroupRingElement:
        """Multiply by z^k, i.e. shift every exponent by k mod m."""
        m = self.modulus
        k %= m
        if k == 0:
            return self
        return GroupRingElement(m, tuple(self.coeffs[(j - k) % m] for j in range(m)))

    def canonical_rotation(self) -> tuple[int, GroupRingElement]:
        """The distinguished representative of the rotation class.

        Returns (shift, canon) with canon = self.rotate(shift) and
        canon.coeffs lexicographically greatest among all m rotations (ties
        broken by smallest shift).  Maximising anchors the support at
        exponent 0, so two elements are rotation equivalent iff their canons
        are equal.
        """
        m = self.modulus
        best = self.coeffs
        best_shift = 0
        for k in range(1, m):
            cand = tuple(self.coeffs[(j - k) % m] for j in range(m))
            if cand > best:
                best, best_shift = cand, k
        return best_shift, GroupRingElement(m, best)

    # -- presentation --------------------------------------------------------

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"GroupRingElement({self.modulus}, {format_element(self)!r})"


def sigma_subgroup(m: int, d: int) -> GroupRingElement:
    """Sum of the unique subgroup of order d: sum_{k<d} z^((m/d)*k).  Requires d | m."""
    if m < 1 or d < 1 or m % d != 0:
        raise ValueError(f"order {d} does not divide modulus {m}")
    step = m // d
    coeffs = [0] * m
    for k in range(d):
        coeffs[step * k] = 1
    return GroupRingElement(m, tuple(coeffs))


def subgroup_exponents(m: int, d: int) -> tuple[int, ...]:
    """Exponents of the unique order-d subgroup, ascending.  Requires d | m."""
    if m % d != 0:
        raise ValueError(f"order {d} does not divide modulus {m}")
    step = m // d
    return tuple(step * k for k in range(d))


# -- text and JSON forms -----------------------------------------------------
#
# Grammar:  element := '-'? term (('+'|'-') term)* | '0'
#           term    := [c '*'] 'z^' k       with integer c >= 1, 0 <= k < m
# The leading sign and the literal '0' extend the basic grammar so that every
# element has a printable, re-parseable form.

_TERM_RE = re.compile(r"(?:(\d+)\s*\*\s*)?z\^(\d+)")


def parse_element(text: str, m: int) -> GroupRingElement:
    """Parse the sparse text form of an element over the given modulus."""
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    s = text.strip()
    if s == "0":
        return GroupRingElement.zero(m)
    coeffs = [0] * m
    pos = 0
    sign = 1
    if s.startswith("-"):
        sign = -1
        pos = 1
    while True:
        while pos < len(s) and s[pos].isspace():
            pos += 1
        match = _TERM_RE.match(s, pos)
        if match is None:
            raise ValueError(f"bad element syntax at {s[pos:pos + 12]!r}")
        c = int(match.group(1)) if match.group(1) else 1
        k = int(match.group(2))
        if c < 1:
            raise ValueError(f"coefficient must be >= 1 in term {match.group(0)!r}")
        if not 0 <= k < m:
            raise ValueError(f"exponent {k} out of range for modulus {m} in term {match.group(0)!r}")
        coeffs[k] += sign * c
        pos = match.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        if s[pos] == "+":
            sign = 1
        elif s[pos] == "-":
            sign = -1
        else:
            raise ValueError(f"expected '+' or '-' at {s[pos:pos + 12]!r}")
        pos += 1
    return GroupRingElement(m, tuple(coeffs))


def format_element(x: GroupRingElement) -> str:
    """Sparse text form, terms in ascending exponent order.  Inverse of parse_element."""
    parts: list[str] = []
    for k, c in enumerate(x.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        term = f"z^{k}" if mag == 1 else f"{mag}*z^{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {term}")
    if not parts:
        return "0"
    return " ".join(parts)


def element_to_json(x: GroupRingElement) -> dict:
    """JSON form {"m": m, "coeffs": {exponent: coefficient}} with zeros omitted."""
    return {"m": x.modulus, "coeffs": {str(k): c for k, c in enumerate(x.coeffs) if c}}


def element_from_json(obj: dict) -> GroupRingElement:
    try:
        m = int(obj["m"])
        items = obj.get("coeffs", {})
        coeffs = [0] * m
        for key, value in items.items():
            k = int(key)
            if not 0 <= k < m:
                raise ValueError(f"exponent {k} out of range for modulus {m}")
            coeffs[k] = int(value)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed element object: {obj!r}") from exc
    return GroupRingElement(m, tuple(coeffs))


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
