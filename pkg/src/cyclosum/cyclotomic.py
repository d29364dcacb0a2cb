"""Cyclotomic polynomials, the evaluation map onto cyclotomic integers, and
constructive decompositions of its kernel.

The map phi sends the group generator z to a fixed primitive m-th root of
unity, so an element of the group ring lands in the ring of cyclotomic
integers, represented exactly in the power basis 1, zeta, ..., zeta^(phi(m)-1).
An element is a formal vanishing sum precisely when its image is zero.  The
kernel is generated by the rotations of the prime-order subgroup sums
sigma(P_i); the decomposition routines here produce explicit certificates in
terms of those generators, every certificate being checked by exact
recombination before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .groupring import GroupRingElement, element_to_json, factorize, sigma_subgroup
from .hnf import LatticeBasis, lattice_basis


# -- integer polynomials ------------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients lowest degree first.

    The zero polynomial is the empty tuple; otherwise the leading coefficient
    is nonzero.
    """

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use make_poly)")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return make_poly([x + y for x, y in zip(a, b)])

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return make_poly([x - y for x, y in zip(a, b)])

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return make_poly(out)

    def __divmod__(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Exact-step polynomial division: every elimination step must divide over Z."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [0] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        lead = other.coeffs[-1]
        while len(rem) >= len(other.coeffs) and any(rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) < len(other.coeffs):
                break
            q, r = divmod(rem[-1], lead)
            if r:
                raise ValueError(f"coefficient {rem[-1]} not divisible by {lead}")
            shift = len(rem) - len(other.coeffs)
            quo[shift] = q
            for i, c in enumerate(other.coeffs):
                rem[shift + i] -= q * c
        return make_poly(quo), make_poly(rem)

    def __str__(self) -> str:
        return format_poly(self)


def make_poly(coeffs) -> IntPolynomial:
    """Normalize a coefficient list (strip trailing zeros) into an IntPolynomial."""
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return IntPolynomial(tuple(cs))


def format_poly(p: IntPolynomial) -> str:
    """Ascending text form, e.g. '1 - X + X^3 - X^4 + X^5 - X^7 + X^8'."""
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = "X" if mag == 1 else f"{mag}*X"
        else:
            body = f"X^{k}" if mag == 1 else f"{mag}*X^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def euler_phi(m: int) -> int:
    fact = factorize(m)
    n = 1
    for p, a in zip(fact.primes, fact.exponents):
        n *= p ** (a - 1) * (p - 1)
    return n


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    """The m-th cyclotomic polynomial, monic of degree euler_phi(m).

    Computed by exactly dividing X^m - 1 by the cyclotomic polynomials of all
    proper divisors of m.
    """
    if m < 1:
        raise ValueError(f"index must be positive, got {m}")
    poly = make_poly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            poly, rem = divmod(poly, cyclotomic_poly(d))
            assert rem.is_zero()
    return poly


@lru_cache(maxsize=None)
def reduction_table(m: int) -> tuple[tuple[int, ...], ...]:
    """Power-basis coordinates of z^e modulo the m-th cyclotomic polynomial.

    Entry e is the length-euler_phi(m) coordinate vector of X^e reduced mod
    Phi_m; summing coefficient-weighted entries evaluates the map phi exactly.
    """
    phi = cyclotomic_poly(m)
    deg = phi.degree
    rows: list[tuple[int, ...]] = []
    cur = [0] * deg
    if deg > 0:
        cur[0] = 1
    rows.append(tuple(cur))
    for _ in range(1, m):
        lead = cur[deg - 1]
        nxt = [0] + cur[: deg - 1]
        if lead:
            for i in range(deg):
                nxt[i] -= lead * phi.coeffs[i]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


# -- the evaluation map -------------------------------------------------------


@dataclass(frozen=True)
class CyclotomicInteger:
    """Coordinates of an algebraic integer in the power basis of the m-th cyclotomic field."""

    m: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coords) != euler_phi(self.m):
            raise ValueError(
                f"coordinate vector has length {len(self.coords)}, expected {euler_phi(self.m)}"
            )

    def is_zero(self) -> bool:
        return not any(self.coords)


def phi_map(x: GroupRingElement) -> CyclotomicInteger:
    """Image of x under z -> zeta, reduced exactly into the power basis."""
    m = x.modulus
    table = reduction_table(m)
    deg = euler_phi(m)
    acc = [0] * deg
    for e, c in enumerate(x.coeffs):
        if c:
            row = table[e]
            for i in range(deg):
                acc[i] += c * row[i]
    return CyclotomicInteger(m, tuple(acc))


def in_kernel(x: GroupRingElement) -> bool:
    """Whether x encodes a formal vanishing sum, i.e. phi_map(x) = 0."""
    return phi_map(x).is_zero()


class NotInKernelError(ValueError):
    """Raised when an operation requires a kernel element; carries the nonzero image."""

    def __init__(self, element: GroupRingElement, image: CyclotomicInteger):
        self.element = element
        self.image = image
        super().__init__(f"element is not in the kernel: phi(x) has coordinates {image.coords}")


def _require_kernel(x: GroupRingElement) -> None:
    image = phi_map(x)
    if not image.is_zero():
        raise NotInKernelError(x, image)


# -- kernel certificates ------------------------------------------------------


@dataclass(frozen=True)
class KernelCertificate:
    """Witness that x = sum_i parts[i] * sigma(P_i) over the primes of m."""

    m: int
    primes: tuple[int, ...]
    parts: tuple[GroupRingElement, ...]

    def recombine(self) -> GroupRingElement:
        total = GroupRingElement.zero(self.m)
        for p, part in zip(self.primes, self.parts):
            total = total + part * sigma_subgroup(self.m, p)
        return total

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "parts": {str(p): element_to_json(part)["coeffs"] for p, part in zip(self.primes, self.parts)},
        }


@dataclass(frozen=True)
class _GeneratorLattice:
    """Cached echelon data for the lattice spanned by all rotations z^a * sigma(P_i)."""

    m: int
    primes: tuple[int, ...]
    basis: LatticeBasis
    # Augmentation image of each relation among the generators, one length-r
    # vector per kernel transform; these span the achievable shifts of the
    # per-prime part augmentations.
    eps_images: tuple[tuple[int, ...], ...]
    eps_basis: LatticeBasis


@lru_cache(maxsize=None)
def _generator_lattice(m: int) -> _GeneratorLattice:
    fact = factorize(m)
    rows: list[tuple[int, ...]] = []
    for p in fact.primes:
        sigma = sigma_subgroup(m, p)
        for a in range(m):
            rows.append(sigma.rotate(a).coeffs)
    basis = lattice_basis(rows)
    eps_images = tuple(
        tuple(sum(transform[i * m : (i + 1) * m]) for i in range(fact.r))
        for transform in basis.kernel_transforms
    )
    eps_basis = lattice_basis(list(eps_images)) if eps_images else lattice_basis([])
    return _GeneratorLattice(m, fact.primes, basis, eps_images, eps_basis)


def _combo_to_parts(m: int, primes: tuple[int, ...], combo: list[int]) -> tuple[GroupRingElement, ...]:
    return tuple(
        GroupRingElement(m, tuple(combo[i * m : (i + 1) * m])) for i in range(len(primes))
    )


def kernel_decompose(x: GroupRingElement) -> KernelCertificate:
    """Express a kernel element as sum_i z_i * sigma(P_i).

    Certificates are not unique; the returned one is whatever the cached
    echelon solve produces, and it is verified by exact recombination before
    being handed back.  Raises NotInKernelError (with the nonzero image as
    witness) when x is not a vanishing sum.
    """
    m = x.modulus
    if m < 2:
        raise ValueError("kernel decomposition needs modulus m > 1")
    _require_kernel(x)
    lattice = _generator_lattice(m)
    combo = lattice.basis.solve(list(x.coeffs))
    if combo is None:  # cannot happen: the generators span the kernel
        raise AssertionError("kernel element outside the generator lattice")
    cert = KernelCertificate(m, lattice.primes, _combo_to_parts(m, lattice.primes, combo))
    assert cert.recombine() == x
    return cert


def constrained_decompose(x: GroupRingElement) -> KernelCertificate | None:
    """A kernel certificate whose parts all have nonnegative augmentation, if one exists.

    Applying the augmentation to x = sum z_i * sigma(P_i) forces
    sum eps(z_i) * p_i = eps(x), so the candidate augmentation vectors form a
    finite set.  A candidate is achievable iff it differs from the
    augmentation vector of one base certificate by an element of the
    augmentation image of the relation lattice, which is decided exactly.
    Returns None when no candidate is achievable: the verdict is definitive
    in both directions.
    """
    m = x.modulus
    if not x.is_nonnegative():
        raise ValueError("element must lie in the positive cone")
    if x.is_zero():
        fact = factorize(m)
        zero = GroupRingElement.zero(m)
        return KernelCertificate(m, fact.primes, tuple(zero for _ in fact.primes))
    _require_kernel(x)
    lattice = _generator_lattice(m)
    primes = lattice.primes
    base = lattice.basis.solve(list(x.coeffs))
    assert base is not None
    r = len(primes)
    base_eps = [sum(base[i * m : (i + 1) * m]) for i in range(r)]
    weight = x.augmentation()

    def targets(idx: int, remaining: int):
        if idx == r - 1:
            if remaining % primes[idx] == 0:
                yield (remaining // primes[idx],)
            return
        p = primes[idx]
        for e in range(remaining // p + 1):
            for rest in targets(idx + 1, remaining - e * p):
                yield (e,) + rest

    for target in targets(0, weight):
        shift = [t - b for t, b in zip(target, base_eps)]
        coeffs = lattice.eps_basis.solve(shift)
        if coeffs is None:
            continue
        combo = list(base)
        for c, transform in zip(coeffs, lattice.basis.kernel_transforms):
            if c:
                for j in range(len(combo)):
                    combo[j] += c * transform[j]
        cert = KernelCertificate(m, primes, _combo_to_parts(m, primes, combo))
        assert cert.recombine() == x
        assert tuple(part.augmentation() for part in cert.parts) == target
        return cert
    return None


# -- structural decompositions ------------------------------------------------


def coset_split(x: GroupRingElement) -> list[tuple[int, GroupRingElement]]:
    """Split a nonnegative kernel element along the cosets of the radical subgroup.

    G0 is the unique subgroup whose order is the radical of m.  The return
    value pairs each coset exponent j (0 <= j < m / |G0|) whose coset meets
    the support with a part supported on G0, such that
    x = sum_j part_j.rotate(j); every part is itself a nonnegative kernel
    element (this is asserted, not assumed).
    """
    if not x.is_nonnegative():
        raise ValueError("element must lie in the positive cone")
    _require_kernel(x)
    m = x.modulus
    fact = factorize(m)
    m0 = fact.radical
    q = m // m0
    parts: list[tuple[int, GroupRingElement]] = []
    for j in range(q):
        coeffs = [0] * m
        nonzero = False
        for t in range(m0):
            c = x.coeffs[(j + t * q) % m]
            if c:
                coeffs[(t * q) % m] = c
                nonzero = True
        if not nonzero:
            continue
        part = GroupRingElement(m, tuple(coeffs))
        assert in_kernel(part)
        parts.append((j, part))
    total = GroupRingElement.zero(m)
    for j, part in parts:
        total = total + part.rotate(j)
    assert total == x
    return parts


def squarefree_reduce(x: GroupRingElement) -> tuple[int, GroupRingElement]:
    """Rotate a single-coset kernel element onto the radical subgroup and collapse it.

    Returns (shift, reduced) where x.rotate(shift) is supported on G0 and
    `reduced`, over modulus rad(m), reads off the support through the
    embedding k -> k * (m / rad(m)).  Augmentation and support size are
    preserved, and the reduced element is again a vanishing sum.  Elements
    meeting more than one coset (hence decomposable) are rejected.
    """
    parts = coset_split(x)
    if len(parts) != 1:
        raise ValueError(
            f"element meets {len(parts)} cosets of the radical subgroup; "
            "square-free reduction applies to minimal (single-coset) elements"
        )
    m = x.modulus
    fact = factorize(m)
    m0 = fact.radical
    q = m // m0
    j, part = parts[0]
    reduced = GroupRingElement(m0, tuple(part.coeffs[(t * q) % m] for t in range(m0)))
    assert in_kernel(reduced)
    assert reduced.augmentation() == x.augmentation()
    assert reduced.support_size() == x.support_size()
    return (-j) % m, reduced


def _two_prime_squarefree(x: GroupRingElement) -> tuple[GroupRingElement, GroupRingElement]:
    """The constructive two-prime decomposition over a square-free modulus."""
    m = x.modulus
    fact = factorize(m)
    if fact.r == 1:
        p = fact.primes[0]
        c = x.coeffs[0]
        if x != c * sigma_subgroup(m, p):
            raise ValueError("nonnegative kernel element over one prime must be a multiple of sigma(P1)")
        return GroupRingElement.monomial(m, 0, c), GroupRingElement.zero(m)
    p1, p2 = fact.primes
    g2 = m // p2  # generator exponent of the order-p2 subgroup
    g1 = m // p1
    sigma1 = sigma_subgroup(m, p1)
    # Slice x along powers of the order-p2 generator: slice i lives in N*P1.
    slices: list[list[int]] = []
    for i in range(p2):
        slices.append([x.coeffs[(u * g1 + i * g2) % m] for u in range(p1)])
    eps = [sum(s) for s in slices]
    imin = min(range(p2), key=lambda i: (eps[i], i))
    base = slices[imin]
    b_coeffs = [0] * m
    for j in range(p2):
        diff = eps[j] - eps[imin]
        zj, rem = divmod(diff, p1)
        assert rem == 0 and zj >= 0
        # The whole difference must be a uniform stack of sigma(P1).
        assert all(slices[j][u] - base[u] == zj for u in range(p1))
        b_coeffs[(j * g2) % m] = zj
    a_coeffs = [0] * m
    for u in range(p1):
        a_coeffs[(u * g1) % m] = base[u]
    a = GroupRingElement(m, tuple(a_coeffs))
    b = GroupRingElement(m, tuple(b_coeffs))
    assert a * sigma_subgroup(m, p2) + b * sigma1 == x
    return a, b


def two_prime_decompose(x: GroupRingElement) -> tuple[GroupRingElement, GroupRingElement]:
    """Decompose a nonnegative kernel element over at most two primes.

    For r = 2 returns (a, b) with a supported in P1, b in P2, and
    x = a * sigma(P2) + b * sigma(P1).  For r = 1 returns (a, b) with
    x = a * sigma(P1), a a constant, b = 0.  The decomposition in this exact
    shape only exists when the support lies on the radical subgroup (always
    true for square-free m, and for m = 12 the element z * (1 + z^6) is a
    nonnegative kernel element with no such decomposition), so other inputs
    are rejected.
    """
    m = x.modulus
    fact = factorize(m)
    if fact.r > 2:
        raise ValueError(f"modulus {m} has {fact.r} prime divisors; this decomposition needs r <= 2")
    if not x.is_nonnegative():
        raise ValueError("element must lie in the positive cone")
    _require_kernel(x)
    if x.is_zero():
        return GroupRingElement.zero(m), GroupRingElement.zero(m)
    m0 = fact.radical
    q = m // m0
    if any(k % q for k in x.support()):
        raise ValueError(
            "support is not contained in the radical subgroup; no decomposition "
            "a * sigma(P2) + b * sigma(P1) exists for this element"
        )
    if q == 1:
        return _two_prime_squarefree(x)
    collapsed = GroupRingElement(m0, tuple(x.coeffs[(t * q) % m] for t in range(m0)))
    a0, b0 = _two_prime_squarefree(collapsed)

    def embed(y: GroupRingElement) -> GroupRingElement:
        coeffs = [0] * m
        for t, c in enumerate(y.coeffs):
            coeffs[(t * q) % m] = c
        return GroupRingElement(m, tuple(coeffs))

    a, b = embed(a0), embed(b0)
    if fact.r == 2:
        assert a * sigma_subgroup(m, fact.primes[1]) + b * sigma_subgroup(m, fact.primes[0]) == x
    else:
        assert a * sigma_subgroup(m, fact.primes[0]) == x
    return a, b


# -- numeric oracle -----------------------------------------------------------


@dataclass(frozen=True)
class ComplexEstimate:
    """A numeric evaluation together with a rigorous error bound.

    The true value differs from `value` by at most `error_bound` in absolute
    value.  The two convenience predicates implement the threshold test used
    to cross-check exact kernel membership.
    """

    value: mpmath.mpc
    error_bound: mpmath.mpf

    def consistent_with_zero(self) -> bool:
        return abs(self.value) <= self.error_bound

    def definitely_nonzero(self) -> bool:
        return abs(self.value) > 2 * self.error_bound


@lru_cache(maxsize=None)
def _root_table(m: int, working_prec: int) -> tuple:
    with mpmath.workprec(working_prec):
        return tuple(mpmath.expjpi(mpmath.mpf(2 * k) / m) for k in range(m))


def complex_eval(x: GroupRingElement, precision_bits: int = 128) -> ComplexEstimate:
    """Evaluate sum_k coeffs[k] * exp(2*pi*i*k/m) to the requested precision.

    Arithmetic runs 16 guard bits above precision_bits, and the reported
    bound (support+4) * sum|coeffs| * 2^(1-precision_bits) therefore
    overstates the actual roundoff by a factor of at least 2^15; the bound is
    rigorous but the oracle is only a cross-check, exact routines never
    consume it.
    """
    if precision_bits < 64:
        raise ValueError(f"precision_bits must be >= 64, got {precision_bits}")
    m = x.modulus
    working = precision_bits + 16
    table = _root_table(m, working)
    with mpmath.workprec(working):
        value = mpmath.mpc(0)
        total = 0
        nterms = 0
        for k, c in enumerate(x.coeffs):
            if c:
                value += c * table[k]
                total += abs(c)
                nterms += 1
        bound = mpmath.mpf(total) * (nterms + 4) * mpmath.mpf(2) ** (1 - precision_bits)
    return ComplexEstimate(value=value, error_bound=bound)


def poly_to_json(p: IntPolynomial) -> list[int]:
    return list(p.coeffs)
