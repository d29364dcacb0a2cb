"""Exhaustive census of minimal vanishing sums up to rotation, the seed
constructions attaining the support lower bound, and machine verification of
the structure results at desk scale.

A minimal element is a nonzero nonnegative kernel element that is not the sum
of two nonzero nonnegative kernel elements.  The census enumerates one
representative per rotation class within a weight budget.  Search runs over
the radical of the modulus (every minimal class has a representative
supported on the radical subgroup) and lifts the classes back; enumeration is
a depth-first walk over nondecreasing exponent multisets anchored at exponent
0, pruned by the magnitude of the partial complex sum, with exact kernel and
minimality checks deciding everything the prune does not.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import random
from dataclasses import dataclass

from .groupring import (
    GroupRingElement,
    factorize,
    sigma_subgroup,
    subgroup_exponents,
)
from .cyclotomic import (
    complex_eval,
    in_kernel,
    phi_map,
    reduction_table,
)

WEIGHT_GUARD = 14

# Pruning slack, squared.  Partial sums of at most WEIGHT_GUARD unit-modulus
# terms carry under 5e-14 of double roundoff, so 1e-9 of slack can never
# prune a completable branch, and 1e-6 can never miss an exact zero.
_ZERO_GATE_SQ = 1e-12
_PRUNE_EPS = 1e-9


# -- minimality ----------------------------------------------------------------


@dataclass(frozen=True)
class MinimalityWitness:
    """Outcome of a minimality test: `verdict` is "minimal" or "decomposable",
    and `subsum` is a proper nonzero kernel element below x when decomposable."""

    verdict: str
    subsum: GroupRingElement | None

    @property
    def minimal(self) -> bool:
        return self.verdict == "minimal"


def _proper_kernel_subsum(coeffs, m: int, table) -> tuple[int, ...] | None:
    """First proper nonzero sub-element (coefficientwise) with zero image, or None.

    Walks the support positions in order, trying sub-coefficients 0..c at
    each, with the exact power-basis coordinates maintained incrementally.
    """
    dim = len(table[0])
    supp = [(e, c) for e, c in enumerate(coeffs) if c]
    total = sum(c for _, c in supp)
    acc = [0] * dim
    choice = [0] * len(supp)

    def walk(idx: int, taken: int) -> bool:
        if idx == len(supp):
            return 0 < taken < total and not any(acc)
        e, cmax = supp[idx]
        row = table[e]
        for take in range(cmax + 1):
            choice[idx] = take
            if take:
                for i in range(dim):
                    acc[i] += row[i]
            if walk(idx + 1, taken + take):
                return True
        for i in range(dim):
            acc[i] -= cmax * row[i]
        choice[idx] = 0
        return False

    if walk(0, 0):
        out = [0] * m
        for (e, _), c in zip(supp, choice):
            out[e] = c
        return tuple(out)
    return None


def is_minimal(x: GroupRingElement) -> MinimalityWitness:
    """Decide minimality of a nonzero nonnegative kernel element.

    Searches every proper nonzero y with 0 <= y <= x for kernel membership;
    the first hit is returned as the decomposition witness.
    """
    if x.is_zero():
        raise ValueError("minimality is defined for nonzero elements")
    if not x.is_nonnegative():
        raise ValueError("element must lie in the positive cone")
    if not in_kernel(x):
        raise ValueError("element is not a vanishing sum")
    witness = _proper_kernel_subsum(x.coeffs, x.modulus, reduction_table(x.modulus))
    if witness is None:
        return MinimalityWitness("minimal", None)
    return MinimalityWitness("decomposable", GroupRingElement(x.modulus, witness))


def classify(x: GroupRingElement) -> str:
    """"symmetric" when x is a rotation of a prime-order subgroup sum, else "asymmetric"."""
    if not is_minimal(x).minimal:
        raise ValueError("classification applies to minimal elements only")
    m = x.modulus
    canon = x.canonical_rotation()[1].coeffs
    for p in factorize(m).primes:
        if canon == sigma_subgroup(m, p).canonical_rotation()[1].coeffs:
            return "symmetric"
    return "asymmetric"


# -- the search ----------------------------------------------------------------


def _multiset_coords_zero(stack, table, dim) -> bool:
    acc = [0] * dim
    for e in stack:
        row = table[e]
        for i in range(dim):
            acc[i] += row[i]
    return not any(acc)


def _multiset_minimal(stack, m0: int, table) -> bool:
    coeffs = [0] * m0
    for e in stack:
        coeffs[e] += 1
    return _proper_kernel_subsum(coeffs, m0, table) is None


def _extend(m0, stack, last, rem, sre, sim, cre, cim, limits, table, dim, found):
    # rem = how many exponents may still be added (>= 1 on entry).
    for e in range(last, m0):
        nre = sre + cre[e]
        nim = sim + cim[e]
        a2 = nre * nre + nim * nim
        if a2 <= _ZERO_GATE_SQ:
            stack.append(e)
            if _multiset_coords_zero(stack, table, dim):
                # A kernel node: record if minimal, never extend (any proper
                # extension contains this element as a vanishing subsum).
                if _multiset_minimal(stack, m0, table):
                    found.append(tuple(stack))
                stack.pop()
                continue
            stack.pop()
        if rem > 1 and a2 <= limits[rem - 1]:
            stack.append(e)
            _extend(m0, stack, e, rem - 1, nre, nim, cre, cim, limits, table, dim, found)
            stack.pop()


def _extend_unpruned(m0, stack, last, rem, table, dim, found):
    for e in range(last, m0):
        stack.append(e)
        if _multiset_coords_zero(stack, table, dim):
            if _multiset_minimal(stack, m0, table):
                found.append(tuple(stack))
        elif rem > 1:
            _extend_unpruned(m0, stack, e, rem - 1, table, dim, found)
        stack.pop()


def _census_task(args) -> list[tuple[int, ...]]:
    """Search the subtree of multisets starting (0, second, ...); top-level so
    worker processes can receive it."""
    m0, max_weight, second, use_prune = args
    table = reduction_table(m0)
    dim = len(table[0])
    found: list[tuple[int, ...]] = []
    stack = [0, second]
    if _multiset_coords_zero(stack, table, dim):
        if _multiset_minimal(stack, m0, table):
            found.append(tuple(stack))
        return found
    if max_weight < 3:
        return found
    if use_prune:
        cre = [math.cos(2 * math.pi * k / m0) for k in range(m0)]
        cim = [math.sin(2 * math.pi * k / m0) for k in range(m0)]
        limits = [(k + _PRUNE_EPS) ** 2 for k in range(max_weight + 1)]
        sre = cre[0] + cre[second]
        sim = cim[0] + cim[second]
        _extend(m0, stack, second, max_weight - 2, sre, sim, cre, cim, limits, table, dim, found)
    else:
        _extend_unpruned(m0, stack, second, max_weight - 2, table, dim, found)
    return found


def _radical_classes(m0: int, max_weight: int, workers: int, use_prune: bool) -> set[tuple[int, ...]]:
    """Canonical coefficient tuples of all minimal classes over a square-free modulus."""
    if max_weight < 2:
        return set()
    tasks = [(m0, max_weight, second, use_prune) for second in range(m0)]
    if workers > 1:
        with multiprocessing.Pool(workers) as pool:
            results = pool.map(_census_task, tasks)
    else:
        results = [_census_task(t) for t in tasks]
    canons: set[tuple[int, ...]] = set()
    for result in results:
        for multiset in result:
            coeffs = [0] * m0
            for e in multiset:
                coeffs[e] += 1
            canons.add(GroupRingElement(m0, tuple(coeffs)).canonical_rotation()[1].coeffs)
    return canons


@dataclass(frozen=True)
class CensusRecord:
    """One rotation class of minimal vanishing sums."""

    canon: GroupRingElement
    weight: int
    support: int
    classification: str
    minimality_checked: bool = True


def enumerate_minimal(
    m: int,
    max_weight: int,
    *,
    workers: int = 1,
    use_prune: bool = True,
    force: bool = False,
) -> list[CensusRecord]:
    """All rotation classes of minimal elements with weight <= max_weight.

    Complete and duplicate-free: exactly one record per class, ordered by
    (weight, support, canonical coefficients).  Weights above the desk-scale
    guard of 14 are refused unless force=True, because the minimality scan is
    exponential in the weight.
    """
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if max_weight < 0:
        raise ValueError("max_weight must be nonnegative")
    if max_weight > WEIGHT_GUARD and not force:
        raise ValueError(
            f"max_weight {max_weight} exceeds the desk-scale guard {WEIGHT_GUARD}; "
            "pass force=True to override"
        )
    fact = factorize(m)
    m0 = fact.radical
    q = m // m0
    classes0 = _radical_classes(m0, max_weight, workers, use_prune)
    sym_canons = {sigma_subgroup(m, p).canonical_rotation()[1].coeffs for p in fact.primes}
    records = []
    for coeffs0 in classes0:
        lifted = [0] * m
        for t, c in enumerate(coeffs0):
            lifted[t * q] = c
        canon = GroupRingElement(m, tuple(lifted)).canonical_rotation()[1]
        cls = "symmetric" if canon.coeffs in sym_canons else "asymmetric"
        records.append(
            CensusRecord(canon, canon.augmentation(), canon.support_size(), cls, True)
        )
    records.sort(key=lambda rec: (rec.weight, rec.support, rec.canon.coeffs))
    return records


# -- census serialization -------------------------------------------------------


def record_to_json_line(record: CensusRecord) -> str:
    payload = {
        "m": record.canon.modulus,
        "weight": record.weight,
        "support": record.support,
        "class": record.classification,
        "coeffs": {str(k): c for k, c in enumerate(record.canon.coeffs) if c},
    }
    return json.dumps(payload, separators=(", ", ": "))


def record_from_json_line(line: str) -> CensusRecord:
    payload = json.loads(line)
    m = int(payload["m"])
    coeffs = [0] * m
    for key, value in payload["coeffs"].items():
        coeffs[int(key)] = int(value)
    return CensusRecord(
        GroupRingElement(m, tuple(coeffs)),
        int(payload["weight"]),
        int(payload["support"]),
        str(payload["class"]),
        True,
    )


def records_to_jsonl(records) -> str:
    return "".join(record_to_json_line(r) + "\n" for r in records)


def records_from_jsonl(text: str) -> list[CensusRecord]:
    return [record_from_json_line(line) for line in text.splitlines() if line.strip()]


# -- extremal constructions ------------------------------------------------------


def asymmetric_seed(m: int) -> GroupRingElement:
    """The minimal asymmetric element of least possible weight,
    sigma(P1*) * sigma(P2*) + sigma(P3*) over the three smallest primes.

    Its weight and support both equal (p1-1)(p2-1) + (p3-1)."""
    fact = factorize(m)
    if fact.r < 3:
        raise ValueError(f"modulus {m} has {fact.r} prime divisors; the construction needs 3")
    one = GroupRingElement.one(m)
    p1, p2, p3 = fact.primes[:3]
    s1 = sigma_subgroup(m, p1) - one
    s2 = sigma_subgroup(m, p2) - one
    s3 = sigma_subgroup(m, p3) - one
    return s1 * s2 + s3


def _weight_plus_one_template(m: int, p3: int, d_exp: int) -> GroupRingElement:
    t = GroupRingElement.monomial(m, m // 2)
    h = GroupRingElement.monomial(m, m // 3)
    one = GroupRingElement.one(m)
    d = GroupRingElement.monomial(m, d_exp)
    x = t * (h + h * h) * (one + d)
    for k in range(2, p3):
        x = x + GroupRingElement.monomial(m, k * d_exp % m)
    return x


def weight_plus_one_form(m: int) -> GroupRingElement:
    """The asymmetric minimal shape of weight (p1-1)(p2-1) + p3, which forces
    p1 = 2 and p2 = 3: t(h + h^2)(1 + d) + d^2 + ... + d^(p3-1).

    Built with the fixed generators t = z^(m/2), h = z^(m/3), d = z^(2m/p3).
    Requires 6 | m and at least three prime divisors."""
    fact = factorize(m)
    if m % 6:
        raise ValueError(f"no such element exists unless 6 divides the modulus (got {m})")
    if fact.r < 3:
        raise ValueError(f"modulus {m} has {fact.r} prime divisors; the construction needs 3")
    p3 = fact.primes[2]
    return _weight_plus_one_template(m, p3, 2 * (m // p3) % m)


def weight_plus_one_templates(m: int) -> tuple[GroupRingElement, ...]:
    """The weight-(bound+1) shape for every generator choice d of P3."""
    fact = factorize(m)
    if fact.r < 3 or m % 6:
        raise ValueError("templates need 6 | m and at least three prime divisors")
    p3 = fact.primes[2]
    g = m // p3
    return tuple(_weight_plus_one_template(m, p3, a * g % m) for a in range(1, p3))


# -- symmetric covers -------------------------------------------------------------


def symmetric_cover(x: GroupRingElement) -> list[tuple[int, int]] | None:
    """Write x as a sum of rotated prime-order subgroup sums, if possible.

    Returns a list of (prime, shift) pairs with
    x = sum sigma_subgroup(m, prime).rotate(shift), or None when x is not a
    nonnegative combination of rotated generators.  The search is complete:
    the first support point can only be covered by one rotation class of each
    sigma(P_i), so branching is over the primes alone.
    """
    if not x.is_nonnegative():
        raise ValueError("element must lie in the positive cone")
    m = x.modulus
    primes = factorize(m).primes
    sigmas = {p: sigma_subgroup(m, p) for p in primes}
    pieces: list[tuple[int, int]] = []

    def cover(y: GroupRingElement) -> bool:
        if y.is_zero():
            return True
        e0 = next(k for k, c in enumerate(y.coeffs) if c)
        for p in primes:
            piece = sigmas[p].rotate(e0)
            if y >= piece:
                pieces.append((p, e0))
                if cover(y - piece):
                    return True
                pieces.pop()
        return False

    return list(pieces) if cover(x) else None


# -- the transfer dichotomy ---------------------------------------------------------


@dataclass(frozen=True)
class TransferReport:
    """Which disjunct of the support-transfer dichotomy holds for (x, y).

    case: "A" when y >= x (reported with priority), else "B" or "B-equality"
    against support_bound = (p1 - eps0(x)) * (p2 - 1).  augmentation_case is
    the same trichotomy for the augmentation variant, present when
    eps(x) <= p1 - 1.  structure_shift witnesses the extremal structure
    x = c*sigma(X), y = c*sigma(X')*sigma(P2*) after rotation, present
    exactly in case B-equality.
    """

    case: str
    support_bound: int
    augmentation_case: str | None
    structure_shift: int | None


def _extremal_structure_shift(x: GroupRingElement, y: GroupRingElement, p1: int, p2: int) -> int:
    m = x.modulus
    p1_exps = set(subgroup_exponents(m, p1))
    sigma2_star = sigma_subgroup(m, p2) - GroupRingElement.one(m)
    for s in range(m):
        xs = x.rotate(s)
        supp = set(xs.support())
        if not supp or not supp <= p1_exps or supp == p1_exps:
            continue
        values = {xs.coeffs[k] for k in supp}
        if len(values) != 1:
            continue
        c = values.pop()
        if c <= 0:
            continue
        complement = GroupRingElement.from_dict(m, {k: 1 for k in p1_exps - supp})
        if y.rotate(s) == c * (complement * sigma2_star):
            return s
    raise RuntimeError(
        "equality case without the extremal structure: "
        f"x = {x}, y = {y} would contradict the classification"
    )


def check_transfer(x: GroupRingElement, y: GroupRingElement) -> TransferReport:
    """Check the dichotomy for nonnegative x, y with equal images over a
    square-free modulus: either y >= x, or the support of y is at least
    (p1 - eps0(x)) * (p2 - 1).

    Also checks the augmentation variant when it applies, and in the
    borderline case (equality in B, A failing) locates the rotation putting
    (x, y) into the extremal product shape.  A genuine violation of the
    dichotomy raises RuntimeError, since it would be a counterexample to the
    classification this library verifies.
    """
    if x.modulus != y.modulus:
        raise ValueError("moduli differ")
    fact = factorize(x.modulus)
    if not fact.is_squarefree or fact.r < 2:
        raise ValueError("the dichotomy is stated for square-free moduli with r >= 2")
    if not x.is_nonnegative() or not y.is_nonnegative():
        raise ValueError("both elements must lie in the positive cone")
    if phi_map(x) != phi_map(y):
        raise ValueError("elements do not have equal images")
    p1, p2 = fact.primes[:2]
    e0x = x.support_size()
    bound = (p1 - e0x) * (p2 - 1)

    if y >= x:
        # Case A needs no support hypothesis; the bound only backs the fallback.
        case = "A"
        shift = None
        assert y.support_size() >= e0x
    else:
        if e0x > p1 - 1:
            raise ValueError(f"support of x must be at most p1 - 1 = {p1 - 1}, got {e0x}")
        e0y = y.support_size()
        if e0y < bound:
            raise RuntimeError(
                f"dichotomy violated: eps0(y) = {e0y} < {bound} with y not >= x"
            )
        assert e0y > e0x
        if e0y == bound:
            case = "B-equality"
            shift = _extremal_structure_shift(x, y, p1, p2)
        else:
            case = "B"
            shift = None

    aug_case = None
    ex = x.augmentation()
    if ex <= p1 - 1:
        aug_bound = (p1 - ex) * (p2 - 1)
        if y >= x:
            aug_case = "A"
        else:
            ey = y.augmentation()
            if ey < aug_bound:
                raise RuntimeError(
                    f"augmentation variant violated: eps(y) = {ey} < {aug_bound}"
                )
            aug_case = "B-equality" if ey == aug_bound else "B"
    return TransferReport(case, bound, aug_case, shift)


# -- verification reports --------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    name: str
    m: int | None
    passed: bool
    lines: tuple[str, ...]

    def __str__(self) -> str:
        scope = f" m = {self.m}" if self.m is not None else ""
        head = f"[{self.name}]{scope}: {'PASS' if self.passed else 'FAIL'}"
        return "\n".join([head] + [f"  {line}" for line in self.lines])


def _report(name: str, m: int | None, checks: list[tuple[bool, str]]) -> VerificationReport:
    return VerificationReport(
        name,
        m,
        all(ok for ok, _ in checks),
        tuple(("PASS " if ok else "FAIL ") + text for ok, text in checks),
    )


def verify_lower_bound(
    m: int,
    max_weight: int,
    *,
    workers: int = 1,
    records: list[CensusRecord] | None = None,
    trials: int = 40,
    seed: int = 0,
) -> VerificationReport:
    """Census-backed check of the support lower bound for asymmetric classes.

    For r <= 2 asserts there are no asymmetric classes at all; for r >= 3
    asserts every asymmetric class has support >= (p1-1)(p2-1) + (p3-1)
    (strictly above p3) and weight >= support, that the bound is attained
    when the budget reaches it, and that random nonnegative kernel elements
    with support below the bound decompose into rotated subgroup sums.
    """
    if records is None:
        records = enumerate_minimal(m, max_weight, workers=workers)
    fact = factorize(m)
    checks: list[tuple[bool, str]] = []
    asym = [r for r in records if r.classification == "asymmetric"]
    if fact.r <= 2:
        checks.append(
            (not asym, f"no asymmetric classes exist for r = {fact.r} (found {len(asym)})")
        )
        return _report("lower-bound", m, checks)

    p1, p2, p3 = fact.primes[:3]
    bound = (p1 - 1) * (p2 - 1) + (p3 - 1)
    violations = [
        r for r in asym if r.support < bound or r.weight < r.support or r.support <= p3
    ]
    checks.append(
        (
            not violations,
            f"all {len(asym)} asymmetric classes have support >= {bound} (> {p3}) and weight >= support"
            + (f"; first violation: {violations[0].canon}" if violations else ""),
        )
    )
    if max_weight >= bound:
        smallest = min((r.support for r in asym), default=None)
        checks.append(
            (smallest == bound, f"minimum asymmetric support is exactly {bound} (got {smallest})")
        )

    rng = random.Random(seed)
    seed_elem = asymmetric_seed(m)
    tested = 0
    failure = ""
    for _ in range(trials):
        u = GroupRingElement.zero(m)
        for _ in range(rng.randint(1, 3)):
            p = rng.choice(fact.primes)
            u = u + sigma_subgroup(m, p).rotate(rng.randrange(m))
        if rng.random() < 0.25:
            u = u + seed_elem.rotate(rng.randrange(m))
        if u.support_size() >= bound:
            continue
        tested += 1
        cover = symmetric_cover(u)
        if cover is None:
            failure = f"no symmetric cover for {u}"
            break
        total = GroupRingElement.zero(m)
        for p, shift in cover:
            total = total + sigma_subgroup(m, p).rotate(shift)
        if total != u:
            failure = f"cover of {u} does not recombine"
            break
    checks.append(
        (
            not failure and tested > 0,
            f"kernel elements below the support bound decompose into rotated subgroup sums "
            f"({tested} random elements tested)" + (f"; {failure}" if failure else ""),
        )
    )
    return _report("lower-bound", m, checks)


def verify_uniqueness(
    m: int,
    *,
    workers: int = 1,
    records: list[CensusRecord] | None = None,
) -> VerificationReport:
    """Census-backed check that the least asymmetric class is unique and that
    one weight higher everything matches the 6 | m template shape."""
    fact = factorize(m)
    if fact.r < 3:
        raise ValueError(f"uniqueness checks need at least three primes, got r = {fact.r}")
    p1, p2, p3 = fact.primes[:3]
    bound = (p1 - 1) * (p2 - 1) + (p3 - 1)
    if records is None:
        records = enumerate_minimal(m, bound + 1, workers=workers)
    checks: list[tuple[bool, str]] = []
    asym = [r for r in records if r.classification == "asymmetric"]
    seed_canon = asymmetric_seed(m).canonical_rotation()[1]

    at_bound = [r for r in asym if r.weight == bound]
    checks.append(
        (
            len(at_bound) == 1 and at_bound[0].canon == seed_canon,
            f"exactly one asymmetric class at weight {bound}, equal to the product seed "
            f"(found {len(at_bound)})",
        )
    )
    by_support = [r for r in asym if r.support == bound]
    checks.append(
        (
            all(r.canon == seed_canon for r in by_support),
            f"every asymmetric class of support {bound} is the product seed",
        )
    )

    at_next = [r for r in asym if r.weight == bound + 1]
    if m % 6:
        checks.append(
            (not at_next, f"no asymmetric classes at weight {bound + 1} since 6 does not divide {m}")
        )
    else:
        templates = weight_plus_one_templates(m)
        genuine = all(in_kernel(t) and is_minimal(t).minimal for t in templates)
        checks.append((genuine, f"all {len(templates)} generator templates are minimal vanishing sums"))
        template_canons = {t.canonical_rotation()[1].coeffs for t in templates}
        unmatched = [r for r in at_next if r.canon.coeffs not in template_canons]
        checks.append(
            (
                not unmatched,
                f"all {len(at_next)} asymmetric classes at weight {bound + 1} match a generator template"
                + (f"; unmatched: {unmatched[0].canon}" if unmatched else ""),
            )
        )
        fixed = weight_plus_one_form(m).canonical_rotation()[1].coeffs
        checks.append(
            (
                any(r.canon.coeffs == fixed for r in at_next),
                "the fixed-generator form appears among the census classes",
            )
        )
    return _report("uniqueness", m, checks)


def oracle_agreement(
    *,
    trials: int = 500,
    seed: int = 0,
    max_modulus: int = 60,
    coeff_bound: int = 10,
    precision_bits: int = 128,
) -> VerificationReport:
    """Exact kernel membership versus the numeric threshold test on random elements.

    Half of the samples are random dense-ish elements (almost never vanishing
    sums), half are built as combinations of rotated subgroup sums (always
    vanishing sums), so both directions of the agreement get exercised.
    """
    rng = random.Random(seed)
    disagreements = 0
    kernel_seen = 0
    first = ""
    for trial in range(trials):
        m = rng.randint(2, max_modulus)
        if trial % 2:
            coeffs = [0] * m
            for e in rng.sample(range(m), rng.randint(1, min(m, 12))):
                coeffs[e] = rng.randint(-coeff_bound, coeff_bound)
            x = GroupRingElement(m, tuple(coeffs))
        else:
            primes = factorize(m).primes
            x = GroupRingElement.zero(m)
            for _ in range(rng.randint(1, 3)):
                p = rng.choice(primes)
                x = x + rng.randint(-coeff_bound, coeff_bound) * sigma_subgroup(m, p).rotate(rng.randrange(m))
        exact = in_kernel(x)
        estimate = complex_eval(x, precision_bits)
        if exact:
            kernel_seen += 1
            agreed = estimate.consistent_with_zero()
        else:
            agreed = estimate.definitely_nonzero()
        if not agreed:
            disagreements += 1
            if not first:
                first = f"; first disagreement at m = {m}, x = {x}"
    checks = [
        (
            disagreements == 0,
            f"exact kernel test and {precision_bits}-bit numeric threshold agree on {trials} "
            f"random elements ({kernel_seen} vanishing){first}",
        )
    ]
    return _report("oracle-agreement", None, checks)
