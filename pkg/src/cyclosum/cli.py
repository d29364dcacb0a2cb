"""Command-line surface over the library, with stable text and JSON output.

Exit codes: 0 on success or a passing check, 1 when a verification fails or a
query comes back negative (not a member, not in the kernel, infeasible), 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census as census_mod
from .cyclotomic import (
    NotInKernelError,
    complex_eval,
    constrained_decompose,
    coset_split,
    cyclotomic_poly,
    format_poly,
    in_kernel,
    kernel_decompose,
    poly_to_json,
    two_prime_decompose,
)
from .groupring import (
    GroupRingElement,
    element_to_json,
    factorize,
    format_element,
    parse_element,
)
from .weights import CharCheckInput, char_constraint_check, weight_set


class _InputError(Exception):
    """Invalid user input; maps to exit code 2."""


def _element(text: str, m: int | None) -> GroupRingElement:
    if m is None:
        raise _InputError("an element argument needs --m MODULUS")
    if m < 1:
        raise _InputError(f"modulus must be positive, got {m}")
    try:
        return parse_element(text, m)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _cmd_phi(args) -> int:
    if args.m < 1:
        raise _InputError(f"modulus must be positive, got {args.m}")
    poly = cyclotomic_poly(args.m)
    if args.json:
        _emit({"m": args.m, "coeffs": poly_to_json(poly)})
    else:
        print(format_poly(poly))
    return 0


def _cmd_weights(args) -> int:
    if args.m < 2:
        raise _InputError(f"modulus must be >= 2, got {args.m}")
    ws = weight_set(args.m)
    if args.json:
        _emit(ws.to_json())
    else:
        print(f"primes: {' '.join(map(str, ws.primes))}")
        print(f"conductor: {'none (set is the multiples of ' + str(ws.primes[0]) + ')' if ws.conductor is None else ws.conductor}")
        print(f"gaps: {' '.join(map(str, ws.gaps)) if ws.gaps else '(none)'}")
    return 0


def _cmd_member(args) -> int:
    if args.m < 2:
        raise _InputError(f"modulus must be >= 2, got {args.m}")
    if args.n < 0:
        raise _InputError(f"weight must be nonnegative, got {args.n}")
    member = args.n in weight_set(args.m)
    if args.json:
        _emit({"m": args.m, "n": args.n, "member": member})
    else:
        print(f"{args.n} {'in' if member else 'not in'} W({args.m})")
    return 0 if member else 1


def _cmd_eval(args) -> int:
    x = _element(args.element, args.m)
    if args.bits < 64:
        raise _InputError(f"--bits must be >= 64, got {args.bits}")
    est = complex_eval(x, args.bits)
    if args.json:
        _emit(
            {
                "m": x.modulus,
                "re": str(est.value.real),
                "im": str(est.value.imag),
                "error_bound": str(est.error_bound),
            }
        )
    else:
        print(f"value: {est.value}")
        print(f"error bound: {est.error_bound}")
    return 0


def _cmd_kernel(args) -> int:
    x = _element(args.element, args.m)
    member = in_kernel(x)
    if args.json:
        _emit({"m": x.modulus, "in_kernel": member})
    else:
        print(f"in kernel: {'yes' if member else 'no'}")
    return 0 if member else 1


def _cmd_decompose(args) -> int:
    x = _element(args.element, args.m)
    if x.modulus < 2:
        raise _InputError("decomposition needs modulus m > 1")
    try:
        cert = kernel_decompose(x)
    except NotInKernelError as exc:
        print(f"not in kernel: phi(x) coordinates {exc.image.coords}", file=sys.stderr)
        return 1
    if args.json:
        _emit(cert.to_json())
    else:
        for p, part in zip(cert.primes, cert.parts):
            print(f"z_{p}: {format_element(part)}")
    return 0


def _cmd_coset_split(args) -> int:
    x = _element(args.element, args.m)
    try:
        parts = coset_split(x)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.json:
        _emit([{"coset": j, "part": element_to_json(part)} for j, part in parts])
    else:
        for j, part in parts:
            print(f"coset {j}: {format_element(part)}")
    return 0


def _cmd_two_prime(args) -> int:
    x = _element(args.element, args.m)
    try:
        a, b = two_prime_decompose(x)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if args.json:
        _emit({"a": element_to_json(a), "b": element_to_json(b)})
    else:
        print(f"a: {format_element(a)}")
        print(f"b: {format_element(b)}")
    return 0


def _cmd_constrained(args) -> int:
    x = _element(args.element, args.m)
    try:
        cert = constrained_decompose(x)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    if cert is None:
        if args.json:
            _emit({"feasible": False})
        else:
            print("infeasible: no certificate with nonnegative part augmentations exists")
        return 1
    if args.json:
        payload = cert.to_json()
        payload["feasible"] = True
        _emit(payload)
    else:
        for p, part in zip(cert.primes, cert.parts):
            print(f"z_{p}: {format_element(part)}")
    return 0


def _cmd_census(args) -> int:
    if args.m < 2:
        raise _InputError(f"modulus must be >= 2, got {args.m}")
    if args.max_weight < 0:
        raise _InputError("--max-weight must be nonnegative")
    if args.workers < 1:
        raise _InputError("--workers must be >= 1")
    try:
        records = census_mod.enumerate_minimal(
            args.m, args.max_weight, workers=args.workers, force=args.force
        )
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    if args.json:
        sys.stdout.write(census_mod.records_to_jsonl(records))
    else:
        for rec in records:
            print(
                f"weight={rec.weight} support={rec.support} class={rec.classification} "
                f"{format_element(rec.canon)}"
            )
        print(f"total: {len(records)} classes")
    return 0


def _cmd_verify(args) -> int:
    if args.m < 2:
        raise _InputError(f"modulus must be >= 2, got {args.m}")
    fact = factorize(args.m)
    if args.max_weight is None:
        if fact.r >= 3:
            p1, p2, p3 = fact.primes[:3]
            max_weight = (p1 - 1) * (p2 - 1) + p3
        else:
            max_weight = fact.primes[0] + fact.primes[-1]
    else:
        max_weight = args.max_weight
    try:
        records = census_mod.enumerate_minimal(args.m, max_weight, workers=args.workers, force=args.force)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    reports = [
        census_mod.verify_lower_bound(
            args.m, max_weight, records=records, trials=args.trials, seed=args.seed
        )
    ]
    p1p2p3_reachable = fact.r >= 3 and max_weight >= (fact.primes[0] - 1) * (fact.primes[1] - 1) + fact.primes[2]
    if p1p2p3_reachable:
        reports.append(census_mod.verify_uniqueness(args.m, records=records))
    reports.append(census_mod.oracle_agreement(trials=args.trials * 5, seed=args.seed))
    for report in reports:
        print(report)
    passed = all(r.passed for r in reports)
    print(f"verify: {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


def _cmd_charcheck(args) -> int:
    try:
        data = CharCheckInput(args.degree, args.value, args.order)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    verdict = char_constraint_check(data)
    if args.json:
        _emit({"passed": verdict.passed, "t": verdict.t, "rule": verdict.rule})
    else:
        print(str(verdict))
    return 0 if verdict.passed else 1


def _cmd_canon(args) -> int:
    x = _element(args.element, args.m)
    shift, canon = x.canonical_rotation()
    if args.json:
        payload = element_to_json(canon)
        payload["shift"] = shift
        _emit(payload)
    else:
        print(f"shift: {shift}")
        print(f"canon: {format_element(canon)}")
    return 0


def _add_element_arguments(sub) -> None:
    sub.add_argument("element", help="element text, e.g. 'z^5 + z^6 + 2*z^12'")
    sub.add_argument("--m", type=int, required=True, help="modulus (order of the generator)")
    sub.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclosum",
        description="Exact computations with vanishing sums of roots of unity",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("phi", help="m-th cyclotomic polynomial")
    sub.add_argument("m", type=int)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_phi)

    sub = commands.add_parser("weights", help="weight set of modulus m")
    sub.add_argument("m", type=int)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_weights)

    sub = commands.add_parser("member", help="is n an achievable weight for modulus m")
    sub.add_argument("m", type=int)
    sub.add_argument("n", type=int)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_member)

    sub = commands.add_parser("eval", help="numerically evaluate an element")
    _add_element_arguments(sub)
    sub.add_argument("--bits", type=int, default=128)
    sub.set_defaults(handler=_cmd_eval)

    sub = commands.add_parser("kernel", help="is the element a vanishing sum")
    _add_element_arguments(sub)
    sub.set_defaults(handler=_cmd_kernel)

    sub = commands.add_parser("decompose", help="certificate over the subgroup-sum generators")
    _add_element_arguments(sub)
    sub.set_defaults(handler=_cmd_decompose)

    sub = commands.add_parser("coset-split", help="split along cosets of the radical subgroup")
    _add_element_arguments(sub)
    sub.set_defaults(handler=_cmd_coset_split)

    sub = commands.add_parser("two-prime", help="decomposition for moduli with at most two primes")
    _add_element_arguments(sub)
    sub.set_defaults(handler=_cmd_two_prime)

    sub = commands.add_parser("constrained", help="certificate with nonnegative part augmentations")
    _add_element_arguments(sub)
    sub.set_defaults(handler=_cmd_constrained)

    sub = commands.add_parser("census", help="minimal classes up to rotation within a weight budget")
    sub.add_argument("m", type=int)
    sub.add_argument("--max-weight", type=int, required=True)
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--force", action="store_true", help="override the desk-scale weight guard")
    sub.add_argument("--json", action="store_true", help="emit JSON lines, one record per line")
    sub.set_defaults(handler=_cmd_census)

    sub = commands.add_parser("verify", help="run the census-backed verification suite")
    sub.add_argument("m", type=int)
    sub.add_argument("--max-weight", type=int, default=None)
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--trials", type=int, default=40)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--force", action="store_true")
    sub.set_defaults(handler=_cmd_verify)

    sub = commands.add_parser("charcheck", help="character-value feasibility check")
    sub.add_argument("degree", type=int)
    sub.add_argument("value", type=int)
    sub.add_argument("order", type=int)
    sub.add_argument("--json", action="store_true")
    sub.set_defaults(handler=_cmd_charcheck)

    sub = commands.add_parser("canon", help="canonical rotation of an element")
    _add_element_arguments(sub)
    sub.set_defaults(handler=_cmd_canon)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
