"""Command-line front end.

Every subcommand validates its divisor chain before doing any work and
reports results either as aligned text or as a single JSON record
``{"command", "d", "input", "result"}``.  Exit codes: 0 on success, 1 on
a domain error (invalid chain, malformed monomial, failed check), 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import (
    DEFAULT_PRIME,
    betti_table,
    extremal_from_betti,
    format_betti_table,
    reg_from_betti,
)
from .dseq import DSequence, decompose
from .ideals import MonomialIdeal, parse_generator_lines, parse_monomial
from .principal import (
    PrincipalInput,
    closure,
    is_borel_type,
    is_dfixed,
    is_stable,
    principal_ideal,
    sequential_chain,
)
from .regularity import corners, reg_bound, reg_formula, reg_sequential, reg_stability
from .socle import socle_containment_check, socle_direct, socle_report


def _infer_n(args, monomial_texts) -> int:
    if args.n is not None:
        return args.n
    best = 0
    for text in monomial_texts:
        for factor in text.replace(" ", "").split("*"):
            if factor.startswith("x"):
                head = factor[1:].split("^")[0]
                if head.isdigit():
                    best = max(best, int(head))
    if best == 0:
        raise ValueError("cannot infer the variable count; pass --n")
    print(
        f"warning: --n not given, using the largest variable index ({best})",
        file=sys.stderr,
    )
    return best


def _load_ideal(args, need_d: bool = False):
    """Resolve the target ideal from --file or a principal monomial."""
    d = DSequence.parse(args.d) if args.d else None
    if need_d and d is None:
        raise ValueError("this command needs --d")
    if getattr(args, "file", None):
        if getattr(args, "monomial", None):
            raise ValueError("pass either a monomial or --file, not both")
        with open(args.file) as handle:
            n, gens = parse_generator_lines(handle)
        return d, n, MonomialIdeal(n, gens), {"file": args.file}
    if not getattr(args, "monomial", None):
        raise ValueError("pass a monomial or --file")
    if d is None:
        raise ValueError("building a principal ideal needs --d")
    n = _infer_n(args, [args.monomial])
    u = parse_monomial(args.monomial, n)
    inp = PrincipalInput.from_monomial(u, d)
    return d, n, principal_ideal(inp), {"monomial": args.monomial}


def _principal_input(args) -> tuple[DSequence, PrincipalInput]:
    d = DSequence.parse(args.d)
    n = _infer_n(args, [args.monomial])
    u = parse_monomial(args.monomial, n)
    return d, PrincipalInput.from_monomial(u, d)


def _emit(args, record: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_decompose(args) -> int:
    d = DSequence.parse(args.d)
    digits = decompose(args.value, d)
    terms = " + ".join(f"{a}*{e}" for a, e in zip(digits, d))
    record = {
        "command": "decompose",
        "d": list(d),
        "input": args.value,
        "result": {"digits": list(digits)},
    }
    _emit(args, record, [f"{args.value} = {terms}", f"digits: {list(digits)}"])
    return 0


def cmd_expand(args) -> int:
    d, inp = _principal_input(args)
    ideal = principal_ideal(inp)
    record = {
        "command": "expand",
        "d": list(d),
        "input": args.monomial,
        "result": {
            "n": inp.n,
            "generators": [str(g) for g in ideal.gens],
            "count": len(ideal.gens),
            "degree": ideal.degree,
        },
    }
    lines = [f"{len(ideal.gens)} minimal generators, degree {ideal.degree}:"]
    lines += [f"  {g}" for g in ideal.gens]
    _emit(args, record, lines)
    return 0


def cmd_closure(args) -> int:
    d = DSequence.parse(args.d)
    if args.file:
        if args.monomials:
            raise ValueError("pass either monomials or --file, not both")
        with open(args.file) as handle:
            n, gens = parse_generator_lines(handle)
    else:
        if not args.monomials:
            raise ValueError("pass monomials or --file")
        n = _infer_n(args, args.monomials)
        gens = [parse_monomial(t, n) for t in args.monomials]
    ideal = closure(gens, d, n)
    record = {
        "command": "closure",
        "d": list(d),
        "input": [str(g) for g in gens],
        "result": {
            "n": n,
            "generators": [str(g) for g in ideal.gens],
            "count": len(ideal.gens),
        },
    }
    lines = [f"{len(ideal.gens)} minimal generators:"]
    lines += [f"  {g}" for g in ideal.gens]
    _emit(args, record, lines)
    return 0


def cmd_socle(args) -> int:
    d, inp = _principal_input(args)
    ideal = principal_ideal(inp)
    result = {}
    lines = []
    report = None
    if args.method in ("formula", "both"):
        report = socle_report(inp)
        result["formula"] = report.to_record()
        lines.append("socle by formula:")
        for e, h in report.degrees:
            lines.append(f"  degree {e}: dimension {h}")
        lines.append(f"  max degree: {report.max_degree}")
        for comp in report.components:
            lines.append(f"  component {comp.pair} in degree {comp.degree}:")
            for g in comp.ideal.gens:
                lines.append(f"    {g}")
    direct = None
    if args.method in ("direct", "both"):
        hi = args.hi
        if hi is None:
            hi = (report.max_degree if report else inp.n * ideal.degree) + inp.n
        direct = socle_direct(ideal, args.lo, hi)
        result["direct"] = [
            {"degree": e, "dimension": h, "basis": [str(b) for b in basis]}
            for e, h, basis in direct
        ]
        lines.append(f"socle by enumeration over degrees {args.lo}..{hi}:")
        for e, h, _ in direct:
            lines.append(f"  degree {e}: dimension {h}")
    if args.method == "both":
        agree = report.degrees == tuple((e, h) for e, h, _ in direct)
        result["agree"] = agree
        lines.append(f"agreement: {'yes' if agree else 'NO'}")
        if not agree:
            _emit(args, _socle_record(args, d, result), lines)
            return 1
    _emit(args, _socle_record(args, d, result), lines)
    return 0


def _socle_record(args, d, result) -> dict:
    return {
        "command": "socle",
        "d": list(d),
        "input": args.monomial,
        "result": result,
    }


def cmd_reg(args) -> int:
    d, inp = _principal_input(args)
    methods = (
        ["formula", "sequential", "stability", "betti"]
        if args.method == "all"
        else [args.method]
    )
    ideal = None
    values = {}
    lines = []
    for method in methods:
        if method == "formula":
            values["formula"] = reg_formula(inp).value
        else:
            if ideal is None:
                ideal = principal_ideal(inp)
            if method == "sequential":
                values["sequential"] = reg_sequential(ideal).value
            elif method == "stability":
                values["stability"] = reg_stability(ideal)
            elif method == "betti":
                hint = reg_formula(inp).value
                table = betti_table(
                    ideal, characteristic=args.char, reg_bound=hint
                )
                values["betti"] = reg_from_betti(table)
    for method, value in values.items():
        lines.append(f"reg ({method}): {value}")
    result = {"values": values}
    if args.method == "all":
        consistent = len(set(values.values())) == 1
        result["consistent"] = consistent
        lines.append(f"consistent: {'yes' if consistent else 'NO'}")
        if not consistent:
            _emit(args, _reg_record(args, d, result), lines)
            return 1
    _emit(args, _reg_record(args, d, result), lines)
    return 0


def _reg_record(args, d, result) -> dict:
    return {
        "command": "reg",
        "d": list(d),
        "input": args.monomial,
        "result": result,
    }


def cmd_betti(args) -> int:
    d, n, ideal, described = _load_ideal(args)
    hint = None
    if args.monomial and d is not None:
        hint = reg_formula(
            PrincipalInput.from_monomial(parse_monomial(args.monomial, n), d)
        ).value
    progress = None
    if args.progress:
        progress = lambda i, j, r: print(
            f"piece i={i} j={j} rank={r}", file=sys.stderr
        )
    table = betti_table(
        ideal,
        max_degree=args.max_degree,
        characteristic=args.char,
        reg_bound=hint,
        progress=progress,
    )
    record = {
        "command": "betti",
        "d": list(d) if d else None,
        "input": described,
        "result": table.to_record(),
    }
    lines = [
        f"characteristic {table.characteristic}, degrees up to {table.max_degree}"
        + ("" if table.certified else " (window NOT certified)"),
        format_betti_table(table),
        f"regularity of the ideal: {reg_from_betti(table)}"
        if table.certified
        else "regularity: not certified",
        f"extremal entries (i, j-i, beta): {extremal_from_betti(table)}",
    ]
    _emit(args, record, lines)
    return 0


def cmd_check(args) -> int:
    d, n, ideal, described = _load_ideal(args, need_d=args.property == "dfixed")
    if args.property == "dfixed":
        verdict = is_dfixed(ideal, d)
    elif args.property == "stable":
        verdict = is_stable(ideal)
    else:
        verdict = is_borel_type(ideal)
    record = {
        "command": "check",
        "d": list(d) if d else None,
        "input": described,
        "result": {"property": args.property, "holds": verdict},
    }
    _emit(args, record, [f"{args.property}: {str(verdict).lower()}"])
    return 0


def cmd_chain(args) -> int:
    d, n, ideal, described = _load_ideal(args)
    chain = sequential_chain(ideal)
    record = {
        "command": "chain",
        "d": list(d) if d else None,
        "input": described,
        "result": {
            "pivots": list(chain.pivots),
            "ideals": [[str(g) for g in step.gens] for step in chain.ideals],
        },
    }
    lines = [f"chain length {chain.length}, pivots {list(chain.pivots)}"]
    for k, step in enumerate(chain.ideals):
        label = "1" if step.is_unit else f"{len(step.gens)} generators"
        lines.append(f"  step {k}: {label}")
    _emit(args, record, lines)
    return 0


def cmd_hilbert(args) -> int:
    d, n, ideal, described = _load_ideal(args)
    hi = args.hi if args.hi is not None else ideal.degree + n
    series = ideal.hilbert_series(hi)
    values = [
        {"degree": e, "dimension": series[e]} for e in range(args.lo, hi + 1)
    ]
    record = {
        "command": "hilbert",
        "d": list(d) if d else None,
        "input": described,
        "result": {"values": values},
    }
    lines = [f"  H({v['degree']}) = {v['dimension']}" for v in values]
    _emit(args, record, lines)
    return 0


def cmd_verify(args) -> int:
    d, inp = _principal_input(args)
    checks: list[tuple[str, bool, str]] = []

    ideal = principal_ideal(inp)
    fixpoint = closure([inp.monomial()], d, inp.n)
    checks.append(
        (
            "closure fixpoint = product formula",
            fixpoint == ideal,
            f"{len(ideal.gens)} generators",
        )
    )

    reg_rep = reg_formula(inp)
    seq_rep = reg_sequential(ideal)
    checks.append(
        (
            "reg formula = sequential",
            reg_rep.value == seq_rep.value,
            f"{reg_rep.value} vs {seq_rep.value}",
        )
    )

    pure_power = inp.r == 1 and inp.index(1) == inp.n
    stab = reg_stability(ideal)
    if pure_power:
        checks.append(
            ("reg formula = stability", stab == reg_rep.value, f"{stab}")
        )
    else:
        checks.append(
            (
                "reg stability >= formula (upper bound)",
                stab >= reg_rep.value,
                f"{stab} >= {reg_rep.value}",
            )
        )

    table = betti_table(ideal, characteristic=args.char, reg_bound=reg_rep.value)
    reg_b = reg_from_betti(table)
    checks.append(
        ("reg formula = Betti oracle", reg_b == reg_rep.value, f"{reg_b}")
    )

    bnd = reg_bound(inp)
    checks.append(
        ("reg <= n*deg bound", reg_rep.value <= bnd, f"{reg_rep.value} <= {bnd}")
    )

    socle_inp = inp
    note = ""
    if inp.index(1) == 1:
        socle_inp = inp.drop_first_block() if inp.r > 1 else None
        note = " (x1 block factored out)"
    if socle_inp is not None and socle_inp.n >= 2:
        rep = socle_report(socle_inp)
        socle_ideal = principal_ideal(socle_inp)
        direct = socle_direct(socle_ideal, 0, rep.max_degree + socle_inp.n)
        direct_pairs = tuple((e, h) for e, h, _ in direct)
        checks.append(
            (
                "socle formula = enumeration" + note,
                rep.degrees == direct_pairs,
                f"degrees {[e for e, _ in rep.degrees]}",
            )
        )
        checks.append(
            (
                "socle empty above max degree" + note,
                all(e <= rep.max_degree for e, _ in direct_pairs),
                f"max {rep.max_degree}",
            )
        )
        checks.append(
            (
                "socle inside first chain step" + note,
                socle_containment_check(socle_inp),
                "",
            )
        )

    cand = corners(inp)
    extremal = extremal_from_betti(table)
    survivors = sorted(
        (c.position, c.row, c.beta) for c in cand if c.survives
    )
    checks.append(
        (
            "corners = extremal Betti entries",
            survivors == extremal,
            f"{survivors}",
        )
    )

    failed = [name for name, ok, _ in checks if not ok]
    lines = []
    for name, ok, detail in checks:
        status = "PASS" if ok else "FAIL"
        suffix = f"  [{detail}]" if detail else ""
        lines.append(f"{status}  {name}{suffix}")
    lines.append(
        "all checks passed"
        if not failed
        else f"{len(failed)} check(s) FAILED: {', '.join(failed)}"
    )
    record = {
        "command": "verify",
        "d": list(d),
        "input": args.monomial,
        "result": {
            "checks": [
                {"name": name, "passed": ok, "detail": detail}
                for name, ok, detail in checks
            ],
            "passed": not failed,
        },
    }
    _emit(args, record, lines)
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfixed",
        description="Exact computations with principal d-fixed monomial ideals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, monomial=False, file_input=False, needs_d=True):
        p.add_argument("--d", required=needs_d, help="divisor chain, e.g. 1,2,4,12")
        p.add_argument("--n", type=int, help="ambient variable count")
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output mode"
        )
        if monomial:
            p.add_argument("monomial", help="target monomial, e.g. x3^21")
        if file_input:
            p.add_argument("--file", help="generator file (n=<int>, one per line)")

    p = sub.add_parser("decompose", help="digit expansion of an integer")
    common(p)
    p.add_argument("value", type=int)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("expand", help="principal ideal by the product formula")
    common(p, monomial=True)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("closure", help="smallest d-fixed ideal containing generators")
    common(p, file_input=True)
    p.add_argument("monomials", nargs="*", help="generator monomials")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("socle", help="socle degrees, dimensions, components")
    common(p, monomial=True)
    p.add_argument(
        "--method", choices=("formula", "direct", "both"), default="both"
    )
    p.add_argument("--lo", type=int, default=0, help="lowest degree to enumerate")
    p.add_argument("--hi", type=int, help="highest degree to enumerate")
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("reg", help="Castelnuovo-Mumford regularity")
    common(p, monomial=True)
    p.add_argument(
        "--method",
        choices=("formula", "sequential", "stability", "betti", "all"),
        default="formula",
    )
    p.add_argument("--char", type=int, default=DEFAULT_PRIME)
    p.set_defaults(func=cmd_reg)

    p = sub.add_parser("betti", help="graded Betti numbers via Koszul homology")
    common(p, file_input=True, needs_d=False)
    p.add_argument("monomial", nargs="?", help="principal target monomial")
    p.add_argument("--char", type=int, default=DEFAULT_PRIME)
    p.add_argument("--max-degree", type=int, dest="max_degree")
    p.add_argument(
        "--progress",
        action="store_true",
        help="report per-piece ranks on standard error",
    )
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("check", help="test a property of an ideal")
    common(p, file_input=True, needs_d=False)
    p.add_argument("monomial", nargs="?", help="principal target monomial")
    p.add_argument(
        "--property", required=True, choices=("dfixed", "stable", "boreltype")
    )
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("chain", help="sequential saturation chain")
    common(p, file_input=True, needs_d=False)
    p.add_argument("monomial", nargs="?", help="principal target monomial")
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("hilbert", help="quotient Hilbert function values")
    common(p, file_input=True, needs_d=False)
    p.add_argument("monomial", nargs="?", help="principal target monomial")
    p.add_argument("--lo", type=int, default=0)
    p.add_argument("--hi", type=int)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("verify", help="run every formula against its oracle")
    common(p, monomial=True)
    p.add_argument("--char", type=int, default=DEFAULT_PRIME)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
