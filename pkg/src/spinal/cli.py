"""Command-line interface.

Exit codes: 0 affirmative or complete, 1 negative, 2 unknown or
inapplicable, 3 invalid input.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from . import criteria, dynsys
from .basilica import basilica
from .groupfile import dump_group, dumps_group, load_group
from .order import DEFAULT_DEPTH, DEFAULT_MEMO, Finite, InfiniteCertified, order_of
from .selfsim import CSGroup, CSGroupError, DirectedElem, validate_cs

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_INVALID = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _err(msg: str) -> None:
    print(msg, file=sys.stderr)


def _load(path: str) -> CSGroup:
    group = load_group(path)
    validate_cs(group)
    return group


def _directed_list(group: CSGroup, exprs: Sequence[str]) -> list[DirectedElem]:
    out = []
    for chunk in exprs:
        for expr in chunk.split(","):
            expr = expr.strip()
            if expr:
                out.append(group.directed_word(expr))
    if not out:
        raise InputError("empty generator list")
    return out


def _print_report(report: criteria.CheckReport) -> None:
    print(report)
    for key, val in report.details.items():
        print(f"  {key}: {val}")


def _verdict_exit(report: criteria.CheckReport) -> int:
    return {criteria.HOLDS: EXIT_OK, criteria.FAILS: EXIT_NEGATIVE}.get(report.verdict, EXIT_UNKNOWN)


# -- commands -------------------------------------------------------------


def cmd_validate(args) -> int:
    group = load_group(args.file)
    print(validate_cs(group))
    return EXIT_OK


def cmd_check(args) -> int:
    group = _load(args.file)
    crit = args.criterion
    if crit == "theorem-a":
        report = criteria.check_theorem_A(group)
    elif crit == "theorem-b":
        if not args.gens:
            raise InputError("--gens is required for theorem-b")
        report = criteria.check_theorem_B(group, _directed_list(group, args.gens))
    elif crit == "abelian":
        report = criteria.check_abelian_criterion(group)
    elif crit == "gs":
        report = criteria.check_gs_conditions(group)
    else:
        report = criteria.perfect_cycle_obstruction(group, cross_check=True)
    _print_report(report)
    return _verdict_exit(report)


def cmd_order(args) -> int:
    group = _load(args.file)
    g = group.element(args.element)
    result = order_of(g, max_depth=args.budget, memo_limit=args.memo)
    print(result)
    return EXIT_OK if isinstance(result, (Finite, InfiniteCertified)) else EXIT_UNKNOWN


_SYSTEM_KINDS = {
    "lambda": dynsys.LAMBDA_MAP,
    "Lambda": dynsys.LAMBDA,
    "Lambda-transversal": dynsys.LAMBDA_TRANSVERSAL,
    "sigma": dynsys.SIGMA,
}


def _parse_system(group: CSGroup, text: str) -> dynsys.StepGraph:
    kind, sep, param = text.partition(":")
    if not sep or kind not in _SYSTEM_KINDS:
        raise InputError(f"bad system {text!r}; expected one of {', '.join(k + ':...' for k in _SYSTEM_KINDS)}")
    if kind == "sigma":
        return dynsys.build_step_graph(group, dynsys.SIGMA, _directed_list(group, [param]), label=text)
    return dynsys.build_step_graph(group, _SYSTEM_KINDS[kind], group.directed_word(param), label=text)


def cmd_dynsys(args) -> int:
    group = _load(args.file)
    graphs = [_parse_system(group, s) for s in args.system]
    starts = [group.rooted_word(e) for e in args.start] if args.start else None
    text = dynsys.export_dot(graphs, mode=args.mode, starts=starts, namer=group.name_of)
    if args.dot:
        Path(args.dot).write_text(text)
    elif not args.quiet:
        sys.stdout.write(text)
    all_trivial = True
    for g in graphs:
        res = dynsys.is_eventually_trivial(g)
        if res.trivial:
            msg = f"{g.label}: eventually trivial after {res.steps} step(s)"
        else:
            all_trivial = False
            cycles = "; ".join(" -> ".join(group.name_of(p) for p in c + c[:1]) for c in res.cycles)
            msg = f"{g.label}: not eventually trivial, cycle: {cycles}"
        # Keep stdout clean for the DOT text when it is printed there.
        print(msg, file=sys.stderr if not args.dot and not args.quiet else sys.stdout)
    return EXIT_OK if all_trivial else EXIT_NEGATIVE


def cmd_basilica(args) -> int:
    group = _load(args.file)
    if args.s < 1:
        raise InputError("-s must be at least 1")
    bas = basilica(group, args.s, rooted=args.rooted)
    report = validate_cs(bas)
    if args.output:
        dump_group(bas, args.output)
        print(f"wrote {args.output}: {report}")
    else:
        sys.stdout.write(dumps_group(bas))
    return EXIT_OK


def cmd_report(args) -> int:
    group = _load(args.file)
    print(f"{group.name or args.file}: {validate_cs(group)}")
    gens = list(group.directed_generators.values())
    gen_names = ",".join(sorted(group.directed_generators))
    ta = criteria.check_theorem_A(group)
    print(f"Thm A: {ta.verdict}" + (f" ({ta.message})" if ta.message and not ta.holds else ""))
    tb = criteria.check_theorem_B(group, gens)
    print(f"Thm B({{{gen_names}}}): {tb.verdict}" + (f" ({tb.message})" if not tb.holds else ""))
    ab = criteria.check_abelian_criterion(group)
    label = {criteria.HOLDS: "periodic", criteria.FAILS: f"not periodic ({ab.message})"}.get(ab.verdict, "inapplicable")
    print(f"Abelian criterion: {label}")
    gs = criteria.check_gs_conditions(group)
    print(f"Gupta-Sidki: {gs.verdict}" + (f" ({gs.message})" if gs.message else ""))
    ob = criteria.perfect_cycle_obstruction(group)
    print(f"perfect-cycle obstruction: {'present' if ob.holds else 'absent'}")
    for w in _report_words(group):
        res = order_of(group.element(w))
        shown = f"={res.n}" if isinstance(res, Finite) else f": {res}"
        print(f"ord({w}){shown}")
    return EXIT_OK


def _report_words(group: CSGroup) -> list[str]:
    rooted = sorted(group.rooted_generators)
    directed = sorted(group.directed_generators)
    words = rooted + directed
    words += [f"{d} {r}" for d in directed for r in rooted]
    return words


# -- entry point ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="spinal", description="Periodicity checks for constant spinal groups.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("validate", help="check a group file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("check", help="run a periodicity criterion")
    sp.add_argument("file")
    sp.add_argument("--criterion", required=True, choices=["theorem-a", "theorem-b", "abelian", "gs", "obstruction"])
    sp.add_argument("--gens", nargs="+", help="directed generating set (comma or space separated words)")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("order", help="order of an element")
    sp.add_argument("file")
    sp.add_argument("--element", required=True, help='word such as "b s r^-1"; empty for the identity')
    sp.add_argument("--budget", type=int, default=DEFAULT_DEPTH, help="recursion depth limit")
    sp.add_argument("--memo", type=int, default=DEFAULT_MEMO, help="memo table limit")
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("dynsys", help="step graph of a dynamical system as DOT")
    sp.add_argument("file")
    sp.add_argument("--system", required=True, action="append",
                    help="lambda:<b>, Lambda:<b>, Lambda-transversal:<b> or sigma:<b,c,...>; repeat to overlay")
    sp.add_argument("--mode", choices=["element", "subset"], default="element")
    sp.add_argument("--start", action="append", help="rooted word to start from (repeatable)")
    sp.add_argument("--dot", help="write DOT here instead of stdout")
    sp.add_argument("--quiet", action="store_true", help="do not print DOT, only the verdict")
    sp.set_defaults(func=cmd_dynsys)

    sp = sub.add_parser("basilica", help="apply the Basilica operation")
    sp.add_argument("file")
    sp.add_argument("-s", type=int, required=True)
    sp.add_argument("-o", "--output")
    sp.add_argument("--rooted", choices=["wreath", "direct"], default="wreath",
                    help="iterated wreath product (default) or coordinatewise direct product")
    sp.set_defaults(func=cmd_basilica)

    sp = sub.add_parser("report", help="summary of all checks")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_report)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CSGroupError, InputError) as exc:
        _err(f"error: {exc}")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
