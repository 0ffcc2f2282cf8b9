"""Command-line front end.

One grading per invocation; batch validation goes through ``check``.  Exit
codes: 0 on success, 1 on usage or parse errors (diagnostic on stderr), 2 when
``check`` reports at least one mismatch (the report still prints).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import render
from .closedform import closed_tf
from .consistency import CheckConfig, crosscheck
from .errors import TfStarError
from .hotfss import e1_page, run_pages, tf
from .les import tr_report
from .mackey import mackey_e1
from .obstruction import ObstructionProblem, obstruction_search
from .prism import PrismKind
from .rep import parse_rep

__all__ = ["run", "main"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="tfstar", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, shift=True):
        p.add_argument("--rep", required=True, help='grading, e.g. "(1,1,-1,2,-1,1;0)"')
        p.add_argument(
            "--prism",
            choices=["transversal", "crystalline"],
            default="transversal",
        )
        if shift:
            p.add_argument("--shift", type=int, choices=[0, -1], default=0)
        p.add_argument("--format", choices=["text", "latex", "json"], default="text")

    for name in ("tf", "closed"):
        add_common(sub.add_parser(name, help=f"evaluate TF via {name}"))
    add_common(sub.add_parser("e1", help="first page of the HOTFSS"))
    add_common(sub.add_parser("pages", help="all HOTFSS pages with extensions"))
    add_common(sub.add_parser("mackey-e1", help="Mackey-valued first page"))

    tr = sub.add_parser("tr", help="TR report through the long exact sequence")
    add_common(tr, shift=False)
    tr.add_argument("--level", type=int, required=True, help="n for TR^{n+1}")

    check = sub.add_parser("check", help="randomized engine-vs-closed-form crosscheck")
    check.add_argument("--samples", type=int, default=1000)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--max-len", type=int, default=8)
    check.add_argument("--max-coeff", type=int, default=5)
    check.add_argument("--max-dinf", type=int, default=3)
    check.add_argument(
        "--kinds",
        choices=["transversal", "crystalline", "both"],
        default="both",
    )
    check.add_argument("--format", choices=["text", "json"], default="text")

    ob = sub.add_parser("obstruction", help="cyclic p-group homomorphism pair search")
    ob.add_argument("--p", type=int, required=True)
    ob.add_argument("--source", required=True, help='exponents, e.g. "2,2"')
    ob.add_argument("--target", required=True, help='exponents, e.g. "2,2,2"')
    ob.add_argument("--c", type=int, default=1, help="composite = multiplication by p^c")
    ob.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def _emit(args, text_fn, latex_fn, json_fn) -> int:
    if args.format == "latex":
        if latex_fn is None:
            print("tfstar: error: latex output is not supported here", file=sys.stderr)
            return 1
        sys.stdout.write(latex_fn())
        if not latex_fn().endswith("\n"):
            sys.stdout.write("\n")
    elif args.format == "json":
        sys.stdout.buffer.write(render.render_json(json_fn()))
        sys.stdout.write("\n")
    else:
        print(text_fn())
    return 0


def run(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.command in ("tf", "closed", "e1", "pages", "mackey-e1", "tr"):
            alpha = parse_rep(args.rep)
            kind = PrismKind.from_string(args.prism)

        if args.command in ("tf", "closed"):
            alpha = replace(alpha, shift=args.shift)
            group = tf(alpha, kind) if args.command == "tf" else closed_tf(alpha, kind)
            return _emit(
                args,
                lambda: render.render_group_text(group),
                lambda: render.render_group_latex(group),
                lambda: render.group_json_obj(group),
            )

        if args.command == "e1":
            page = e1_page(alpha, kind)
            return _emit(
                args,
                lambda: render.render_page_text(
                    page, f"HOTFSS E^1 for {alpha}, {kind.value}"
                ),
                lambda: render.render_pages_latex(alpha, kind, first_only=True),
                lambda: render.e1_json_obj(alpha, kind, page),
            )

        if args.command == "pages":
            return _emit(
                args,
                lambda: render.render_pages_text(alpha, kind),
                lambda: render.render_pages_latex(alpha, kind),
                lambda: render.pages_json_obj(alpha, kind),
            )

        if args.command == "mackey-e1":
            page = mackey_e1(alpha, kind)
            return _emit(
                args,
                lambda: render.render_mackey_text(alpha, kind, page),
                lambda: render.render_mackey_latex(alpha, kind, page),
                lambda: render.mackey_json_obj(alpha, kind, page),
            )

        if args.command == "tr":
            report = tr_report(alpha, args.level, kind)
            return _emit(
                args,
                lambda: render.render_tr_text(report),
                None,
                lambda: render.tr_json_obj(report),
            )

        if args.command == "check":
            if args.kinds == "both":
                kinds = (PrismKind.TRANSVERSAL, PrismKind.CRYSTALLINE)
            else:
                kinds = (PrismKind.from_string(args.kinds),)
            cfg = CheckConfig(
                samples=args.samples,
                seed=args.seed,
                max_len=args.max_len,
                max_coeff=args.max_coeff,
                max_dinf=args.max_dinf,
                kinds=kinds,
            )
            report = crosscheck(cfg)
            if args.format == "json":
                sys.stdout.buffer.write(render.render_json(report.to_json_obj()))
                sys.stdout.write("\n")
            else:
                print(render.render_check_text(report))
            return 0 if report.passed else 2

        if args.command == "obstruction":
            prob = ObstructionProblem(
                source_exponents=tuple(int(x) for x in args.source.split(",")),
                target_exponents=tuple(int(x) for x in args.target.split(",")),
                composite_au=tuple(args.c for _ in args.target.split(",")),
                composite_ua=tuple(args.c for _ in args.source.split(",")),
                p=args.p,
            )
            result = obstruction_search(prob)
            return _emit(
                args,
                lambda: render.render_obstruction_text(prob, result),
                None,
                lambda: render.obstruction_json_obj(prob, result),
            )
    except TfStarError as exc:
        print(f"tfstar: error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"tfstar: error: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {args.command}")


def main() -> None:
    sys.exit(run(sys.argv[1:]))
