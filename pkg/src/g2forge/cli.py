"""Command-line front end: ``g2forge verify | decompose | index``.

Exit codes: 0 success, 1 a check failed, 2 usage or internal error.
"""

from __future__ import annotations

import argparse
import sys

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2
THREE_DIM = ("h3", "h5", "h7", "h8")


class CliError(Exception):
    pass


def cmd_verify(args) -> int:
    from .verify import run_checks, select

    if args.filter and not select(args.filter):
        raise CliError(f"no checks match {args.filter!r}")
    report = run_checks(args.filter, seed=args.seed)
    print(report.render())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(report.to_json(indent=2))
    return EXIT_OK if report.ok else EXIT_FAIL


def _subalgebra(label):
    from .subalgebras import LABELS, subalgebra

    if label not in LABELS:
        raise CliError(f"unknown subalgebra {label!r}; expected one of {', '.join(LABELS)}")
    return subalgebra(label)


def decompose_text(label: str, space: str) -> str:
    from .representations import centralizer_dims, sl2_decompose

    s = _subalgebra(label)
    if s.dim != 3:
        raise CliError(f"{label} is not three-dimensional")
    dec = sl2_decompose(s, space)
    if space == "o0":
        return str(dec)
    ze, zh = centralizer_dims(dec)
    return f"{dec}; dim z(e)={ze}, dim z(h)={zh}"


def index_text(label: str) -> str:
    from .representations import dynkin_index

    s = _subalgebra(label)
    if s.dim != 3:
        raise CliError(f"{label} is not three-dimensional")
    return str(dynkin_index(s))


def cmd_decompose(args) -> int:
    print(decompose_text(args.label, args.space))
    return EXIT_OK


def cmd_index(args) -> int:
    print(index_text(args.label))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="g2forge", description="Exact computations in g2 = der(O).")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--filter", metavar="GLOB", help="only run checks whose id matches GLOB")
    v.add_argument("--json", metavar="PATH", help="write the report as JSON")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled test points (default 0)")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("decompose", help="sl2 decomposition of O_0 or g2")
    d.add_argument("label", help="h3, h5, h7 or h8")
    d.add_argument("space", choices=("o0", "g2"))
    d.set_defaults(func=cmd_decompose)

    i = sub.add_parser("index", help="Dynkin index of a three-dimensional subalgebra")
    i.add_argument("label")
    i.set_defaults(func=cmd_index)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
