"""Command-line entry point: ``spinbits <command> --n N [options]``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import TextIO

DEFAULT_MAX_N = 8


@dataclass(frozen=True)
class CommandConfig:
    command: str
    n: int
    algebra: str = "odd"
    form: str = "complex"
    format: str = "json"
    output: str | None = None
    max_n: int = DEFAULT_MAX_N
    as_float: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinbits", description="Spin representations of so(n) from no-carry binary arithmetic."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, formats: tuple[str, ...], default_format: str) -> None:
        p.add_argument("--n", type=int, required=True, help="number of bits N")
        p.add_argument("--algebra", choices=("odd", "even"), default="odd")
        p.add_argument("--form", choices=("complex", "compact"), default="complex")
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, help="refuse N above this cap")
        p.add_argument("--float", dest="as_float", action="store_true", help="render numbers as decimals")

    common(sub.add_parser("gen", help="emit a basis as operator JSON"), ("json", "text"), "json")
    common(sub.add_parser("verify", help="run the relation checks"), ("text", "json"), "text")
    common(sub.add_parser("classify", help="Dynkin type of the algebra"), ("json", "text"), "json")
    common(sub.add_parser("graph", help="coloured shift graph"), ("dot", "json"), "dot")
    common(sub.add_parser("compact", help="compact basis and realness report"), ("json", "text"), "json")
    common(sub.add_parser("oracle", help="compare against the Clifford construction"), ("text", "json"), "text")
    return parser


def parse_config(argv: list[str] | None = None) -> CommandConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 1:
        parser.error("--n must be positive")
    if args.n > args.max_n:
        parser.error(f"--n {args.n} exceeds --max-n {args.max_n}")
    if args.algebra == "even" and args.n < 2:
        parser.error("the even algebra needs --n >= 2")
    if args.form == "compact" and args.algebra == "even":
        parser.error("the compact form is only available for the odd algebra")
    return CommandConfig(
        command=args.command,
        n=args.n,
        algebra=args.algebra,
        form=args.form,
        format=args.format,
        output=args.output,
        max_n=args.max_n,
        as_float=args.as_float,
    )


def _basis(cfg: CommandConfig):
    if cfg.form == "compact":
        from .compactreal import compact_basis

        return compact_basis(cfg.n)
    if cfg.algebra == "even":
        from .spineven import even_basis

        return even_basis(cfg.n)
    from .spinodd import odd_basis

    return odd_basis(cfg.n)


def _operator_text(op, as_float: bool) -> str:
    parts = []
    for r, c, v in op.entries():
        if not as_float:
            val = str(v)
        elif v.is_real():
            val = f"{float(v.real):g}"
        else:
            val = f"{complex(v):g}"
        parts.append(f"({r:0{op.width}b},{c:0{op.width}b})={val}")
    return " ".join(parts)


def run(cfg: CommandConfig, out: TextIO) -> int:
    if cfg.command == "gen":
        ops = _basis(cfg)
        if cfg.format == "text":
            for i, op in enumerate(ops):
                out.write(f"{i}: {_operator_text(op, cfg.as_float)}\n")
        else:
            payload = {
                "N": cfg.n,
                "algebra": cfg.algebra,
                "form": cfg.form,
                "dim": len(ops),
                "operators": [op.to_dict(as_float=cfg.as_float) for op in ops],
            }
            out.write(json.dumps(payload) + "\n")
        return 0

    if cfg.command == "verify":
        if cfg.form == "compact":
            from .compactreal import verify_compact

            report = verify_compact(cfg.n, max_n=cfg.max_n)
        elif cfg.algebra == "even":
            from .spineven import verify_even

            report = verify_even(cfg.n, max_n=cfg.max_n)
        else:
            from .spinodd import verify_odd

            report = verify_odd(cfg.n, max_n=cfg.max_n)
        _write_report(report, cfg, out)
        return 0 if report.passed else 1

    if cfg.command == "classify":
        from .structure import classify

        if cfg.algebra == "even":
            from .spineven import even_cartan, even_lie_basis

            result = classify(even_lie_basis(cfg.n), even_cartan(cfg.n))
        else:
            from .spinodd import odd_cartan, odd_lie_basis

            result = classify(odd_lie_basis(cfg.n), odd_cartan(cfg.n))
        if cfg.format == "text":
            out.write(f"{result.type}{' ' + result.note if result.note else ''}\n")
            for row in result.matrix:
                out.write(" ".join(f"{x:2d}" for x in row) + "\n")
        else:
            out.write(json.dumps(result.to_dict()) + "\n")
        return 0

    if cfg.command == "graph":
        from .graphout import shift_graph, to_dot, to_json

        g = shift_graph(cfg.n)
        out.write(to_dot(g) if cfg.format == "dot" else to_json(g) + "\n")
        return 0

    if cfg.command == "compact":
        from .compactreal import compact_basis, realness_report

        ops = compact_basis(cfg.n)
        realness = realness_report(cfg.n, max_n=cfg.max_n)
        if cfg.format == "text":
            out.write(f"N={cfg.n} dim={len(ops)} all_real={realness['all_real']}\n")
            out.write("real elements: " + " ".join(map(str, realness["real_elements"])) + "\n")
        else:
            payload = {
                "N": cfg.n,
                "dim": len(ops),
                "operators": [op.to_dict(as_float=cfg.as_float) for op in ops],
                "realness": realness,
            }
            out.write(json.dumps(payload) + "\n")
        return 0

    if cfg.command == "oracle":
        from .cliffordoracle import oracle_compare

        report = oracle_compare(cfg.n, cfg.algebra)
        _write_report(report, cfg, out)
        return 0 if report.passed else 1

    raise ValueError(f"unknown command {cfg.command!r}")


def _write_report(report, cfg: CommandConfig, out: TextIO) -> None:
    if cfg.format == "json":
        out.write(json.dumps(report.to_dict()) + "\n")
    else:
        out.write(report.to_text())


def main(argv: list[str] | None = None) -> int:
    cfg = parse_config(argv)
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8", newline="\n") as fh:
            return run(cfg, fh)
    return run(cfg, sys.stdout)


if __name__ == "__main__":
    sys.exit(main())
