"""``padic``: evaluate integer expressions in Z_p and print their digits.

Usage::

    padic --prime P [--digits N] [--format pretty|json] [--verify] [EXPR]

Without EXPR, expressions are read one per line from standard input.

Exit codes: 0 success, 1 parse error, 2 invalid configuration,
3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional, TextIO

from . import oracle
from .arithmetic import add, mul, negate
from .digits import PadicInt, Prime, embed_int, format_digits, to_record
from .expr import Add, Dist, Expr, IntLit, Mul, Neg, ParseError, Term, Val, parse
from .metric import DistanceBound, distance, valuation_bound

EXIT_OK, EXIT_PARSE, EXIT_CONFIG, EXIT_VERIFY = 0, 1, 2, 3


@dataclass(frozen=True)
class CliConfig:
    p: int
    digits: int = 16
    format: str = "pretty"
    verify: bool = False

    def __post_init__(self):
        object.__setattr__(self, "p", Prime(self.p))
        if self.digits < 1:
            raise ValueError(f"--digits must be >= 1, got {self.digits}")
        if self.format not in ("pretty", "json"):
            raise ValueError(f"unknown format {self.format!r}")


@dataclass
class Answer:
    text: str
    record: dict
    verified: Optional[bool] = None

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.record)
        if self.verified is None:
            return self.text
        return f"{self.text}  {'OK' if self.verified else 'FAIL'}"


def to_stream(e: Term, p: int) -> PadicInt:
    if isinstance(e, IntLit):
        return embed_int(e.value, p)
    if isinstance(e, Add):
        return add(to_stream(e.left, p), to_stream(e.right, p))
    if isinstance(e, Mul):
        return mul(to_stream(e.left, p), to_stream(e.right, p))
    if isinstance(e, Neg):
        return negate(to_stream(e.operand, p))
    raise TypeError(f"{type(e).__name__} is not stream-valued")


def to_integer(e: Term) -> int:
    """Plain big-integer value of a term, for verification."""
    if isinstance(e, IntLit):
        return e.value
    if isinstance(e, Add):
        return to_integer(e.left) + to_integer(e.right)
    if isinstance(e, Mul):
        return to_integer(e.left) * to_integer(e.right)
    if isinstance(e, Neg):
        return -to_integer(e.operand)
    raise TypeError(f"{type(e).__name__} is not stream-valued")


def _metric_answer(query: str, bound: DistanceBound, cfg: CliConfig, expected: int) -> Answer:
    if query == "v":
        text = f"v = {bound.exponent}" if bound.is_exact else f"v >= {bound.exponent}"
    else:
        text = str(bound)
    record = {
        "p": int(cfg.p),
        "query": query,
        "kind": bound.kind.value,
        "exponent": bound.exponent,
        "precision": cfg.digits,
    }
    verified = None
    if cfg.verify:
        verified = bound.exponent == expected
        record["verified"] = verified
    return Answer(text, record, verified)


def evaluate(e: Expr, cfg: CliConfig) -> Answer:
    p, n = cfg.p, cfg.digits
    if isinstance(e, Val):
        bound = valuation_bound(to_stream(e.arg, p), n)
        return _metric_answer("v", bound, cfg, oracle.valuation(to_integer(e.arg), p, n))
    if isinstance(e, Dist):
        bound = distance(to_stream(e.left, p), to_stream(e.right, p), n)
        diff = to_integer(e.left) - to_integer(e.right)
        return _metric_answer("d", bound, cfg, oracle.valuation(diff, p, n))

    stream = to_stream(e, p)
    value = stream.truncate(n)
    text = f"{format_digits(stream, n, sep=' ')} = {value} mod {p ** n}"
    record = to_record(stream, n)
    record["value"] = value
    verified = None
    if cfg.verify:
        verified = value == oracle.reduce(to_integer(e), p, n)
        record["verified"] = verified
    return Answer(text, record, verified)


def run_line(src: str, cfg: CliConfig, out: TextIO, err: TextIO) -> int:
    try:
        e = parse(src)
    except ParseError as exc:
        print(f"parse error {exc}", file=err)
        return EXIT_PARSE
    answer = evaluate(e, cfg)
    print(answer.render(cfg.format), file=out)
    return EXIT_VERIFY if answer.verified is False else EXIT_OK


def interactive(cfg: CliConfig, inp: TextIO, out: TextIO, err: TextIO) -> int:
    """One expression per line until EOF; the worst exit code seen is returned."""
    prompt = inp.isatty()
    status = EXIT_OK
    while True:
        if prompt:
            print(f"Z_{cfg.p}> ", end="", file=out, flush=True)
        line = inp.readline()
        if not line:
            break
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line in ("quit", "exit"):
            break
        # EXIT_VERIFY > EXIT_PARSE > EXIT_OK
        status = max(status, run_line(line, cfg, out, err))
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="padic", description="Lazy p-adic integer calculator.")
    ap.add_argument("--prime", "-p", type=int, required=True, help="prime modulus p")
    ap.add_argument("--digits", "-n", type=int, default=16, help="digits to show (default 16)")
    ap.add_argument("--format", choices=("pretty", "json"), default="pretty")
    ap.add_argument("--verify", action="store_true", help="cross-check against big-integer arithmetic")
    ap.add_argument("expr", nargs="?", help="expression; omit for interactive mode")
    return ap


_LEADING_MINUS = re.compile(r"-\s*[\d(]")
_VALUE_OPTIONS = {"--prime", "-p", "--digits", "-n", "--format"}


def _protect_expression(argv: list[str]) -> list[str]:
    # an expression such as "-(2+3)" would otherwise be read as an option
    for i, arg in enumerate(argv):
        if arg == "--":
            break
        if _LEADING_MINUS.match(arg) and (i == 0 or argv[i - 1] not in _VALUE_OPTIONS):
            return argv[:i] + argv[i + 1 :] + ["--", arg]
    return argv


def main(
    argv: Optional[list[str]] = None,
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _protect_expression(sys.argv[1:] if argv is None else list(argv))
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    try:
        cfg = CliConfig(args.prime, args.digits, args.format, args.verify)
    except ValueError as exc:
        print(f"invalid configuration: {exc}", file=stderr)
        return EXIT_CONFIG
    if args.expr is None:
        return interactive(cfg, stdin, stdout, stderr)
    return run_line(args.expr, cfg, stdout, stderr)


if __name__ == "__main__":
    sys.exit(main())
