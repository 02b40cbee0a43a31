"""Command-line front end: ``multiway-qubit <subcommand> [flags]``.

Exit codes: 0 success, 1 usage error, 2 enumeration cap exceeded,
3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .continuum import PAULI_X, exact_solution, expm_2x2, expm_limit
from .harness import (
    DegenerateFit,
    SweepConfig,
    export_multiway_dot,
    fit_convergence_rate,
    run_convergence_sweep,
)
from .multiway import DEFAULT_ENUMERATION_CAP, CapExceeded, ModelConfig, Word
from .templates import ALGORITHMS, compute_template

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit(2)
        raise UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")


def _num(x: float) -> float:
    return x + 0.0  # drop negative zero so output is stable


def _complex_pair(z: complex) -> list[float]:
    return [_num(z.real), _num(z.imag)]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="multiway-qubit",
        description="Renormalized append-rule multiway system and its qubit limit.",
        epilog="Any subcommand also accepts --config FILE: 'key = value' lines "
        "mirroring the flags (flags on the command line win).",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def model_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--init", default="0", help="initial word as subindices, e.g. 0, 012 or 0-10-3")
        p.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP, help="max words per level")

    g = sub.add_parser("graph", help="export the multiway graph as DOT")
    g.add_argument("--K", type=int, default=2)
    g.add_argument("--depth", type=int, default=3)
    g.add_argument("--renormalized", action="store_true", help="label nodes by coarse-grained qubit term")
    g.add_argument("--parallel-edges", action="store_true",
                   help="with --renormalized, keep one node per word instead of merging the K identity edges")
    g.add_argument("--out", type=Path, help="write DOT here instead of stdout")
    model_flags(g)

    t = sub.add_parser("template", help="compute the exact k-th template as JSON")
    t.add_argument("--K", type=int, required=True)
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--algo", choices=ALGORITHMS, default="closedform")
    model_flags(t)

    w = sub.add_parser("wave", help="print the exact solution cos t|0> - i sin t|1>")
    w.add_argument("--t", type=float, required=True)

    c = sub.add_parser(
        "converge",
        help="sweep normalized templates against the exact solution",
        description="Level k is floor(t*K); when t*K lies within one ulp of an "
        "integer, that integer is used instead.",
    )
    c.add_argument("--t-list", type=_float_list, required=True)
    c.add_argument("--K-list", "--k-list", dest="K_list", type=_int_list, required=True)
    c.add_argument("--algo", choices=ALGORITHMS, default="closedform")
    c.add_argument("--out", type=Path, required=True, help="CSV output path")
    c.add_argument("--cap", type=int, default=DEFAULT_ENUMERATION_CAP)

    e = sub.add_parser("expm-check", help="compare (I + M/n)^n against exp(M) for M = -i t X")
    e.add_argument("--t", type=float, default=1.0)
    e.add_argument("--n-list", type=_int_list, default=[1000, 2000, 4000, 8000])
    return parser


def _config_tokens(path: Path) -> list[str]:
    tokens: list[str] = []
    for lineno, raw in enumerate(path.read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            key, _, value = line.partition(" ")
        key, value = key.strip().lstrip("-"), value.strip()
        if not key:
            raise UsageError(f"{path}:{lineno}: missing key")
        flag = "--" + key.replace("_", "-") if key not in ("K", "k") else "--" + key
        if value.lower() in ("true", "yes", "on"):
            tokens.append(flag)
        elif value.lower() in ("false", "no", "off"):
            continue
        else:
            tokens += [flag, value]
    return tokens


def _expand_config(argv: list[str]) -> list[str]:
    if "--config" not in argv and not any(a.startswith("--config=") for a in argv):
        return argv
    rest: list[str] = []
    cfg_path: str | None = None
    it = iter(argv)
    for a in it:
        if a == "--config":
            cfg_path = next(it, None)
            if cfg_path is None:
                raise UsageError("--config needs a FILE argument")
        elif a.startswith("--config="):
            cfg_path = a.split("=", 1)[1]
        else:
            rest.append(a)
    tokens = _config_tokens(Path(cfg_path))
    if not rest:
        raise UsageError("a subcommand is required")
    # file values go first so command-line flags override them
    return rest[:1] + tokens + rest[1:]


def _model(args: argparse.Namespace) -> ModelConfig:
    return ModelConfig(args.K, Word.parse(args.init, args.K), args.cap)


def _cmd_graph(args: argparse.Namespace) -> None:
    dot = export_multiway_dot(_model(args), args.depth, args.renormalized, args.parallel_edges)
    if args.out is None:
        sys.stdout.write(dot)
    else:
        args.out.write_text(dot)


def _cmd_template(args: argparse.Namespace) -> None:
    print(compute_template(args.algo, _model(args), args.k).to_json())


def _cmd_wave(args: argparse.Namespace) -> None:
    psi = exact_solution(args.t)
    print(json.dumps({"t": args.t, "c0": _complex_pair(psi.c0), "c1": _complex_pair(psi.c1)}))


def _cmd_converge(args: argparse.Namespace) -> None:
    cfg = SweepConfig(tuple(args.t_list), tuple(args.K_list), args.algo, args.out, args.cap)
    records = run_convergence_sweep(cfg)
    print(f"wrote {len(records)} rows to {args.out}")
    for t in cfg.t_values:
        rows = [r for r in records if r.t == t]
        try:
            print(f"t={t!r} slope={fit_convergence_rate(rows):.6f}")
        except DegenerateFit as exc:
            print(f"t={t!r} slope=undefined ({exc})")


def _cmd_expm_check(args: argparse.Namespace) -> None:
    M = PAULI_X.scale(-1j * args.t)
    reference = expm_2x2(M)
    print("n,max_abs_error,ratio_to_previous")
    previous = None
    for n in args.n_list:
        if n < 1:
            raise UsageError(f"n must be >= 1, got {n}")
        err = (expm_limit(M, n) - reference).max_abs()
        ratio = "" if previous is None else format(err / previous, ".6f")
        print(f"{n},{err:.6e},{ratio}")
        previous = err


_COMMANDS = {
    "graph": _cmd_graph,
    "template": _cmd_template,
    "wave": _cmd_wave,
    "converge": _cmd_converge,
    "expm-check": _cmd_expm_check,
}


def cli_main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(_expand_config(argv))
        _COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except CapExceeded as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    except OSError as exc:
        sys.stderr.write(f"I/O error: {exc}\n")
        return EXIT_IO
    except (ValueError, OverflowError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(cli_main())
