"""Command-line interface.

Exit codes are uniform across subcommands: 0 for success or a positive
decision, 1 for a negative decision, 2 for any error (bad input, parse
failure, exhausted budget). Frameworks are read from apx or tgf files,
sniffed by extension and overridable with --format; '-' reads stdin.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import evaluation
from .backdoor import detect, distance
from .fileformats import ParseError, parse_apx, parse_tgf, serialize_apx
from .fragments import FragmentClass, SearchBudgetExceeded, recognize
from .framework import ArgumentationFramework, Semantics
from .gadgets import (
    generate_random,
    parse_dimacs,
    reduce_ca_bip,
    reduce_ca_sym,
    reduce_sa_bip,
    reduce_sa_sym,
)
from .oracle import OracleGuardError, enumerate_oracle

_SEMANTICS = [s.value for s in Semantics]
_CLASSES = [c.value for c in FragmentClass]
_EVAL_CLASSES = [FragmentClass.ACYC.value, FragmentClass.NOEVEN.value]
_REDUCTIONS = {
    "ca-bip": reduce_ca_bip,
    "sa-bip": reduce_sa_bip,
    "ca-sym": reduce_ca_sym,
    "sa-sym": reduce_sa_sym,
}


class CliError(RuntimeError):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_framework(path: str, fmt: str | None) -> ArgumentationFramework:
    text = _read_text(path)
    if fmt is None:
        fmt = "tgf" if path.lower().endswith(".tgf") else "apx"
    return parse_tgf(text) if fmt == "tgf" else parse_apx(text)


def _format_extension(ext: frozenset[str]) -> str:
    return ",".join(sorted(ext))


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("file", help="framework file, or '-' for stdin")
    parser.add_argument("--format", choices=["apx", "tgf"], default=None,
                        help="input format (default: sniffed by extension)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="afbackdoor",
        description="Argumentation solving through backdoors to tractable "
                    "fragments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="test membership in a fragment class")
    _add_input_options(p)
    p.add_argument("--class", dest="fragment", choices=_CLASSES, required=True)

    p = sub.add_parser("backdoor", help="find a small backdoor into a class")
    _add_input_options(p)
    p.add_argument("--class", dest="fragment", choices=_CLASSES, required=True)
    p.add_argument("--max-k", type=int, default=None,
                   help="largest backdoor size to consider (default: all)")
    p.add_argument("--distance", action="store_true",
                   help="print only the distance to the class")

    p = sub.add_parser("extensions", help="enumerate extensions")
    _add_input_options(p)
    p.add_argument("--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("--method", choices=["backdoor", "oracle"],
                   default="backdoor")
    p.add_argument("--class", dest="fragment", choices=_EVAL_CLASSES,
                   default=FragmentClass.ACYC.value)

    p = sub.add_parser("accept", help="decide credulous/skeptical acceptance")
    _add_input_options(p)
    p.add_argument("--mode", choices=["credulous", "skeptical"], required=True)
    p.add_argument("--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("--argument", required=True)
    p.add_argument("--method", choices=["backdoor", "oracle"],
                   default="backdoor")
    p.add_argument("--class", dest="fragment", choices=_EVAL_CLASSES,
                   default=FragmentClass.ACYC.value)
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--explain", action="store_true",
                   help="also print a witnessing extension when one exists")

    p = sub.add_parser("reduce", help="turn a DIMACS CNF into a framework")
    p.add_argument("file", help="DIMACS CNF file, or '-' for stdin")
    p.add_argument("--type", dest="reduction", choices=sorted(_REDUCTIONS),
                   required=True)

    p = sub.add_parser("generate", help="emit a seeded random framework")
    p.add_argument("--args", type=int, required=True)
    p.add_argument("--attack-prob", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)

    p = sub.add_parser("bench", help="compare pipeline and oracle on a corpus")
    p.add_argument("corpus", help="directory of apx/tgf instances")
    p.add_argument("--semantics", choices=_SEMANTICS, required=True)
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--class", dest="fragment", choices=_EVAL_CLASSES,
                   default=FragmentClass.ACYC.value)

    return parser


def _cmd_recognize(args: argparse.Namespace) -> int:
    af = _load_framework(args.file, args.format)
    member = recognize(af, FragmentClass(args.fragment))
    print("yes" if member else "no")
    return 0 if member else 1


def _cmd_backdoor(args: argparse.Namespace) -> int:
    af = _load_framework(args.file, args.format)
    fragment = FragmentClass(args.fragment)
    if args.distance:
        print(distance(af, fragment))
        return 0
    budget = len(af) if args.max_k is None else args.max_k
    found = detect(af, fragment, budget)
    if found is None:
        print(f"NOT FOUND within k={budget}")
        return 1
    for name in found.sorted_members():
        print(name)
    return 0


def _cmd_extensions(args: argparse.Namespace) -> int:
    af = _load_framework(args.file, args.format)
    semantics = Semantics(args.semantics)
    if args.method == "oracle":
        family = enumerate_oracle(af, semantics)
    else:
        fragment = FragmentClass(args.fragment)
        found = detect(af, fragment, len(af))
        family = evaluation.extensions(
            af, found, evaluation.NoEvenSubSolver(fragment), semantics)
    for ext in family:
        print(_format_extension(ext))
    return 0


def _cmd_accept(args: argparse.Namespace) -> int:
    af = _load_framework(args.file, args.format)
    semantics = Semantics(args.semantics)
    credulous = args.mode == "credulous"
    witness: frozenset[str] | None = None

    if args.method == "oracle":
        from .oracle import credulous_oracle, skeptical_oracle
        if credulous:
            accepted = credulous_oracle(af, semantics, args.argument)
        else:
            accepted = skeptical_oracle(af, semantics, args.argument)
        if args.explain:
            witness = _oracle_witness(af, semantics, args.argument,
                                      credulous, accepted)
    else:
        fragment = FragmentClass(args.fragment)
        if credulous:
            accepted = evaluation.credulous(af, semantics, args.argument,
                                            fragment, args.max_k)
        else:
            accepted = evaluation.skeptical(af, semantics, args.argument,
                                            fragment, args.max_k)
        if args.explain:
            witness = _pipeline_witness(af, semantics, args.argument,
                                        fragment, args.max_k,
                                        credulous, accepted)

    print("accepted" if accepted else "rejected")
    if witness is not None:
        print(_format_extension(witness))
    return 0 if accepted else 1


def _oracle_witness(af, semantics, argument, credulous, accepted):
    # credulous yes: an extension containing the argument;
    # skeptical no: an extension missing it.
    family = enumerate_oracle(af, semantics)
    if credulous and accepted:
        return next(ext for ext in family if argument in ext)
    if not credulous and not accepted:
        return next(ext for ext in family if argument not in ext)
    return None


def _pipeline_witness(af, semantics, argument, fragment, max_k,
                      credulous, accepted):
    if (credulous and not accepted) or (not credulous and accepted):
        return None
    if semantics is Semantics.ADM and not credulous:
        # constant-false decision; the empty set is the counterexample
        return frozenset()
    effective = Semantics.COM if semantics is Semantics.ADM else semantics
    budget = len(af) if max_k is None else max_k
    found = detect(af, fragment, budget)
    family = evaluation.extensions(
        af, found, evaluation.NoEvenSubSolver(fragment), effective)
    if credulous:
        return next(ext for ext in family if argument in ext)
    return next(ext for ext in family if argument not in ext)


def _cmd_reduce(args: argparse.Namespace) -> int:
    formula = parse_dimacs(_read_text(args.file))
    af, query = _REDUCTIONS[args.reduction](formula)
    sys.stdout.write(serialize_apx(af))
    print(f"% query {query}")
    return 0


def _cmd_generate(args: argparse.Namespace) -> int:
    af = generate_random(args.args, args.attack_prob, args.seed)
    sys.stdout.write(serialize_apx(af))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise CliError(f"not a directory: {corpus}")
    if args.repeat < 1:
        raise CliError("--repeat must be at least 1")
    semantics = Semantics(args.semantics)
    fragment = FragmentClass(args.fragment)
    sub = evaluation.NoEvenSubSolver(fragment)
    print("instance\tn\tattacks\tk\tt_backdoor\tt_oracle\tagreement")
    files = sorted(p for p in corpus.iterdir()
                   if p.suffix.lower() in (".apx", ".tgf"))
    for path in files:
        af = _load_framework(str(path), None)

        def run_pipeline():
            found = detect(af, fragment, len(af))
            return evaluation.extensions(af, found, sub, semantics)

        family, t_backdoor = _timed(run_pipeline, args.repeat)
        found = detect(af, fragment, len(af))
        try:
            oracle_family, t_oracle = _timed(
                lambda: enumerate_oracle(af, semantics), args.repeat)
            agreement = "ok" if set(oracle_family) == set(family) else "MISMATCH"
            oracle_col = f"{t_oracle:.4f}"
        except OracleGuardError:
            agreement = "-"
            oracle_col = "-"
        print(f"{path.name}\t{len(af)}\t{len(af.attack_set)}\t{found.size}\t"
              f"{t_backdoor:.4f}\t{oracle_col}\t{agreement}")
    return 0


def _timed(fn, repeat: int):
    best = None
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return result, best


_COMMANDS = {
    "recognize": _cmd_recognize,
    "backdoor": _cmd_backdoor,
    "extensions": _cmd_extensions,
    "accept": _cmd_accept,
    "reduce": _cmd_reduce,
    "generate": _cmd_generate,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (CliError, ParseError, ValueError, OracleGuardError,
            SearchBudgetExceeded, evaluation.DetectionBudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
