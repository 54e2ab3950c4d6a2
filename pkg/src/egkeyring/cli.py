"""Command-line interface: ``egkeyring {extract,verify,oracle,lemma,gen,stress}``.

Exit codes: 0 success, 1 unmet precondition / negative answer, 2 bad
input, 3 internal invariant violation or exhausted search budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .certificate import (Certificate, keyring_certificate, verify_certificate,
                          witness_certificate)
from .errors import (GraphInputError, InternalInvariantError, PreconditionError,
                     SearchBudgetExceeded)
from .generators import STRUCTURED, gen_random_dense, gen_structured
from .graph import format_edge_list, read_edge_list
from .keyring import extract
from .lemma import find_heavy_cycle
from .oracle import oracle_find_keyring
from .stress import stress

EXIT_OK, EXIT_PRECONDITION, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _fmt(seq) -> str:
    return " ".join(map(str, seq))


def _describe(cert: Certificate) -> str:
    lines = [f"kind: {cert.kind}", f"k: {cert.k}"]
    if cert.r is not None:
        lines.append(f"r: {cert.r}")
    lines += [f"center: {cert.center}", f"cycle: {_fmt(cert.cycle)}"]
    if cert.kind == "keyring":
        lines.append(f"leaves: {_fmt(cert.leaves)}")
        lines.append(f"edges: {len(cert.cycle) + len(cert.leaves)}")
    lines.append(f"verified: {str(cert.verified).lower()}")
    return "\n".join(lines) + "\n"


def _emit(cert: Certificate, as_json: bool) -> None:
    sys.stdout.write(cert.to_json() if as_json else _describe(cert))


def cmd_extract(args) -> int:
    G = read_edge_list(args.input)
    K = extract(G, args.k, args.r)
    _emit(keyring_certificate(G, K, args.k, args.r), args.json)
    return EXIT_OK


def cmd_lemma(args) -> int:
    G = read_edge_list(args.input)
    w = find_heavy_cycle(G, args.k)
    _emit(witness_certificate(G, w), args.json)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = read_edge_list(args.input)
    try:
        text = Path(args.cert).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphInputError(f"cannot read {args.cert}: {exc}") from exc
    verdict = verify_certificate(G, Certificate.from_json(text))
    print("valid" if verdict else f"invalid: {verdict.reason}")
    return EXIT_OK if verdict else EXIT_PRECONDITION


def cmd_oracle(args) -> int:
    G = read_edge_list(args.input)
    K = oracle_find_keyring(G, args.k, args.r)
    if K is None:
        print(f"no keyring with {args.r} leaves and at least {args.k} edges")
        return EXIT_PRECONDITION
    _emit(keyring_certificate(G, K, args.k, args.r), args.json)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "random_dense":
        if args.n is None or args.k is None:
            raise GraphInputError("random_dense needs -n and -k")
        G = gen_random_dense(args.n, args.k, args.seed)
    else:
        params = list(args.param)
        if args.n is not None:
            params.insert(0, args.n)
        G = gen_structured(args.kind, *params)
    text = format_edge_list(G)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_stress(args) -> int:
    report = stress(args.trials, args.n, args.k, args.r, args.seed, timing=args.timing)
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print(f"trials: {report.trials}  successes: {report.successes}  failures: {report.failures}")
        print(f"oracle agreements: {report.oracle_agreements}/{report.oracle_checks}")
        print(f"audit failures: {report.audit_failures}  contractions: {report.contractions}")
        print(f"max expansions per trial: {report.max_expansions}")
        if report.max_seconds is not None:
            print(f"max seconds per trial: {report.max_seconds:.3f}")
    return EXIT_OK if report.failures == 0 else EXIT_PRECONDITION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="egkeyring", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, helptext, need_r=False, json_flag=True):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("-i", "--input", required=True, help="edge-list file")
        p.add_argument("-k", type=int, required=True)
        if need_r:
            p.add_argument("-r", type=int, required=True)
        if json_flag:
            p.add_argument("--json", action="store_true", help="print the JSON certificate")
        return p

    graph_cmd("extract", "extract a keyring with r leaves and >= k edges", need_r=True)
    graph_cmd("lemma", "find a heavy cycle witness")
    graph_cmd("oracle", "exhaustively search for a keyring", need_r=True)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--cert", required=True)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("--kind", required=True, choices=sorted(STRUCTURED) + ["random_dense"])
    p.add_argument("-p", "--param", type=int, action="append", default=[],
                   help="integer parameter of the structured kind (repeatable)")
    p.add_argument("-n", type=int)
    p.add_argument("-k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True, help="output file, or - for stdout")

    p = sub.add_parser("stress", help="randomized extraction campaign")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true",
                   help="also report wall-clock time (makes output nondeterministic)")
    return parser


COMMANDS = {
    "extract": cmd_extract,
    "lemma": cmd_lemma,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "gen": cmd_gen,
    "stress": cmd_stress,
}


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args)
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (InternalInvariantError, SearchBudgetExceeded) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
