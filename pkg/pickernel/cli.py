"""
Command line of pickernel.

    pickernel reduce   --input G --problem pic --k 2 [--output H] [--trace T.json] [--audit]
    pickernel solve    --input G --problem pic --k 2 [--kernelize] [--output F]
    pickernel verify   --input G --problem pic [--completion F]
    pickernel gen      --model planted-pic --n 30 --edits 2 --seed 7 [--output G]
    pickernel selftest

Exit codes: 0 success, 1 usage or input error, 2 rejected / infeasible,
3 verification failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable

from .bcc import bcc_kernel_bound, bcd_reduce, reduce_bcc
from .constants import (
    BCC,
    BCD,
    EXIT_OK,
    EXIT_REJECTED,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    GENERATOR_MODELS,
    PIC,
    PROBLEMS,
)
from .generators import cycle, generate, named_graph
from .graph import (
    Graph,
    GraphFormatError,
    complement,
    dump_graph,
    load_edge_list,
    load_graph,
    write_graph,
)
from .kernel import kernel_bound, reduce
from .recognition import is_biclique_chain, umbrella_ordering
from .settings import settings
from .solver import branch_solve, certificate, oracle_opt, solve_optimum, verify_solution
from .utils import sorted_edges

__all__ = ["main", "build_parser"]

logger = logging.getLogger(__name__)

REDUCERS: dict[str, Callable] = {PIC: reduce, BCC: reduce_bcc, BCD: bcd_reduce}


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_USAGE instead of argparse's 2, which means rejected here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    common.add_argument("-q", "--quiet", action="store_true", help="only log errors")
    common.add_argument("--jobs", type=int, default=None, help="workers for the read-only scans")
    common.add_argument("--seed", type=int, default=None, help="seed of the random generators")

    instance = argparse.ArgumentParser(add_help=False)
    instance.add_argument("--input", "-i", help="graph file, standard input when omitted")
    instance.add_argument("--problem", "-p", choices=PROBLEMS, default=PIC)
    instance.add_argument("--output", "-o", help="where to write the resulting graph or edges")

    budget = argparse.ArgumentParser(add_help=False)
    budget.add_argument("--k", "-k", type=_nonnegative, required=True, help="edit budget")

    parser = _Parser(
        prog="pickernel",
        description="Kernelization of Proper Interval Completion and Bi-clique Chain Completion.",
        epilog="Exit codes: 0 success, 1 usage or input error, 2 rejected or infeasible, "
        "3 verification failed.",
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = commands.add_parser("reduce", parents=[common, instance, budget], help="kernelize an instance")
    p.add_argument("--trace", "-t", help="where to write the JSON trace")
    p.add_argument("--audit", action="store_true", help="measure the structures left in the kernel")
    p.set_defaults(run=cmd_reduce)

    p = commands.add_parser("solve", parents=[common, instance, budget], help="solve exactly")
    p.add_argument("--kernelize", action="store_true", help="reduce before solving")
    p.set_defaults(run=cmd_solve)

    p = commands.add_parser("verify", parents=[common, instance], help="check class membership")
    p.add_argument("--completion", "-c", help="edge list to add (to delete, for bcd) before checking")
    p.set_defaults(run=cmd_verify)

    p = commands.add_parser("gen", parents=[common], help="generate an instance")
    p.add_argument("--model", "-m", choices=GENERATOR_MODELS, required=True)
    p.add_argument("--n", "-n", type=_nonnegative, required=True, help="number of vertices")
    p.add_argument("--edits", "-e", type=_nonnegative, default=0, help="edges removed by planted models")
    p.add_argument("--p", type=float, default=0.5, help="edge probability of gnp")
    p.add_argument("--output", "-o", help="graph file, standard output when omitted")
    p.set_defaults(run=cmd_gen)

    p = commands.add_parser("selftest", parents=[common], help="run the golden checks")
    p.set_defaults(run=cmd_selftest)

    return parser


# Input / output


def _read_input(args) -> Graph:
    if args.input is None:
        return load_graph(sys.stdin.read())
    with open(args.input) as f:
        return load_graph(f.read())


def _write_edges(edges, path):
    with open(path, "w") as f:
        f.writelines(f"{u} {v}\n" for u, v in edges)


# Subcommands


def cmd_reduce(args) -> int:
    g = _read_input(args)
    reduced, k, _, trace = REDUCERS[args.problem](g, args.k, audit=args.audit)

    if args.output:
        write_graph(reduced, args.output)
    if args.trace:
        trace.write(args.trace)

    print(reduced.n, reduced.m, k, trace.status.value)
    return EXIT_REJECTED if trace.status.rejected else EXIT_OK


def cmd_solve(args) -> int:
    g = _read_input(args)
    forced = []
    k = args.k
    if args.kernelize:
        g, k, forced, trace = REDUCERS[args.problem](g, args.k)
        if trace.status.rejected:
            logger.info("kernelization rejected the instance (%s)", trace.status.value)
            print(f"infeasible at {args.k}")
            return EXIT_REJECTED

    solution = solve_optimum(g, args.problem, k)
    logger.info("explored %d search nodes", solution.explored)
    if not solution.feasible:
        print(f"infeasible at {args.k}")
        return EXIT_REJECTED

    # Forced edges first, each part in its own order.
    edges = list(forced) + sorted_edges(solution.completion)
    if args.output:
        _write_edges(edges, args.output)
    print(f"feasible {len(edges)}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _read_input(args)

    if args.completion:
        with open(args.completion) as f:
            edges = load_edge_list(f.read())
        if verify_solution(g, args.problem, edges):
            print("accepted")
            return EXIT_OK
        target = g.copy()
        if args.problem == BCD:
            for u, v in edges:
                target.remove_edge(u, v)
        else:
            target.add_edges(edges)
        return _rejected(target, args.problem)

    if args.problem == PIC:
        order = umbrella_ordering(g)
        if order is not None:
            print("ordering", *order)
            return EXIT_OK
    else:
        witness = is_biclique_chain(g if args.problem == BCC else complement(g))
        if witness is not None:
            print("cliques", *witness.first_clique, "|", *witness.second_clique)
            return EXIT_OK
    return _rejected(g, args.problem)


def _rejected(g: Graph, problem: str) -> int:
    obstruction = certificate(g, problem)
    print("certificate", json.dumps(obstruction.to_json() if obstruction else None))
    return EXIT_VERIFY_FAILED


def cmd_gen(args) -> int:
    seed = args.seed if args.seed is not None else settings.seed
    g = generate(args.model, args.n, seed=seed, edits=args.edits, p=args.p)
    if args.output:
        write_graph(g, args.output)
    else:
        sys.stdout.write(dump_graph(g))
    return EXIT_OK


def _golden_checks() -> list[tuple[str, Callable[[], bool]]]:
    checks = [
        (
            f"oracle {problem} {name} = {value}",
            lambda p=problem, n=name, v=value: oracle_opt(named_graph(n), p, settings.oracle_cap) == v,
        )
        for problem, name, value in [
            (PIC, "claw", 1),
            (PIC, "c4", 1),
            (PIC, "c5", 2),
            (BCC, "3k1", 1),
            (BCC, "c4", 1),
            (BCC, "c5", 2),
            (BCD, "2k2", 1),
        ]
    ]
    for name in ("net", "3-sun"):
        checks.append(
            (
                f"search agrees with oracle on {name}",
                lambda n=name: solve_optimum(named_graph(n), PIC, settings.oracle_cap).optimum
                == oracle_opt(named_graph(n), PIC, settings.oracle_cap),
            )
        )
    checks += [
        ("kernel bound at k=1 is 80", lambda: kernel_bound(1) == 80),
        ("kernel bound at k=2 is 617", lambda: kernel_bound(2) == 617),
        ("bcc kernel bound at k=1 is 24", lambda: bcc_kernel_bound(1) == 24),
        ("bcc kernel bound at k=2 is 56", lambda: bcc_kernel_bound(2) == 56),
        ("p4 is proper interval", lambda: umbrella_ordering(named_graph("p4")) is not None),
        ("claw is not proper interval", lambda: umbrella_ordering(named_graph("claw")) is None),
        ("c4 is not proper interval", lambda: umbrella_ordering(named_graph("c4")) is None),
        ("c9 is rejected at k=2", lambda: reduce(cycle(9), 2)[3].status.rejected),
        ("c9 is pruned at k=2", lambda: branch_solve(cycle(9), PIC, 2).explored == 1),
    ]
    return checks


def cmd_selftest(args) -> int:
    checks = _golden_checks()
    failed = 0
    for name, check in checks:
        if check():
            logger.info("ok: %s", name)
        else:
            logger.error("failed: %s", name)
            failed += 1

    print(f"selftest {len(checks) - failed}/{len(checks)} passed")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _configure(args):
    if args.jobs is not None:
        if args.jobs < 1:
            raise ValueError(f"--jobs must be positive, got {args.jobs}")
        settings.jobs = args.jobs
    if args.seed is not None:
        settings.seed = args.seed

    level = settings.logging_level
    if args.quiet:
        level = logging.ERROR
    elif args.verbose == 1:
        level = logging.INFO
    elif args.verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _configure(args)
        return args.run(args)
    except (GraphFormatError, OSError, ValueError) as e:
        if args.verbose >= 2:
            raise
        print(f"pickernel: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
