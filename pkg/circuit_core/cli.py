"""
Circuit Core - Command Line
Verbs: solve, simulate, bench, gen

Exit codes: 0 success, 2 parse error, 3 infeasibility or invariant
violation, 4 oracle budget exceeded.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from .config import ONLINE, get_logging_config, get_solver_config
from .coordinator import SolverCoordinator
from .core.errors import BudgetExceededError, CircuitCoreError, ParseError
from .core.objective import evaluate_throughput
from .core.types import format_rational, to_rational
from .formats import instance_to_dict, parse_instance, parse_suite, parse_trace, schedule_to_dict, trace_to_dict
from .online import adversarial_trace, online_blocked, online_no_delay

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4


def _emit(payload: dict, output: Optional[str]):
    text = json.dumps(payload, indent=2) + '\n'
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _print_diagnostics(diagnostics):
    for entry in diagnostics:
        sys.stderr.write(json.dumps(entry, sort_keys=True) + '\n')


# ============================================================================
# VERBS
# ============================================================================

def cmd_solve(args) -> int:
    inst = parse_instance(args.input)
    epsilon = to_rational(args.epsilon, 'epsilon')

    with SolverCoordinator() as coordinator:
        schedule, diagnostics = coordinator.solve_report(args.algo, inst, epsilon=epsilon, k=args.k, seed=args.seed)
    if args.verbose:
        _print_diagnostics(diagnostics)

    payload = schedule_to_dict(schedule, inst.senders, inst.receivers, inst.demand)
    payload['algorithm'] = args.algo
    _emit(payload, args.output)
    logger.info(f"✓ {args.algo}: f={format_rational(evaluate_throughput(schedule, inst.demand))}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    trace = parse_trace(args.trace)
    if args.delta == 0:
        run = online_no_delay(trace)
    else:
        with SolverCoordinator() as coordinator:
            handle = coordinator.offline_handle(args.offline, epsilon=args.epsilon)
            run = online_blocked(trace, args.delta, args.k, handle, args.seed)

    payload = {
        'horizon': trace.horizon,
        'delta': args.delta,
        'k': args.k if args.delta else None,
        'offline': args.offline if args.delta else None,
        'total': format_rational(run.total),
        'length': run.length,
        'steps': run.counts(),
        'credits': [format_rational(value) for value in run.credits],
        'blocks': [
            [{'edges': [list(edge) for edge in config.matching], 'duration': format_rational(config.duration)}
             for config in block.configs]
            for block in run.blocks
        ],
    }
    _emit(payload, args.output)
    logger.info(f"✓ simulated T={trace.horizon}: total={format_rational(run.total)}")
    return EXIT_OK


def cmd_bench(args) -> int:
    from .bench import run_benchmark

    suite = parse_suite(args.suite)
    if args.seed is not None:
        suite = suite.model_copy(update={'seed': args.seed})

    report = run_benchmark(suite, workers=args.workers)
    csv_text = report.to_csv(timings=args.timings)
    if args.output:
        Path(args.output).write_text(csv_text)
    else:
        sys.stdout.write(csv_text)
    if args.summary:
        Path(args.summary).write_text(json.dumps(report.summary(), indent=2, sort_keys=True) + '\n')

    if args.db:
        from .database import create_tables, get_db_connection, record_benchmark

        engine, session = get_db_connection(args.db)
        try:
            if not create_tables(engine):
                return EXIT_INVARIANT
            record_benchmark(session, report)
        finally:
            session.close()
    return EXIT_OK


def cmd_gen(args) -> int:
    from .bench import random_instance, random_trace, random_unit_trace

    if args.kind == 'instance':
        payload = instance_to_dict(random_instance(
            args.senders, args.receivers, args.max_demand, args.delta, args.window, args.seed, args.index
        ))
    elif args.kind == 'trace':
        payload = trace_to_dict(random_trace(
            args.senders, args.receivers, args.horizon, args.max_demand, args.seed, args.index
        ))
    elif args.kind == 'unit-trace':
        payload = trace_to_dict(random_unit_trace(
            args.senders, args.receivers, args.horizon, args.max_edges, args.seed, args.index
        ))
    else:
        payload = trace_to_dict(adversarial_trace(args.senders, args.delta, int(args.window), args.seed))
    _emit(payload, args.output)
    return EXIT_OK


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='circuit-core',
        description='Circuit switch scheduling: offline solvers, online simulation and benchmarks',
    )
    parser.add_argument('--verbose', action='store_true', help='Debug logging and LP diagnostics on stderr')
    verbs = parser.add_subparsers(dest='verb', required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS)
    default_epsilon = get_solver_config('hybrid')['default_epsilon']

    solve = verbs.add_parser('solve', parents=[common], help='Schedule one instance')
    solve.add_argument('--input', required=True, help='Instance JSON file')
    solve.add_argument('--algo', choices=['greedy', 'lp', 'hybrid', 'oracle'], default='hybrid')
    solve.add_argument('--epsilon', default=default_epsilon, help='Accuracy (e.g. 0.2 or 1/5)')
    solve.add_argument('--k', type=int, help='Configuration limit (lp, oracle)')
    solve.add_argument('--seed', type=int, default=0)
    solve.add_argument('--output', help='Schedule JSON file (default: stdout)')
    solve.set_defaults(func=cmd_solve)

    simulate = verbs.add_parser('simulate', parents=[common], help='Run an online algorithm on a trace')
    simulate.add_argument('--trace', required=True, help='Trace JSON file')
    simulate.add_argument('--k', type=int, default=ONLINE['default_k'])
    simulate.add_argument('--delta', type=int, default=ONLINE['default_delta'],
                          help='Switching delay in steps (0 runs the no-delay algorithm)')
    simulate.add_argument('--offline', choices=['greedy', 'lp', 'hybrid', 'oracle'], default='hybrid')
    simulate.add_argument('--epsilon', default=default_epsilon)
    simulate.add_argument('--seed', type=int, default=0)
    simulate.add_argument('--output', help='Run summary JSON file (default: stdout)')
    simulate.set_defaults(func=cmd_simulate)

    bench = verbs.add_parser('bench', parents=[common], help='Run a benchmark suite')
    bench.add_argument('--suite', required=True, help='Suite JSON file')
    bench.add_argument('--output', help='CSV file (default: stdout)')
    bench.add_argument('--summary', help='JSON summary file')
    bench.add_argument('--workers', type=int, help='Worker threads')
    bench.add_argument('--seed', type=int, help='Override the suite seed')
    bench.add_argument('--timings', action='store_true', help='Add the wall-time column')
    bench.add_argument('--db', help='SQLAlchemy URL to store the run in')
    bench.set_defaults(func=cmd_bench)

    gen = verbs.add_parser('gen', parents=[common], help='Generate an instance or trace')
    gen.add_argument('--kind', choices=['instance', 'trace', 'unit-trace', 'adversarial'], default='instance')
    gen.add_argument('--senders', type=int, default=2)
    gen.add_argument('--receivers', type=int, default=2)
    gen.add_argument('--max-demand', type=int, default=3)
    gen.add_argument('--max-edges', type=int, default=2)
    gen.add_argument('--delta', default='1')
    gen.add_argument('--window', default='4')
    gen.add_argument('--horizon', type=int, default=4)
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--index', type=int, default=0)
    gen.add_argument('--output', help='JSON file (default: stdout)')
    gen.set_defaults(func=cmd_gen)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    settings = get_logging_config()
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, settings['level']),
        format=settings['format'],
        stream=sys.stderr,
    )

    try:
        return args.func(args)
    except ParseError as e:
        logger.error(f"✗ {e}")
        return EXIT_PARSE
    except BudgetExceededError as e:
        logger.error(f"✗ {e}")
        return EXIT_BUDGET
    except (CircuitCoreError, ValueError) as e:
        logger.error(f"✗ {e}")
        return EXIT_INVARIANT


if __name__ == '__main__':
    sys.exit(main())
