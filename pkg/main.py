#!/usr/bin/env python3
"""
MLST Lab - Main runner script.

Generates adversarial and random minimum label spanning tree instances, runs
the evolutionary and greedy solvers on them, checks results against the
exact oracle, and runs seeded multi-trial experiments.

Exit codes: 0 on success, 1 on a domain or I/O error (or a failed
verification), 2 on a usage error or an invalid plan.
"""

import argparse
import logging
import os
import sys
from typing import Any, Dict, List, Optional

# Add src to path
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), 'src'))

from data.config_manager import ConfigManager
from evolutionary.gsemo import gsemo
from exceptions import ConfigError, MLSTError
from graph_core.instance_format import format_instance_text
from graph_core.label_subset import LabelSubset
from harness.budgets import BudgetSpec
from harness.plan import (
    ALGORITHMS,
    GSEMO,
    INIT_LOCAL_OPT,
    INIT_ONES,
    INIT_RANDOM,
    INIT_ZEROS,
    LS_2SWITCH,
    MVCA_CONTRACT,
    ONE_PLUS_ONE_EA,
    ExperimentPlan,
)
from harness.runner import ResolvedInstance, generate_instance, run_algorithm, run_experiment
from heuristics.spanning_tree import spanning_tree_of
from instances.bundle import FAMILIES
from instances.generators import check_g2_properties
from instances.instance_store import load_bundle, load_instance, save_bundle
from oracle.exact import COROLLARY_K_LIMIT, brute_force_opt, verify_component_halving, verify_corollary_1
from reporting.csv_exporter import CSVExporter
from reporting.report_generator import ReportGenerator
from tracking.results_tracker import RunStore

logger = logging.getLogger('mlst')

DEFAULT_CONFIG_PATH = os.path.join('config', 'config.json')

ALGORITHM_ALIASES = {
    'ea': ONE_PLUS_ONE_EA,
    '1+1-ea': ONE_PLUS_ONE_EA,
    'ls2': LS_2SWITCH,
    'mvca-c': MVCA_CONTRACT,
}

INIT_ALIASES = {
    'local': INIT_LOCAL_OPT,
    'zeros': INIT_ZEROS,
    'ones': INIT_ONES,
}

CHECKS = ('corollary1', 'halving', 'g2-local-opt', 'archive')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2


def _algorithm(name: str) -> str:
    algorithm = ALGORITHM_ALIASES.get(name, name)
    if algorithm not in ALGORITHMS:
        raise argparse.ArgumentTypeError(
            f"unknown algorithm {name!r} (choose from {', '.join(ALGORITHMS + tuple(ALGORITHM_ALIASES))})"
        )
    return algorithm


def _budget(raw: str):
    return int(raw) if raw.isdigit() else raw


class MLSTLab:
    """Command implementations; each is a thin wrapper over the library."""

    def __init__(self, config: Dict[str, Any]):
        self.config = config
        self.results_dir = config['output']['results_directory']
        self.reports_dir = config['output']['reports_directory']

    def cmd_generate(self, args: argparse.Namespace) -> int:
        params = {
            name: getattr(args, name)
            for name in ('a', 'k', 'b', 'n', 'm', 'seed')
            if getattr(args, name) is not None
        }
        bundle = generate_instance(args.family, params, self.config['instances']['random_retries'])
        g = bundle.graph
        if args.output:
            meta_path = save_bundle(bundle, args.output)
            print(f"Wrote {args.output} and {meta_path}")
        else:
            sys.stdout.write(format_instance_text(g))
        opt = bundle.opt_value
        print(f"n={g.node_count} k={g.label_count} m={g.edge_count} "
              f"OPT={opt if opt is not None else 'unknown'}")
        return EXIT_OK

    def cmd_solve(self, args: argparse.Namespace) -> int:
        bundle = load_bundle(args.instance)
        g = bundle.graph if bundle else load_instance(args.instance)
        plan = ExperimentPlan(
            algorithm=args.algorithm,
            instance=args.instance,
            budget=BudgetSpec.parse(args.budget or 1, self.config['solver']['budget_constant']),
            init=INIT_ALIASES.get(args.init, args.init),
            tie=args.tie,
            opt=args.opt,
            name='solve',
            accept_equal=args.accept_equal or self.config['solver']['ea_accept_equal'],
            check_archive=self.config['solver']['check_archive'],
            cache_size=self.config['solver']['evaluation_cache_size'],
        )
        opt = args.opt if args.opt is not None else (bundle.opt_value if bundle else None)
        resolved = ResolvedInstance(g, args.instance, bundle, opt)
        record = run_algorithm(plan, resolved, args.seed or 0)

        print(f"Algorithm: {record.algorithm}")
        print(f"Best solution: {record.best_solution.bits()} {record.best_solution}")
        print(f"Components: {record.best_fitness.components}")
        if record.feasible:
            print(f"Cardinality: {record.best_cardinality}")
            tree = spanning_tree_of(g, record.best_solution)
            print(f"Spanning tree edges: {' '.join(str(i) for i in tree.edges)}")
        else:
            print("Cardinality: infeasible")
        print(f"Iterations: {record.iterations_used} of {record.budget} ({record.terminated_by})")

        store = RunStore(args.results_dir or self.results_dir)
        run_id = store.save('solve', len(store.runs_for('solve')), record)
        print(f"Run record: {run_id}")
        return EXIT_OK

    def cmd_oracle(self, args: argparse.Namespace) -> int:
        g = load_instance(args.instance)
        result = brute_force_opt(g, args.k_limit or self.config['oracle']['k_limit'])
        print(f"OPT={result.opt_value}")
        print(f"Witness: {result.witness.bits()} {result.witness}")
        print(f"Subsets examined: {result.subsets_examined}")
        return EXIT_OK

    def cmd_verify(self, args: argparse.Namespace) -> int:
        if args.check == 'g2-local-opt':
            failures = check_g2_properties(load_instance(args.instance))
            for failure in failures:
                print(f"  {failure}")
            return self._verdict(not failures)

        if args.check == 'corollary1':
            g = load_instance(args.instance)
            result = verify_corollary_1(g, args.k_limit or COROLLARY_K_LIMIT)
            print(f"OPT={result.opt_value} b={result.b} bound={float(result.bound):g} "
                  f"solutions checked={result.solutions_checked}")
            if result.counterexample is not None:
                print(f"Counterexample: {result.counterexample.bits()} {result.counterexample}")
            return self._verdict(result.holds)

        if args.check == 'halving':
            g = load_instance(args.instance)
            x = LabelSubset.from_bits(args.solution) if args.solution else LabelSubset.zeros(g.label_count)
            result = verify_component_halving(g, x, args.k_limit or self.config['oracle']['k_limit'])
            print(f"OPT={result.opt_value} components={result.components} bound={result.bound}")
            if result.holds:
                print(f"Label {result.label} leaves {result.resulting_components} components")
            return self._verdict(result.holds)

        g = load_instance(args.instance)
        if args.seed is None or not args.budget:
            raise ConfigError("verify archive needs --budget and --seed")
        budget = BudgetSpec.parse(args.budget, self.config['solver']['budget_constant'])
        try:
            _, archive = gsemo(g, budget=budget.evaluate(g.node_count, g.label_count),
                               seed=args.seed, check_archive=True,
                               cache_size=self.config['solver']['evaluation_cache_size'])
        except AssertionError as e:
            print(f"  {e}")
            return self._verdict(False)
        print(f"Archive size: {len(archive)}")
        return self._verdict(True)

    def _verdict(self, holds: bool) -> int:
        print("PASS" if holds else "FAIL")
        return EXIT_OK if holds else EXIT_ERROR

    def cmd_experiment(self, args: argparse.Namespace) -> int:
        manager = ConfigManager()
        plan = manager.load_plan(args.plan, self.config)
        jobs = args.jobs or self.config['harness']['jobs']
        out_dir = args.output or self.reports_dir

        store = RunStore(os.path.join(out_dir, 'runs'))
        result = run_experiment(plan, jobs=jobs, retries=self.config['instances']['random_retries'],
                                store=store)

        exporter = CSVExporter(out_dir)
        csv_path = exporter.export_trials(result)
        json_path = exporter.export_json(result)
        reporter = ReportGenerator(out_dir)
        summary_path = reporter.generate_summary_report(result.stats)
        reporter.print_quick_summary(result.stats)

        print(f"\n✓ Trials CSV: {csv_path}")
        print(f"✓ Results JSON: {json_path}")
        print(f"✓ Summary: {summary_path}")
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Minimum label spanning tree solvers, instances and experiments'
    )
    parser.add_argument('--config', default=DEFAULT_CONFIG_PATH,
                        help='Path to configuration file (default: config/config.json)')
    parser.add_argument('-v', '--verbose', action='store_true', help='Log progress at INFO level')
    subparsers = parser.add_subparsers(dest='command', required=True)

    generate = subparsers.add_parser('generate', help='Generate an instance')
    generate.add_argument('family', choices=FAMILIES)
    generate.add_argument('--a', type=int, help="Optimum size for g-prime")
    generate.add_argument('--k', type=int, help='Number of labels')
    generate.add_argument('--b', type=int, help='Maximum label frequency')
    generate.add_argument('--n', type=int, help='Number of nodes (random-b)')
    generate.add_argument('--m', type=int, help='Number of edges (random-b)')
    generate.add_argument('--seed', type=int, help='Seed (random-b)')
    generate.add_argument('-o', '--output', help='Instance file to write; prints the instance when omitted')

    solve = subparsers.add_parser('solve', help='Run one algorithm on an instance')
    solve.add_argument('algorithm', type=_algorithm)
    solve.add_argument('instance')
    solve.add_argument('--budget', type=_budget, help='Iterations, or a budget formula such as k2_ln_k')
    solve.add_argument('--seed', type=int, help='Seed for randomized algorithms and random ties')
    solve.add_argument('--init', default=INIT_RANDOM,
                       choices=[INIT_RANDOM, INIT_LOCAL_OPT, INIT_ZEROS, INIT_ONES] + list(INIT_ALIASES))
    solve.add_argument('--tie', default='lowest', choices=['lowest', 'highest', 'random'])
    solve.add_argument('--opt', type=int, help='Known optimum for ratio events')
    solve.add_argument('--accept-equal', action='store_true', help='(1+1) EA accepts equal fitness')
    solve.add_argument('--results-dir', help='Where to store the run record')

    oracle = subparsers.add_parser('oracle', help='Compute OPT by exhaustive search')
    oracle.add_argument('instance')
    oracle.add_argument('--k-limit', type=int)

    verify = subparsers.add_parser('verify', help='Run an exhaustive structural check')
    verify.add_argument('check', choices=CHECKS)
    verify.add_argument('instance')
    verify.add_argument('--solution', help='0/1 string for the halving check (default all zeros)')
    verify.add_argument('--k-limit', type=int)
    verify.add_argument('--budget', type=_budget, help='GSEMO iterations for the archive check')
    verify.add_argument('--seed', type=int, help='GSEMO seed for the archive check')

    experiment = subparsers.add_parser('experiment', help='Run an experiment plan')
    experiment.add_argument('plan')
    experiment.add_argument('-o', '--output', help='Output directory (default: reports directory)')
    experiment.add_argument('--jobs', type=int, help='Worker processes')

    return parser


def _check_usage(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.command == 'solve':
        randomized = args.algorithm in (ONE_PLUS_ONE_EA, GSEMO) or args.tie == 'random'
        if randomized and args.seed is None:
            parser.error(f"solve {args.algorithm} needs an explicit --seed")
        if args.algorithm in (ONE_PLUS_ONE_EA, GSEMO) and args.budget is None:
            parser.error(f"solve {args.algorithm} needs --budget")
    if args.command == 'experiment' and args.jobs is not None and args.jobs < 1:
        parser.error("--jobs must be >= 1")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _check_usage(parser, args)

    try:
        config = ConfigManager().load_config(args.config)
    except (ConfigError, ValueError) as e:
        print(f"Error: invalid configuration {args.config}: {e}", file=sys.stderr)
        return EXIT_USAGE

    level = 'INFO' if args.verbose else config['logging']['level']
    logging.basicConfig(level=getattr(logging, level), format='%(levelname)s %(name)s: %(message)s')

    lab = MLSTLab(config)
    command = getattr(lab, f"cmd_{args.command}")
    try:
        return command(args)
    except ConfigError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (MLSTError, OSError) as e:
        print(f"Error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
