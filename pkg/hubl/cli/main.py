#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Command-line driver: generate, relabel, solve, analyze, and sweep '''

from argparse import ArgumentParser as ap
import json
import logging
import os
import sys

import numpy as np
import pandas as pd

from ..analysis.bound import evaluate_bounds
from ..analysis.decomposition import __identity_atol__, decomposition_check
from ..analysis.instance import random_instance
from ..analysis.lemma import lemma_suite
from ..analysis.scaling import regret_scaling
from ..data.montecarlo import mc_state_values
from ..data.rollout import rollout
from ..data.stats import exact_support, stats
from ..data.trajectory import Dataset
from ..mdp.bellman import average_occupancy, policy_evaluation
from ..mdp.bellman import value_iteration
from ..relabel.blending import BlendingStrategy
from ..relabel.relabel import RelabeledTable, relabel, relabel_discount_only
from ..solver.vilcb import VilcbConfig, vi_lcb, vi_lcb_hubl
from ..util import eprint
from .config import load_config, write_manifest
from .sweep import run_sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_IO = 3
EXIT_ACCEPTANCE = 4


def _output(args, config, name):
    directory = args.output or config.output_dir()
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, name)


def _write_json(filename, document):
    with open(filename, 'w') as f:
        json.dump(document, f, indent=2, sort_keys=True)
        f.write('\n')


def cmd_generate(args, config):
    ''' Roll out the behaviour policy and store the trajectories '''
    config = config.override(
        n_traj=args.n_traj, max_len=args.max_len, seed=args.seed)
    config = config.override(
        'behavior', kind=args.behavior, epsilon=args.epsilon)
    mdp = config.build_mdp()
    behavior = config.behavior.build(mdp)
    dataset = rollout(
        mdp, behavior, config.max_len, config.n_traj,
        config.terminal_states, config.seed, workers=args.workers)
    data = stats(dataset, mdp.n_states, mdp.n_actions)

    filename = _output(args, config, 'dataset.jsonl')
    dataset.writeto(filename)
    write_manifest(
        filename, config, config.seed,
        n_traj=len(dataset), N=dataset.n_transitions,
        support_size=int(data.support.sum()))
    logger.info(f'{len(dataset)} trajectories '
                f'({dataset.n_transitions} steps) written to {filename}')
    return EXIT_OK


def _timeout_values(config, dataset, n_states):
    if config.relabel.bootstrap == 'mc':
        return mc_state_values(dataset, dataset.gamma, n_states=n_states)
    return None


def cmd_relabel(args, config):
    ''' Relabel a trajectory file into (s, a, s', r~, gamma~, done) tuples '''
    config = config.override(
        'relabel', strategy=args.strategy, alpha=args.alpha,
        bootstrap=args.bootstrap)
    if args.ablation:
        config = config.override('relabel', ablation=True)
    mdp = config.build_mdp()
    dataset = Dataset.from_jsonl(args.dataset, mdp.discount)
    strategy = BlendingStrategy(config.relabel.strategy, config.relabel.alpha)
    timeout_values = _timeout_values(config, dataset, mdp.n_states)
    if config.relabel.ablation:
        tuples = relabel_discount_only(dataset, strategy, timeout_values)
    else:
        tuples = relabel(dataset, strategy, timeout_values)

    filename = _output(args, config, f'tuples.{args.format}')
    tuples.writeto(filename)
    write_manifest(
        filename, config, config.seed,
        N=len(tuples), missing_bootstrap=tuples.missing_bootstrap)
    print(f'missing bootstrap values: {tuples.missing_bootstrap}')
    return EXIT_OK


def _load_tuples(filename, gamma):
    ''' Read either relabeled tuples or raw trajectories '''
    if filename.endswith('.csv'):
        return RelabeledTable.from_csv(filename)
    with open(filename, 'r') as f:
        first = next((line for line in f if line.strip()), '{}')
    try:
        keys = json.loads(first).keys()
    except (ValueError, AttributeError) as e:
        raise ValueError(f'{filename}:1: {e}') from e
    if 'r_tilde' in keys:
        return RelabeledTable.from_jsonl(filename)
    return Dataset.from_jsonl(filename, gamma)


def cmd_solve(args, config):
    ''' Run VI-LCB (with or without blending) and evaluate the policy '''
    config = config.override(
        'solver', alpha=args.alpha, seed=args.seed, v_max=args.v_max)
    if args.baseline:
        config = config.override('solver', baseline=True)
    mdp = config.build_mdp()
    dims = (mdp.n_states, mdp.n_actions)
    cfg = VilcbConfig.for_mdp(mdp, **config.solver.options())

    source = _load_tuples(args.tuples, mdp.discount)
    if isinstance(source, Dataset):
        tuples = source.transitions()
        data = stats(source, *dims)
        if config.solver.baseline:
            result = vi_lcb(tuples, dims, cfg, data)
        else:
            h = mc_state_values(source, mdp.discount, n_states=mdp.n_states)
            result = vi_lcb_hubl(tuples, dims, cfg, h, data)
    elif config.solver.baseline:
        raise ValueError(
            'baseline: relabeled tuples already carry their blending; '
            'pass the trajectory file instead')
    else:
        result = vi_lcb_hubl(source, dims, cfg)

    d0 = mdp.initial_dist
    v_star = float(d0 @ value_iteration(mdp)[2].values)
    v_pi = float(d0 @ policy_evaluation(mdp, result.policy).values)
    evaluation = {'V_pi': v_pi, 'V_star': v_star, 'gap': v_star - v_pi}

    filename = _output(args, config, 'policy.json')
    _write_json(filename, {
        **result.policy.to_dict(), 'evaluation': evaluation})
    write_manifest(filename, config, **result.manifest())
    print(f'V*(d0) = {v_star:.6f}, V^pi(d0) = {v_pi:.6f}, '
          f'gap = {v_star - v_pi:.6e}')
    return EXIT_OK


def cmd_analyze(args, config):
    ''' Check the decomposition, the lemmas, and the bounds '''
    config = config.override('analysis', instances=args.instances)
    rng = np.random.default_rng(config.analysis.seed)
    rows, failures = [], 0
    for index in range(config.analysis.instances):
        inst = random_instance(rng)
        report = decomposition_check(
            inst.mdp, inst.h, inst.lambda_state, inst.support, inst.pi)
        lam = float(rng.uniform())
        v_mu = policy_evaluation(inst.mdp, inst.mu).values
        lemmas = lemma_suite(inst.mdp, inst.mu, v_mu, lam, inst.support)
        row = {'instance': index, 'lambda': lam, **report.to_dict()}
        for result in lemmas:
            row[result.name] = result.max_violation
        rows.append(row)
        if not (report.passed and lemmas.passed):
            failures += 1
            logger.error(f'instance {index} failed: residual '
                         f'{report.residual:.3e}, lemmas {lemmas.to_dict()}')

    mdp = config.build_mdp()
    mu = config.behavior.build(mdp)
    support = exact_support(mdp, mu)
    mu_sa = average_occupancy(mdp, mu, config.max_len)
    bounds = evaluate_bounds(
        mdp, mu, mu_sa, config.relabel.alpha, support, mu,
        config.n_traj * config.max_len)
    if bounds.hypothesis_ok and not bounds.bias_within_bound:
        failures += 1
        logger.error(f'bias {bounds.measured_bias:.3e} exceeds '
                     f'the bound {bounds.bias_bound:.3e}')

    table = pd.DataFrame(rows)
    filename = _output(args, config, 'analysis.csv')
    table.to_csv(filename, index=False)
    summary = {
        'instances': len(rows),
        'failures': failures,
        'max_residual': float(table['residual'].abs().max()),
        'max_lemma_residual': float(table['lemma_residual'].abs().max()),
        'bounds': bounds.to_dict(),
    }
    report_file = _output(args, config, 'analysis.json')
    _write_json(report_file, summary)
    write_manifest(report_file, config, config.analysis.seed,
                   instances=len(rows), failures=failures)
    print(f'max |residual| = {summary["max_residual"]:.3e} '
          f'(tolerance {__identity_atol__:.0e}), failures = {failures}')
    return EXIT_ACCEPTANCE if failures else EXIT_OK


def cmd_sweep(args, config):
    ''' Evaluate the cross product of the sweep grid into a CSV '''
    config = config.override('sweep', workers=args.workers)
    filename = _output(args, config, 'sweep.csv')
    table = run_sweep(config, filename, progress=args.progress)
    write_manifest(filename, config, list(config.sweep.seeds),
                   rows=len(table))
    for (alpha, strategy), group in table.groupby(['alpha', 'strategy']):
        if group['N'].nunique() > 1:
            fit = regret_scaling(group)
            print(f'alpha={alpha} {strategy}: log-log slope {fit.slope:.3f}')
    return EXIT_OK


def build_parser():
    parser = ap(description='Heuristic blending on tabular offline RL')
    parser.add_argument(
        '-c', '--config', type=str,
        help='configuration file (JSON)')
    parser.add_argument(
        '-o', '--output', type=str,
        help='output directory (overrides HUBL_OUT)')
    parser.add_argument(
        '-v', '--verbose', action='store_true',
        help='enable verbose debug messages')
    commands = parser.add_subparsers(dest='command', required=True)

    generate = commands.add_parser('generate', help='collect trajectories')
    generate.add_argument(
        '-n', '--n-traj', type=int,
        help='number of trajectories')
    generate.add_argument(
        '-l', '--max-len', type=int,
        help='maximum length of a trajectory')
    generate.add_argument(
        '--seed', type=int,
        help='random seed of the rollouts')
    generate.add_argument(
        '-b', '--behavior', type=str, choices=('expert', 'noisy', 'uniform'),
        help='behaviour policy')
    generate.add_argument(
        '--epsilon', type=float,
        help='noise level of the noisy expert')
    generate.add_argument(
        '-w', '--workers', type=int, default=1,
        help='number of worker threads')
    generate.set_defaults(func=cmd_generate)

    relabel_ = commands.add_parser('relabel', help='relabel trajectories')
    relabel_.add_argument(
        'dataset', type=str,
        help='trajectory file (JSON Lines)')
    relabel_.add_argument(
        '-s', '--strategy', type=str, choices=('constant', 'sigmoid', 'rank'),
        help='blending-factor design')
    relabel_.add_argument(
        '-a', '--alpha', type=float,
        help='blending scale in [0, 1]')
    relabel_.add_argument(
        '--ablation', action='store_true',
        help='shrink the discount only (keep the rewards)')
    relabel_.add_argument(
        '--bootstrap', type=str, choices=('none', 'mc'),
        help='bootstrap of timed-out trajectories (default: mc)')
    relabel_.add_argument(
        '--format', type=str, choices=('jsonl', 'csv'), default='jsonl',
        help='output format')
    relabel_.set_defaults(func=cmd_relabel)

    solve = commands.add_parser('solve', help='run VI-LCB')
    solve.add_argument(
        'tuples', type=str,
        help='relabeled tuples or trajectory file')
    solve.add_argument(
        '-a', '--alpha', type=float,
        help='blending factor on the support')
    solve.add_argument(
        '--seed', type=int,
        help='random seed of the solver')
    solve.add_argument(
        '--v-max', type=float,
        help='upper bound of the value function')
    solve.add_argument(
        '--baseline', action='store_true',
        help='run VI-LCB without blending')
    solve.set_defaults(func=cmd_solve)

    analyze = commands.add_parser('analyze', help='check the decomposition')
    analyze.add_argument(
        '-n', '--instances', type=int,
        help='number of random instances')
    analyze.set_defaults(func=cmd_analyze)

    sweep = commands.add_parser('sweep', help='run a parameter sweep')
    sweep.add_argument(
        '-w', '--workers', type=int,
        help='number of worker threads')
    sweep.add_argument(
        '-P', '--progress', action='store_true',
        help='show progress bar')
    sweep.set_defaults(func=cmd_sweep)
    return parser


def setup_logging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root = logging.getLogger('hubl')
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.INFO)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)
    try:
        config = load_config(args.config)
        return args.func(args, config)
    except ValueError as e:
        eprint(f'error: {e}')
        return EXIT_CONFIG
    except OSError as e:
        eprint(f'error: {e}')
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
