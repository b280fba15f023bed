#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' End-to-end runs on a benchmark MDP and their dependence on N '''

from dataclasses import dataclass
import logging

import numpy as np
import pandas as pd

from ..data.montecarlo import mc_state_values
from ..data.rollout import rollout_transitions
from ..data.stats import stats
from ..relabel.blending import BlendingStrategy
from ..relabel.relabel import relabel
from ..solver.vilcb import VilcbConfig, vi_lcb_hubl
from .bound import evaluate_bounds

__regret_floor__ = 1e-12

logger = logging.getLogger(__name__)

RUN_COLUMNS = (
    'seed', 'N', 'alpha', 'strategy', 'total_gap', 'bias', 'regret',
    'bias_bound', 'regret_bound', 'residual')


def evaluate_run(mdp, behavior, n_tuples, alpha, strategy='constant',
                 seed=0, max_len=20, **solver_options):
    ''' Collect data, blend, solve, and measure one run

    The heuristic h is the self-bootstrapped first-visit Monte-Carlo value
    of the data. The constant design blends the raw tuples with
    Lambda = alpha on the empirical support and h; the sigmoid and rank
    designs solve the relabeled tuples instead. The decomposition and the
    bounds are evaluated with the constant factor alpha on the empirical
    support.

    Arguments:
      mdp (TabularMdp): The environment.
      behavior (Policy): The behaviour policy.
      n_tuples (int): The number of transitions collected.
      alpha (float): The blending scale.
      strategy (str): The blending design.
      seed (int): Seeds the rollouts and the solver.
      max_len (int): The rollout horizon.
      solver_options: Forwarded to VilcbConfig (e.g., l_coeff).

    Returns:
      A dict with the keys of RUN_COLUMNS.
    '''
    dataset = rollout_transitions(
        mdp, behavior, max_len, n_tuples, seed=seed)
    dims = (mdp.n_states, mdp.n_actions)
    data = stats(dataset, *dims)
    h = mc_state_values(dataset, mdp.discount, n_states=mdp.n_states)
    cfg = VilcbConfig.for_mdp(mdp, lambda_const=alpha, seed=seed,
                              **solver_options)
    if strategy == 'constant':
        result = vi_lcb_hubl(dataset.transitions(), dims, cfg, h, data)
    else:
        tuples = relabel(dataset, BlendingStrategy(strategy, alpha), h)
        result = vi_lcb_hubl(tuples, dims, cfg)

    report = evaluate_bounds(
        mdp, behavior, data.empirical_mu, alpha, data.support,
        result.policy, data.n_transitions, h=h)
    logger.debug('N=%d alpha=%g seed=%d gap=%.3e',
                 n_tuples, alpha, seed, report.total_gap)
    return {
        'seed': seed,
        'N': n_tuples,
        'alpha': alpha,
        'strategy': strategy,
        'total_gap': report.total_gap,
        'bias': report.measured_bias,
        'regret': report.measured_regret,
        'bias_bound': report.bias_bound,
        'regret_bound': report.regret_bound,
        'residual': report.residual,
    }


@dataclass(frozen=True)
class ScalingFit:
    ''' Median regret per N and the log-log slope

    Attributes:
      medians (Series): Median of the measured column indexed by N.
      slope (float): Least-squares slope of log(median) against log(N).
    '''
    medians: pd.Series
    slope: float

    @property
    def is_nonincreasing(self):
        return bool(np.all(np.diff(self.medians.to_numpy()) <= 0))


def regret_scaling(rows, column='total_gap', floor=__regret_floor__):
    ''' Fit the dependence of the median regret on the dataset size

    The suboptimality V*(d0) - V^pi(d0) is used by default, since the
    regret term of the decomposition turns negative (-Bias) once the
    learned policy is optimal. Medians are floored at `floor` before the
    logarithm.

    Arguments:
      rows (DataFrame or list of dict): Runs with the columns 'N' and
          `column`.

    Returns:
      A ScalingFit instance.
    '''
    table = pd.DataFrame(rows)
    if table.empty:
        raise ValueError('rows: no runs to fit')
    medians = table.groupby('N')[column].median().sort_index()
    if medians.size < 2:
        raise ValueError('N: at least two dataset sizes are required')
    x = np.log(medians.index.to_numpy(dtype=float))
    y = np.log(np.maximum(medians.to_numpy(dtype=float), floor))
    slope = float(np.polyfit(x, y, 1)[0])
    return ScalingFit(medians, slope)
