#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Relabel rewards and discounts of offline data with heuristics '''

from dataclasses import dataclass
import logging

import numpy as np
import pandas as pd

from ..data.container import TableContainer
from .blending import blending_factors
from .heuristic import compute_heuristics

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RelabeledTuple:
    ''' A transition with relabeled reward and discount '''
    state: int
    action: int
    next_state: int
    r_tilde: float
    gamma_tilde: float
    done: bool


@dataclass(frozen=True)
class RelabeledTable(TableContainer):
    ''' Relabeled transition tuples

    Attributes:
      table (DataFrame): Columns s, a, s_next, r_tilde, gamma_tilde, done.
      missing_bootstrap (int): The number of timed-out trajectories without
          a bootstrap value.
    '''
    missing_bootstrap: int = 0

    __columns__ = {
        's': 'int64',
        'a': 'int64',
        's_next': 'int64',
        'r_tilde': 'float64',
        'gamma_tilde': 'float64',
        'done': 'bool',
    }

    def __iter__(self):
        for row in self.table.itertuples(index=False):
            yield RelabeledTuple(
                int(row.s), int(row.a), int(row.s_next),
                float(row.r_tilde), float(row.gamma_tilde), bool(row.done))


def annotate(dataset, strategy, timeout_values=None):
    ''' Steps 1 and 2: heuristics and blending factors per trajectory '''
    annotated = [
        compute_heuristics(traj, dataset.gamma, timeout_values)
        for traj in dataset]
    factors = blending_factors(strategy, annotated)
    return [a.with_blending(f) for a, f in zip(annotated, factors)]


def _relabel(dataset, strategy, timeout_values, shape_reward):
    gamma = dataset.gamma
    columns = {k: [] for k in RelabeledTable.__columns__}
    missing = 0
    for traj in annotate(dataset, strategy, timeout_values):
        base = traj.trajectory
        lam = traj.blending
        done = np.zeros(len(base), dtype=bool)
        done[-1] = base.is_terminal
        if shape_reward:
            r_tilde = base.rewards + gamma * lam * traj.next_heuristics
        else:
            r_tilde = base.rewards.copy()
        gamma_tilde = np.where(done, 0.0, gamma * (1.0 - lam))
        columns['s'].append(base.states)
        columns['a'].append(base.actions)
        columns['s_next'].append(base.next_states)
        columns['r_tilde'].append(r_tilde)
        columns['gamma_tilde'].append(gamma_tilde)
        columns['done'].append(done)
        missing += traj.bootstrap_missing
    if missing:
        logger.warning(
            '%d timed-out trajectories were bootstrapped with 0', missing)
    table = pd.DataFrame({k: np.concatenate(v) for k, v in columns.items()})
    return RelabeledTable(table, missing_bootstrap=missing)


def relabel(dataset, strategy, timeout_values=None):
    ''' Relabel every tuple with r~ = r + gamma lambda' h' and
    gamma~ = gamma (1 - lambda')

    The last tuple of a terminal trajectory has h' = 0 and is flagged as
    done (gamma~ = 0). The last tuple of a timed-out trajectory uses the
    bootstrap value of its final state as h'.

    Arguments:
      dataset (Dataset): The offline dataset.
      strategy (BlendingStrategy): The blending-factor design.
      timeout_values (ValueTable, optional): Bootstrap values of the final
          states of timed-out trajectories.

    Returns:
      A RelabeledTable ordered by trajectory, then by step.
    '''
    return _relabel(dataset, strategy, timeout_values, shape_reward=True)


def relabel_discount_only(dataset, strategy, timeout_values=None):
    ''' Shrink the discount as `relabel` does, but keep r~ = r '''
    return _relabel(dataset, strategy, timeout_values, shape_reward=False)
