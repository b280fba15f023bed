#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Trajectory-level blending factors '''

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

__strategies__ = ('constant', 'sigmoid', 'rank')


@dataclass(frozen=True)
class BlendingStrategy:
    ''' A blending-factor design

    Attributes:
      kind (str): One of 'constant', 'sigmoid', or 'rank'.
      alpha (float): The scale of the factor in [0, 1].
    '''
    kind: str = 'constant'
    alpha: float = 0.1

    def __post_init__(self):
        if self.kind not in __strategies__:
            raise ValueError(f'strategy: unsupported kind "{self.kind}"')
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f'alpha: should be in [0, 1] (got {self.alpha})')


def _mean_heuristic(traj):
    heuristics = getattr(traj, 'heuristics', None)
    if heuristics is None:
        raise ValueError('h: heuristics are required by this strategy')
    return float(np.mean(heuristics))


def blending_factor(strategy, population, traj):
    ''' Blending factor lambda(tau) of one trajectory

    Arguments:
      strategy (BlendingStrategy): The design.
      population (ndarray): h-bar of every trajectory of the dataset
          (used by the rank design; ignored otherwise).
      traj (AnnotatedTrajectory): The trajectory.

    Returns:
      lambda(tau) in [0, alpha].
    '''
    if strategy.kind == 'constant':
        return float(strategy.alpha)
    hbar = _mean_heuristic(traj)
    if strategy.kind == 'sigmoid':
        return float(strategy.alpha * expit(hbar))
    if population is None or len(population) == 0:
        raise ValueError('h: the rank design needs dataset-level heuristics')
    population = np.asarray(population, dtype=float)
    rank = np.count_nonzero(population <= hbar)
    return float(strategy.alpha * rank / population.size)


def blending_factors(strategy, trajectories):
    ''' Blending factors of every trajectory, in order

    The rank design compares the h-bar values with a non-strict inequality,
    so tied trajectories share a factor and the best receives alpha.
    '''
    if strategy.kind == 'constant':
        return np.full(len(trajectories), float(strategy.alpha))
    hbar = np.array([_mean_heuristic(t) for t in trajectories])
    if strategy.kind == 'sigmoid':
        return strategy.alpha * expit(hbar)
    ordered = np.sort(hbar)
    rank = np.searchsorted(ordered, hbar, side='right')
    return strategy.alpha * rank / hbar.size
