#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Per-step heuristics of trajectories '''

from dataclasses import dataclass, replace
from typing import Optional
import logging

import numpy as np

from ..data.montecarlo import bootstrap_value, discounted_returns
from ..data.trajectory import Trajectory

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnnotatedTrajectory:
    ''' A trajectory carrying heuristics h_t and its blending factor

    Attributes:
      trajectory (Trajectory): The original rollout.
      heuristics (ndarray): h_1 ... h_T.
      bootstrap (float): The value credited after the last step
          (zero for terminal trajectories).
      bootstrap_missing (bool): True if a timed-out trajectory had no
          bootstrap value for its final state.
      blending (float, optional): The trajectory-level factor lambda(tau).
    '''
    trajectory: Trajectory
    heuristics: np.ndarray
    bootstrap: float = 0.0
    bootstrap_missing: bool = False
    blending: Optional[float] = None

    def __post_init__(self):
        assert self.heuristics.shape == self.trajectory.rewards.shape, \
            'one heuristic per step is required.'
        if not np.all(np.isfinite(self.heuristics)):
            raise ValueError('h: non-finite heuristics')
        if self.blending is not None and not 0.0 <= self.blending <= 1.0:
            raise ValueError(f'lambda: should be in [0, 1] ({self.blending})')

    def __len__(self):
        return len(self.trajectory)

    @property
    def mean_heuristic(self):
        ''' h-bar(tau), the average of the heuristics along the trajectory '''
        return float(self.heuristics.mean())

    @property
    def next_heuristics(self):
        ''' h' per step: h_{t+1}, and the bootstrap value after the last '''
        return np.append(self.heuristics[1:], self.bootstrap)

    def with_blending(self, blending):
        return replace(self, blending=float(blending))


def compute_heuristics(traj, gamma, timeout_values=None):
    ''' Monte-Carlo return-to-go heuristics of one trajectory

    For a timed-out trajectory the value of its final state is taken from
    `timeout_values` and discounted into every h_t. A missing value (or no
    `timeout_values` at all) counts as zero and sets `bootstrap_missing`.

    Arguments:
      traj (Trajectory): The rollout.
      gamma (float): The discount factor in [0, 1).
      timeout_values (ValueTable, optional): Bootstrap values.

    Returns:
      An AnnotatedTrajectory without a blending factor.
    '''
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f'gamma: should be in [0, 1) (got {gamma})')
    boot, missing = bootstrap_value(traj, timeout_values)
    if missing:
        logger.debug(
            'no bootstrap value for state %d; using 0', traj.final_state)
    return AnnotatedTrajectory(
        trajectory=traj,
        heuristics=discounted_returns(traj.rewards, gamma, boot),
        bootstrap=boot,
        bootstrap_missing=missing)
