#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import fixture
import numpy as np

from hubl.data.trajectory import Dataset, Trajectory
from hubl.mdp.tabular import TabularMdp


@fixture
def terminal_traj():
    return Trajectory([0, 1, 2], [0, 0, 0], [1.0, 1.0, 1.0], 3, 'terminal')


@fixture
def dataset(terminal_traj):
    timeout = Trajectory([0, 2], [1, 0], [0.0, 0.5], 1, 'timeout')
    return Dataset((terminal_traj, timeout), 0.5, rng_seed=7)


@fixture
def ring():
    ''' Four states on a ring; action 1 advances with probability 0.7 '''
    transition = np.zeros((4, 2, 4))
    for s in range(4):
        transition[s, 0, s] = 1.0
        transition[s, 1, (s + 1) % 4] = 0.7
        transition[s, 1, s] = 0.3
    reward = np.tile([0.2, 0.6], (4, 1))
    return TabularMdp(transition, reward, 0.9, np.full(4, 0.25))
