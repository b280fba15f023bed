#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import fixture
import numpy as np

from hubl.data.trajectory import Dataset, Trajectory
from hubl.mdp.tabular import ValueTable


@fixture
def unit_rewards():
    ''' Three unit rewards ending in a terminal state, gamma = 0.5 '''
    traj = Trajectory([0, 1, 2], [0, 0, 0], [1.0, 1.0, 1.0], 3, 'terminal')
    return Dataset((traj,), 0.5)


@fixture
def one_step_timeout():
    ''' A single step cut by the horizon; the final state is worth 2 '''
    traj = Trajectory([0], [0], [1.0], 1, 'timeout')
    return Dataset((traj,), 0.9), ValueTable(np.array([0.0, 2.0]))


def ranked_dataset(means):
    ''' One single-step terminal trajectory per requested h-bar '''
    trajectories = [
        Trajectory([0], [0], [m], 1, 'terminal') for m in means]
    return Dataset(tuple(trajectories), 0.9)
