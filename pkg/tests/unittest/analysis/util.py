#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import fixture
import numpy as np

from hubl.mdp.bellman import policy_evaluation, value_iteration
from hubl.mdp.benchmark import random_mdp
from hubl.mdp.tabular import Policy


@fixture
def random():
    return np.random.default_rng(seed=2024)


@fixture
def small(random):
    ''' A dense 4x2 MDP, its optimal policy, and a uniform behaviour '''
    mdp = random_mdp(random, 4, 2, gamma=0.8)
    pi_star = value_iteration(mdp, 1e-12)[1]
    mu = Policy.uniform(4, 2)
    return mdp, pi_star, mu


def full_support(mdp):
    return np.ones((mdp.n_states, mdp.n_actions), dtype=bool)


def behavior_values(mdp, mu):
    return policy_evaluation(mdp, mu, 1e-12).values
