#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Random problem instances for the identity and lemma checks '''

from dataclasses import dataclass

import numpy as np

from ..data.stats import exact_support
from ..mdp.benchmark import random_mdp
from ..mdp.reshape import support_states
from ..mdp.tabular import Policy, TabularMdp, ValueTable


@dataclass(frozen=True)
class RandomInstance:
    ''' A random (MDP, mu, pi, h, lambda, support) tuple

    Attributes:
      mdp (TabularMdp): The MDP with rewards in [0, 1].
      mu (Policy): A stochastic behaviour policy.
      pi (Policy): A stochastic policy to be evaluated.
      h (ValueTable): A heuristic in [0, V_max] on the supported states.
      lambda_state (ndarray): Blending factors in [0, 1] per state.
      support (ndarray): The exact state-action support of mu.
    '''
    mdp: TabularMdp
    mu: Policy
    pi: Policy
    h: ValueTable
    lambda_state: np.ndarray
    support: np.ndarray

    @property
    def states(self):
        return support_states(self.support)


def _sparse_distribution(rng, size, density):
    keep = rng.random(size) < density
    keep[rng.integers(size)] = True
    weights = rng.dirichlet(np.ones(size)) * keep
    return weights / weights.sum()


def random_policy(rng, n_states, n_actions, density=1.0):
    ''' A stochastic policy whose rows keep a random subset of actions '''
    probs = np.stack([
        _sparse_distribution(rng, n_actions, density)
        for _ in range(n_states)])
    return Policy.stochastic(probs)


def random_instance(rng, max_states=10, max_actions=4, gamma_range=(0.5, 0.9),
                    density=0.5):
    ''' Draw a random instance

    Arguments:
      rng (Generator): A numpy random generator.
      max_states (int): The largest number of states (at least two).
      max_actions (int): The largest number of actions.
      gamma_range (tuple): The range of the discount factor.
      density (float): Sparsity of transitions, d0 and mu. A smaller value
          makes a partial support more likely.

    Returns:
      A RandomInstance.
    '''
    n_states = int(rng.integers(2, max_states + 1))
    n_actions = int(rng.integers(1, max_actions + 1))
    gamma = float(rng.uniform(*gamma_range))
    mdp = random_mdp(rng, n_states, n_actions, gamma, density=density)
    mdp = mdp.replace(
        initial_dist=_sparse_distribution(rng, n_states, density))
    mu = random_policy(rng, n_states, n_actions, density)
    pi = random_policy(rng, n_states, n_actions)
    support = exact_support(mdp, mu)
    states = support_states(support)
    h = ValueTable(rng.uniform(0.0, mdp.v_max, size=n_states), states)
    lambda_state = rng.uniform(0.0, 1.0, size=n_states)
    return RandomInstance(mdp, mu, pi, h, lambda_state, support)
