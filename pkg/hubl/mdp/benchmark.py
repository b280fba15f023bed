#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Benchmark MDPs and behaviour policies '''

import numpy as np

from .bellman import value_iteration
from .tabular import Policy, TabularMdp

__behaviors__ = ('expert', 'noisy', 'uniform')


def chain_mdp(n_states=5, success=0.9, stay_reward=0.1, goal_reward=1.0,
              gamma=0.9, initial_dist=None):
    ''' A chain where action 1 advances toward a rewarding end state

    Action 0 keeps the agent in place with a small reward. Action 1 moves to
    the next state with probability `success` (the last state loops on
    itself) and pays `goal_reward` only in the last state.

    Arguments:
      n_states (int): The number of states.
      success (float): The probability that the advance action succeeds.
      stay_reward (float): The reward of the stay action.
      goal_reward (float): The reward of advancing in the last state.
      gamma (float): The discount factor.
      initial_dist (ndarray, optional): Uniform if not given.

    Returns:
      A TabularMdp with two actions.
    '''
    transition = np.zeros((n_states, 2, n_states))
    reward = np.zeros((n_states, 2))
    for s in range(n_states):
        nxt = min(s + 1, n_states - 1)
        transition[s, 0, s] = 1.0
        transition[s, 1, nxt] += success
        transition[s, 1, s] += 1.0 - success
        reward[s, 0] = stay_reward
    reward[-1, 1] = goal_reward
    if initial_dist is None:
        initial_dist = np.full(n_states, 1.0 / n_states)
    return TabularMdp(transition, reward, gamma, np.asarray(initial_dist))


def benchmark_mdp():
    ''' The fixed 5-state benchmark

    The first state is rarely an initial state, so that small datasets often
    miss it and the learned policy falls back to the (bad) stay action there.
    '''
    d0 = np.array([0.005, 0.24875, 0.24875, 0.24875, 0.24875])
    return chain_mdp(n_states=5, initial_dist=d0)


def random_mdp(rng, n_states, n_actions, gamma=0.9, concentration=1.0,
               density=1.0):
    ''' Draw an MDP with Dirichlet transitions and uniform rewards

    Arguments:
      rng (Generator): A numpy random generator.
      n_states (int): The number of states.
      n_actions (int): The number of actions.
      gamma (float): The discount factor.
      concentration (float): The Dirichlet concentration of each row.
      density (float): The fraction of next states kept in each row. At
          least one next state survives in every row.

    Returns:
      A TabularMdp instance.
    '''
    alpha = np.full(n_states, concentration)
    transition = rng.dirichlet(alpha, size=(n_states, n_actions))
    if density < 1.0:
        keep = rng.random(transition.shape) < density
        keep[np.arange(n_states)[:, None], np.arange(n_actions),
             rng.integers(n_states, size=(n_states, n_actions))] = True
        transition = transition * keep
        transition /= transition.sum(axis=2, keepdims=True)
    reward = rng.uniform(0.0, 1.0, size=(n_states, n_actions))
    initial_dist = rng.dirichlet(np.ones(n_states))
    return TabularMdp(transition, reward, gamma, initial_dist)


def expert_policy(mdp):
    ''' The optimal deterministic policy of the MDP '''
    return value_iteration(mdp)[1]


def noisy_expert_policy(mdp, epsilon):
    ''' Expert action with probability 1 - epsilon, uniform otherwise '''
    if not 0.0 <= epsilon <= 1.0:
        raise ValueError(f'epsilon: should be in [0, 1] (got {epsilon})')
    expert = expert_policy(mdp).probs
    uniform = np.full_like(expert, 1.0 / mdp.n_actions)
    return Policy.stochastic((1.0 - epsilon) * expert + epsilon * uniform)


def behavior_policy(mdp, kind, epsilon=0.0):
    ''' Build a behaviour policy by name

    Arguments:
      mdp (TabularMdp): The MDP.
      kind (str): One of 'expert', 'noisy', or 'uniform'.
      epsilon (float): The noise level of the 'noisy' expert.

    Returns:
      A Policy instance.
    '''
    if kind == 'expert':
        return expert_policy(mdp)
    elif kind == 'noisy':
        return noisy_expert_policy(mdp, epsilon)
    elif kind == 'uniform':
        return Policy.uniform(mdp.n_states, mdp.n_actions)
    else:
        raise ValueError(f'behavior: unsupported kind "{kind}"')
