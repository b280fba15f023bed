#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Definition of the heuristic-blended (reshaped) MDP '''

from dataclasses import dataclass

import numpy as np

from ..util import check_unit_interval
from .bellman import __default_tol__
from .bellman import solve_evaluation, solve_optimality, state_visitation
from .tabular import TabularMdp, ValueTable


def support_mask(support):
    ''' Return the (S, A) boolean support matrix of `support`

    Arguments:
      support: A boolean ndarray or any object with a `support` attribute
          (e.g., DataStats).
    '''
    return np.asarray(getattr(support, 'support', support), dtype=bool)


def support_states(support):
    ''' The state projection of a state-action support '''
    return support_mask(support).any(axis=1)


def extend_heuristic(h, states):
    ''' Extend h to every state: the given value on `states`, else zero

    Arguments:
      h (ValueTable or ndarray): Heuristic values.
      states (ndarray): Boolean mask of the states in the support.

    Returns:
      An ndarray of heuristic values over all states.
    '''
    if isinstance(h, ValueTable):
        missing = states & ~h.defined
        if np.any(missing):
            raise ValueError(
                'h: absent on supported states '
                f'{np.flatnonzero(missing).tolist()}')
        values = h.filled(0.0)
    else:
        values = np.asarray(h, dtype=float)
    if values.shape != states.shape:
        raise ValueError(f'h: expected {states.size} entries')
    if not np.all(np.isfinite(values[states])):
        raise ValueError('h: non-finite entries on the support')
    return np.where(states, values, 0.0)


def extend_blending(lambda_state, states):
    ''' Build lambda(s, s') = lambda(s') if s, s' are both supported, else 0 '''
    lambda_state = check_unit_interval(lambda_state, 'lambda')
    if lambda_state.shape != states.shape:
        raise ValueError(f'lambda: expected {states.size} entries')
    inside = np.outer(states, states)
    return np.where(inside, lambda_state[None, :], 0.0)


@dataclass(frozen=True)
class ReshapedMdp:
    ''' An MDP with blended reward and transition-dependent discount

    Attributes:
      base (TabularMdp):
          The original MDP.
      reshaped_reward (ndarray):
          r~(s, a) = r(s, a) + gamma E_{s'}[lambda(s, s') h(s')].
      discount_matrix (ndarray):
          gamma~(s, s') = gamma (1 - lambda(s, s')).
      blending (ndarray):
          The extended blending factor lambda(s, s').
      heuristic (ndarray):
          The extended heuristic h(s).
    '''
    base: TabularMdp
    reshaped_reward: np.ndarray
    discount_matrix: np.ndarray
    blending: np.ndarray
    heuristic: np.ndarray

    def __post_init__(self):
        gamma = self.base.discount
        assert np.all(self.discount_matrix >= 0.0) \
            and np.all(self.discount_matrix <= gamma), \
            'reshaped discounts should lie in [0, gamma].'
        assert np.all(np.isfinite(self.reshaped_reward)), \
            'reshaped reward should be finite.'

    @property
    def kernel(self):
        ''' P(s'|s,a) gamma~(s, s') with the shape of (S, A, S) '''
        return self.base.transition * self.discount_matrix[:, None, :]


def reshape_mdp(mdp, h, lambda_state, support):
    ''' Build the reshaped MDP induced by heuristic blending

    Arguments:
      mdp (TabularMdp): The original MDP.
      h (ValueTable or ndarray): The heuristic on the supported states.
      lambda_state (ndarray): Blending factor per state in [0, 1].
      support: The state-action support (boolean (S, A) or DataStats).

    Returns:
      A ReshapedMdp instance.
    '''
    states = support_states(support)
    blending = extend_blending(lambda_state, states)
    heuristic = extend_heuristic(h, states)
    gamma = mdp.discount
    bonus = np.einsum('sat,st,t->sa', mdp.transition, blending, heuristic)
    return ReshapedMdp(
        base=mdp,
        reshaped_reward=mdp.reward + gamma * bonus,
        discount_matrix=gamma * (1.0 - blending),
        blending=blending,
        heuristic=heuristic)


def discount_only_mdp(mdp, h, lambda_state, support):
    ''' Reshaped MDP that only shrinks the discount (r~ = r) '''
    reshaped = reshape_mdp(mdp, h, lambda_state, support)
    return ReshapedMdp(
        base=mdp,
        reshaped_reward=mdp.reward.copy(),
        discount_matrix=reshaped.discount_matrix,
        blending=reshaped.blending,
        heuristic=reshaped.heuristic)


def reshaped_policy_evaluation(reshaped, policy, tol=__default_tol__):
    ''' Evaluate a policy on the reshaped MDP

    Returns:
      V~^pi as a ValueTable.
    '''
    return solve_evaluation(
        reshaped.kernel, reshaped.reshaped_reward, policy, tol)


def reshaped_value_iteration(reshaped, tol=__default_tol__):
    ''' Optimal (Q~, policy, V~) of the reshaped MDP '''
    return solve_optimality(reshaped.kernel, reshaped.reshaped_reward, tol)


def reshaped_visitation(reshaped, policy, init_dist=None):
    ''' Un-normalized visitation Σ_t Π gamma~ P_t of the reshaped dynamics '''
    if init_dist is None:
        init_dist = reshaped.base.initial_dist
    return state_visitation(reshaped.kernel, policy, init_dist)
