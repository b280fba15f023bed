#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Monte-Carlo returns and state-value estimates from trajectories '''

import logging

import jax.numpy as jnp
import numpy as np
from scipy.signal import lfilter

from ..mdp.bellman import __default_tol__, __max_sweeps__, evaluation_sweeps
from ..mdp.tabular import ValueTable
from ..util import check_tolerance

logger = logging.getLogger(__name__)


def discounted_returns(rewards, gamma, bootstrap=0.0):
    ''' Discounted return-to-go computed in one backward pass

    The recursion h_t = r_t + gamma h_{t+1} runs backward from
    h_{T+1} = bootstrap, so that h_T = r_T + gamma * bootstrap.

    Arguments:
      rewards (ndarray): Rewards r_1 ... r_T.
      gamma (float): The discount factor.
      bootstrap (float): The value credited after the last step.

    Returns:
      An ndarray of h_1 ... h_T.
    '''
    rewards = np.asarray(rewards, dtype=float)
    returns, _ = lfilter(
        [1.0], [1.0, -gamma], rewards[::-1], zi=[gamma * bootstrap])
    return returns[::-1]

def bootstrap_value(traj, timeout_values):
    ''' The value credited after the last step of a trajectory

    Returns:
      A tuple (value, missing). `missing` is True when the trajectory timed
      out and `timeout_values` is absent or has no entry for its final
      state; the value is zero then.
    '''
    if traj.is_terminal:
        return 0.0, False
    value = None
    if timeout_values is not None:
        value = timeout_values.get(traj.final_state)
    if value is None:
        return 0.0, True
    return value, False


def _first_visit_sums(dataset, gamma, n_states):
    ''' Sums of first-visit returns and of the discounts left at the cut

    Returns:
      A tuple (total, visits, tails). `tails[s, f]` accumulates
      gamma^(T - t + 1) over the timed-out trajectories first visiting `s`
      at step t and cut at the final state `f`.
    '''
    total = np.zeros(n_states)
    visits = np.zeros(n_states, dtype=int)
    tails = np.zeros((n_states, n_states))
    for traj in dataset:
        returns = discounted_returns(traj.rewards, gamma)
        states, first = np.unique(traj.states, return_index=True)
        total[states] += returns[first]
        visits[states] += 1
        if not traj.is_terminal:
            tails[states, traj.final_state] += gamma ** (len(traj) - first)
    return total, visits, tails


def _self_bootstrap(returns, tails, tol):
    ''' Solve v = returns + tails @ v by successive substitution '''
    v, delta, n = evaluation_sweeps(
        jnp.array(returns), jnp.array(tails), tol, __max_sweeps__)
    if not float(delta) <= tol:
        raise RuntimeError(f'Iteration not converged ({float(delta)})')
    logger.debug('timeout bootstrap converged after %d sweeps', int(n))
    return np.asarray(v)


def mc_state_values(dataset, gamma, timeout_values=None, n_states=None,
                    tol=__default_tol__):
    ''' First-visit Monte-Carlo estimate of the behaviour value function

    A timed-out return is credited with gamma^(T - t + 1) times the value of
    the state at the cut. Without `timeout_values`, the estimates bootstrap
    themselves: first-visit MC is repeated with its own values at the cut
    until the sup-norm change falls below `tol`. A cut at a state with no
    value counts as zero and is reported.

    Arguments:
      dataset (Dataset): The offline dataset.
      gamma (float): The discount factor in [0, 1).
      timeout_values (ValueTable, optional):
          Fixed values used to bootstrap timed-out trajectories.
      n_states (int, optional): Inferred from the data if omitted.
      tol (float): Convergence threshold of the self-bootstrap.

    Returns:
      A partial ValueTable; states never visited are absent.
    '''
    if not 0.0 <= gamma < 1.0:
        raise ValueError(f'gamma: should be in [0, 1) (got {gamma})')
    tol = check_tolerance(tol)
    if n_states is None:
        n_states = 1 + max(
            max(int(t.states.max()), t.final_state) for t in dataset)
    total, visits, tails = _first_visit_sums(dataset, gamma, n_states)
    visited = visits > 0
    denom = np.maximum(visits, 1)

    if timeout_values is None:
        known = visited
    else:
        if timeout_values.values.shape != (n_states,):
            raise ValueError(f'timeout_values: expected {n_states} entries')
        known = timeout_values.defined
    missing = sum(
        1 for t in dataset if not t.is_terminal and not known[t.final_state])
    if missing:
        logger.warning(
            '%d timed-out trajectories had no bootstrap value', missing)

    tails = tails * known[None, :] / denom[:, None]
    if timeout_values is None:
        values = _self_bootstrap(total / denom, tails, tol)
    else:
        values = total / denom + tails @ timeout_values.filled(0.0)
    return ValueTable(np.where(visited, values, 0.0), visited)
