#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Exact dynamic-programming oracles on tabular MDPs

Every solver here works on a "discounted kernel" K[s, a, s'], i.e. the
transition probability already multiplied by the discount applied on that
transition. For an ordinary MDP K = gamma * P. The reshaped MDP uses
K = P * gamma~(s, s'), so the same compiled kernels serve both.
'''

from jax import jit
from jax.lax import scan, while_loop
import jax.numpy as jnp
import numpy as np
import scipy.linalg

from ..util import check_distribution, check_tolerance
from .tabular import Policy, QTable, ValueTable

__default_tol__ = 1e-10
__max_sweeps__ = 1_000_000


def _evaluation_sweeps(r_pi, m_pi, tol, max_iter):
    ''' Iterate v <- r_pi + m_pi @ v until the sup-norm step is below tol

    Arguments:
      r_pi: Expected one-step reward per state under the policy.
      m_pi: Discounted state-to-state kernel under the policy.
      tol: Stopping threshold on the sup-norm distance of iterates.
      max_iter: The maximum number of sweeps.

    Returns:
      A tuple of (values, last step size, number of sweeps).
    '''
    def cond(state):
        _, delta, n = state
        return (delta > tol) & (n < max_iter)

    def body(state):
        v, _, n = state
        w = r_pi + m_pi @ v
        return w, jnp.max(jnp.abs(w - v)), n + 1

    init = (jnp.zeros_like(r_pi), jnp.array(jnp.inf), jnp.array(0))
    return while_loop(cond, body, init)


def _optimality_sweeps(reward, kernel, tol, max_iter):
    ''' Iterate v <- max_a (reward + kernel @ v) until convergence '''
    def cond(state):
        _, delta, n = state
        return (delta > tol) & (n < max_iter)

    def body(state):
        v, _, n = state
        w = jnp.max(reward + kernel @ v, axis=1)
        return w, jnp.max(jnp.abs(w - v)), n + 1

    init = (jnp.zeros(reward.shape[0]), jnp.array(jnp.inf), jnp.array(0))
    return while_loop(cond, body, init)


evaluation_sweeps = jit(_evaluation_sweeps)

optimality_sweeps = jit(_optimality_sweeps)


def _iterate_distances(r_pi, m_pi, num):
    ''' Sup-norm distances of successive evaluation iterates from zero '''
    def step(v, _):
        w = r_pi + m_pi @ v
        return w, jnp.max(jnp.abs(w - v))

    _, distances = scan(step, jnp.zeros_like(r_pi), None, length=num)
    return distances


iterate_distances = jit(_iterate_distances, static_argnums=2)


def discounted_kernel(mdp):
    ''' gamma * P with the shape of (S, A, S) '''
    return mdp.discount * mdp.transition


def policy_kernel(kernel, reward, policy):
    ''' Marginalize the action under a policy

    Arguments:
      kernel (ndarray): A discounted kernel with the shape of (S, A, S).
      reward (ndarray): A reward matrix with the shape of (S, A).
      policy (Policy): A policy over the same state-action space.

    Returns:
      A tuple (r_pi, m_pi) of the expected reward and the discounted
      state-to-state kernel.
    '''
    assert policy.probs.shape == reward.shape, \
        'policy and reward should share the state-action shape.'
    r_pi = np.einsum('sa,sa->s', policy.probs, reward)
    m_pi = np.einsum('sa,sat->st', policy.probs, kernel)
    return r_pi, m_pi


def solve_evaluation(kernel, reward, policy, tol=__default_tol__):
    ''' Fixed point of the evaluation operator for an arbitrary kernel '''
    tol = check_tolerance(tol)
    r_pi, m_pi = policy_kernel(kernel, reward, policy)
    v, delta, n = evaluation_sweeps(
        jnp.array(r_pi), jnp.array(m_pi), tol, __max_sweeps__)
    if not float(delta) <= tol:
        raise RuntimeError(f'Iteration not converged ({float(delta)})')
    return ValueTable(np.asarray(v))


def solve_optimality(kernel, reward, tol=__default_tol__):
    ''' Fixed point of the optimality operator for an arbitrary kernel

    Returns:
      A tuple of (QTable, greedy Policy, ValueTable).
    '''
    tol = check_tolerance(tol)
    v, delta, n = optimality_sweeps(
        jnp.array(reward), jnp.array(kernel), tol, __max_sweeps__)
    if not float(delta) <= tol:
        raise RuntimeError(f'Iteration not converged ({float(delta)})')
    q = np.asarray(reward) + np.asarray(kernel) @ np.asarray(v)
    return QTable(q), greedy_policy(q), ValueTable(q.max(axis=1))


def greedy_policy(q, atol=1e-12):
    ''' Greedy deterministic policy, ties broken toward the lowest index

    Arguments:
      q (ndarray or QTable): Action values with the shape of (S, A).
      atol (float): Actions within `atol` of the maximum count as ties.

    Returns:
      A deterministic Policy.
    '''
    q = np.asarray(getattr(q, 'values', q))
    best = q.max(axis=1, keepdims=True)
    actions = np.argmax(q >= best - atol, axis=1)
    return Policy.deterministic(actions, q.shape[1])


def policy_evaluation(mdp, policy, tol=__default_tol__):
    ''' Evaluate a policy on an MDP

    Arguments:
      mdp (TabularMdp): The MDP.
      policy (Policy): The policy to be evaluated.
      tol (float): Bellman-residual tolerance in the sup norm.

    Returns:
      V^pi as a ValueTable.
    '''
    return solve_evaluation(discounted_kernel(mdp), mdp.reward, policy, tol)


def value_iteration(mdp, tol=__default_tol__):
    ''' Solve the MDP by synchronous value iteration

    Returns:
      A tuple of (Q*, greedy policy, V*).
    '''
    return solve_optimality(discounted_kernel(mdp), mdp.reward, tol)


def q_from_values(mdp, values):
    ''' One-step lookahead Q(s,a) = r(s,a) + gamma E[V(s')] '''
    v = np.asarray(getattr(values, 'values', values))
    return QTable(mdp.reward + discounted_kernel(mdp) @ v)


def bellman_residual(mdp, values, policy=None):
    ''' Sup norm of T V - V

    The evaluation operator of `policy` is used if given, and the optimality
    operator otherwise.
    '''
    v = np.asarray(getattr(values, 'values', values))
    q = q_from_values(mdp, v).values
    if policy is None:
        tv = q.max(axis=1)
    else:
        tv = np.einsum('sa,sa->s', policy.probs, q)
    return float(np.max(np.abs(tv - v)))


def state_visitation(kernel, policy, init_dist):
    ''' Un-normalized discounted visitation Σ_t (discounted) P_t(s, a)

    The discount is taken from the kernel, so a transition-dependent discount
    is supported. The resolvent is solved exactly.

    Arguments:
      kernel (ndarray): A discounted kernel with the shape of (S, A, S).
      policy (Policy): The policy.
      init_dist (ndarray): The initial state distribution.

    Returns:
      A matrix with the shape of (S, A).
    '''
    init_dist = check_distribution(init_dist, 'init_dist')
    m_pi = np.einsum('sa,sat->st', policy.probs, kernel)
    eye = np.eye(m_pi.shape[0])
    states = scipy.linalg.solve((eye - m_pi).T, init_dist)
    return states[:, None] * policy.probs


def discounted_occupancy(mdp, policy, init_dist=None):
    ''' Normalized discounted state-action occupancy

    d(s, a) = (1 - gamma) Σ_t gamma^t P_t(s, a), which has unit mass.

    Arguments:
      mdp (TabularMdp): The MDP.
      policy (Policy): The policy.
      init_dist (ndarray, optional): Defaults to the MDP's d0.

    Returns:
      The occupancy matrix with the shape of (S, A).
    '''
    if init_dist is None:
        init_dist = mdp.initial_dist
    visits = state_visitation(discounted_kernel(mdp), policy, init_dist)
    occupancy = (1.0 - mdp.discount) * visits
    occupancy = np.clip(occupancy, 0.0, None)
    assert abs(occupancy.sum() - 1.0) < 1e-9, \
        'occupancy should have unit mass.'
    return occupancy


def contraction_profile(mdp, policy, num=50):
    ''' Distances between successive evaluation iterates (for diagnostics) '''
    r_pi, m_pi = policy_kernel(discounted_kernel(mdp), mdp.reward, policy)
    return np.asarray(
        iterate_distances(jnp.array(r_pi), jnp.array(m_pi), num))


def average_occupancy(mdp, policy, horizon, init_dist=None):
    ''' Undiscounted average state-action marginal over `horizon` steps

    This is the population distribution of tuples collected by fixed-length
    rollouts without terminal states.
    '''
    if init_dist is None:
        init_dist = mdp.initial_dist
    p_pi = np.einsum('sa,sat->st', policy.probs, mdp.transition)
    states = np.asarray(init_dist, dtype=float)
    total = np.zeros_like(states)
    for _ in range(horizon):
        total += states
        states = states @ p_pi
    return (total / horizon)[:, None] * policy.probs
