#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Upper bounds on the bias and regret terms '''

from dataclasses import dataclass, asdict
import logging

import numpy as np

from ..mdp.bellman import discounted_occupancy, policy_evaluation
from ..mdp.bellman import value_iteration
from ..mdp.reshape import support_mask, support_states
from ..util import check_unit_interval
from .decomposition import __exact_tol__, decomposition_check

__hypothesis_atol__ = 1e-8

logger = logging.getLogger(__name__)


def concentrability(mdp, pi_star, mu_sa):
    ''' Single-policy concentrability max d^{pi*}(s, a) / mu(s, a)

    Arguments:
      mdp (TabularMdp): The MDP.
      pi_star (Policy): The comparator (optimal) policy.
      mu_sa (ndarray): The data distribution with the shape of (S, A).

    Returns:
      The coefficient; infinite if pi* visits a pair with mu = 0.
    '''
    occupancy = discounted_occupancy(mdp, pi_star)
    mu_sa = np.asarray(mu_sa, dtype=float)
    visited = occupancy > 0
    if np.any(visited & (mu_sa <= 0)):
        return float('inf')
    ratio = np.divide(
        occupancy, mu_sa, out=np.zeros_like(occupancy), where=visited)
    return float(ratio.max())


def mu_min(mu_sa, support):
    ''' The smallest data probability on the support '''
    mask = support_mask(support)
    if not np.any(mask):
        raise ValueError('support: empty')
    return float(np.asarray(mu_sa, dtype=float)[mask].min())


def bias_bound(mdp, lambda_const, mu, support, h=None, tol=__exact_tol__):
    ''' Upper bound on the bias when h = V^mu on the support

      gamma alpha / (1 - gamma)
        E_{d^{pi*}}[1{s, s' in support} (V*(s') - V^mu(s'))]

    Arguments:
      mdp (TabularMdp): The MDP.
      lambda_const (float): The constant blending factor alpha.
      mu (Policy): The behaviour policy.
      support: The state-action support of the data.
      h (ValueTable or ndarray, optional):
          When given, the hypothesis h = V^mu on the support is checked and
          ValueError is raised if it does not hold.

    Returns:
      The bound as a float.
    '''
    alpha = float(check_unit_interval(lambda_const, 'lambda'))
    states = support_states(support)
    v_mu = policy_evaluation(mdp, mu, tol).values
    if h is not None:
        h = np.asarray(getattr(h, 'values', h), dtype=float)
        gap = np.abs(h[states] - v_mu[states])
        if gap.size and not gap.max() <= __hypothesis_atol__:
            raise ValueError(
                'h: the bias bound requires h = V^mu on the support '
                f'(off by {gap.max():.3e})')
    _, pi_star, v_star = value_iteration(mdp, tol)
    occupancy = discounted_occupancy(mdp, pi_star)
    inside = np.outer(states, states).astype(float)
    gap = v_star.values - v_mu
    expected = np.einsum('sa,sat,st,t->', occupancy, mdp.transition, inside, gap)
    gamma = mdp.discount
    return gamma * alpha / (1.0 - gamma) * float(expected)


def regret_bound(n_tuples, gamma, lambda_const, n_states,
                 concentrability, mu_min, v_max):
    ''' High-probability bound on the regret of VI-LCB with blending

      min(V_max, sqrt(V_max^2 (1-gamma) |S| / (N (1 - gamma (1-lambda))^4))
                 * (sqrt(C) + gamma lambda / (1-gamma) sqrt(1 / mu_min)))

    Returns:
      The bound as a float. An infinite concentrability yields V_max.
    '''
    if n_tuples <= 0:
        raise ValueError('N: should be positive')
    if not 0.0 < gamma < 1.0:
        raise ValueError(f'gamma: should be in (0, 1) (got {gamma})')
    lam = float(check_unit_interval(lambda_const, 'lambda'))
    if not np.isfinite(concentrability):
        return float(v_max)
    effective = 1.0 - gamma * (1.0 - lam)
    scale = np.sqrt(
        v_max**2 * (1.0 - gamma) * n_states / (n_tuples * effective**4))
    penalty = 0.0
    if lam > 0:
        if not mu_min > 0:
            return float(v_max)
        penalty = gamma * lam / (1.0 - gamma) * np.sqrt(1.0 / mu_min)
    value = scale * (np.sqrt(concentrability) + penalty)
    return float(min(v_max, value))


def classical_regret_bound(n_tuples, gamma, n_states, concentrability, v_max):
    ''' The bound of VI-LCB without blending '''
    if not np.isfinite(concentrability):
        return float(v_max)
    value = np.sqrt(
        v_max**2 * n_states * concentrability
        / ((1.0 - gamma)**3 * n_tuples))
    return float(min(v_max, value))


@dataclass(frozen=True)
class BoundReport:
    ''' Measured terms next to their upper bounds

    Attributes:
      measured_bias / measured_regret: Exact terms of the decomposition.
      bias_bound / regret_bound: The corresponding bounds.
      classical_bound: The bound of VI-LCB without blending.
      concentrability / mu_min: The data-coverage constants.
      hypothesis_ok: False if h = V^mu does not hold on the support.
    '''
    total_gap: float
    measured_bias: float
    measured_regret: float
    residual: float
    bias_bound: float
    regret_bound: float
    classical_bound: float
    concentrability: float
    mu_min: float
    hypothesis_ok: bool

    @property
    def bias_within_bound(self):
        return self.measured_bias <= self.bias_bound + __hypothesis_atol__

    def to_dict(self):
        return asdict(self)


def evaluate_bounds(mdp, mu, mu_sa, lambda_const, support, pi, n_tuples,
                    h=None, tol=__exact_tol__):
    ''' Evaluate the exact decomposition and the bounds at once

    Arguments:
      mdp (TabularMdp): The MDP.
      mu (Policy): The behaviour policy.
      mu_sa (ndarray): The data distribution over (s, a).
      lambda_const (float): The constant blending factor.
      support: The state-action support.
      pi (Policy): The evaluated (learned) policy.
      n_tuples (int): The number of tuples in the dataset.
      h (ndarray, optional): The heuristic. Defaults to V^mu.

    Returns:
      A BoundReport instance.
    '''
    if h is None:
        h = policy_evaluation(mdp, mu, tol).values
    lam = float(lambda_const)
    lambda_state = np.full(mdp.n_states, lam)
    report = decomposition_check(mdp, h, lambda_state, support, pi, tol)

    hypothesis_ok = True
    try:
        bias_limit = bias_bound(mdp, lam, mu, support, h, tol)
    except ValueError as e:
        logger.debug(f'bias bound hypothesis violated: {e}')
        hypothesis_ok = False
        bias_limit = bias_bound(mdp, lam, mu, support, None, tol)

    pi_star = value_iteration(mdp, tol)[1]
    coeff = concentrability(mdp, pi_star, mu_sa)
    smallest = mu_min(mu_sa, support)
    return BoundReport(
        total_gap=report.total_gap,
        measured_bias=report.bias,
        measured_regret=report.regret,
        residual=report.residual,
        bias_bound=bias_limit,
        regret_bound=regret_bound(
            n_tuples, mdp.discount, lam, mdp.n_states,
            coeff, smallest, mdp.v_max),
        classical_bound=classical_regret_bound(
            n_tuples, mdp.discount, mdp.n_states, coeff, mdp.v_max),
        concentrability=coeff,
        mu_min=smallest,
        hypothesis_ok=hypothesis_ok)
