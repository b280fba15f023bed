#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Exact bias-regret decomposition of the performance gap '''

from dataclasses import dataclass, asdict

import numpy as np

from ..mdp.bellman import discounted_occupancy, policy_evaluation
from ..mdp.bellman import value_iteration
from ..mdp.reshape import reshape_mdp, reshaped_policy_evaluation

__exact_tol__ = 1e-12
__identity_atol__ = 1e-8


@dataclass(frozen=True)
class DecompositionReport:
    ''' V*(d0) - V^pi(d0) = Bias + Regret

    Attributes:
      total_gap (float): V*(d0) - V^pi(d0).
      bias (float): The bias term.
      regret (float): The regret term.
      residual (float): total_gap - bias - regret.
      lemma_residual (float): The residual of the identity
          V^pi(d0) - V~^pi(d0) = gamma/(1-gamma) E_{d^pi}[lambda (V~^pi - h)].
    '''
    total_gap: float
    bias: float
    regret: float
    residual: float
    lemma_residual: float

    @property
    def passed(self):
        return abs(self.residual) <= __identity_atol__ \
            and abs(self.lemma_residual) <= __identity_atol__

    def to_dict(self):
        return asdict(self)


def blended_correction(mdp, reshaped, policy, values_tilde, tol=__exact_tol__):
    ''' gamma/(1-gamma) E_{(s,a,s') ~ d^pi}[lambda(s,s') (V~(s') - h(s'))]

    The blending factor is extended by zero outside of the support, which
    turns the conditional expectation into an unconditional one.

    Arguments:
      mdp (TabularMdp): The original MDP.
      reshaped (ReshapedMdp): The reshaped MDP.
      policy (Policy): The policy generating the occupancy d^pi.
      values_tilde (ndarray): V~ evaluated on the reshaped MDP.

    Returns:
      The correction as a float.
    '''
    gamma = mdp.discount
    occupancy = discounted_occupancy(mdp, policy)
    gap = np.asarray(values_tilde) - reshaped.heuristic
    inner = np.einsum(
        'sat,st,t->sa', mdp.transition, reshaped.blending, gap)
    return gamma / (1.0 - gamma) * float(np.sum(occupancy * inner))


def _optimal_policy(mdp, tol):
    return value_iteration(mdp, tol)[1]


def bias_term(mdp, h, lambda_state, support, pi_star=None, tol=__exact_tol__):
    ''' Bias(pi, h, lambda), which depends only on the optimal policy

    Arguments:
      mdp (TabularMdp): The MDP.
      h (ValueTable or ndarray): The heuristic.
      lambda_state (ndarray): The blending factor per state.
      support: The state-action support.
      pi_star (Policy, optional): The optimal policy (solved if omitted).

    Returns:
      The bias as a float.
    '''
    if pi_star is None:
        pi_star = _optimal_policy(mdp, tol)
    reshaped = reshape_mdp(mdp, h, lambda_state, support)
    v_tilde = reshaped_policy_evaluation(reshaped, pi_star, tol).values
    return blended_correction(mdp, reshaped, pi_star, v_tilde, tol)


def regret_term(mdp, h, lambda_state, support, pi, pi_star=None,
                tol=__exact_tol__):
    ''' Regret(pi, h, lambda) measured in the reshaped MDP '''
    if pi_star is None:
        pi_star = _optimal_policy(mdp, tol)
    reshaped = reshape_mdp(mdp, h, lambda_state, support)
    d0 = mdp.initial_dist
    v_star = reshaped_policy_evaluation(reshaped, pi_star, tol).values
    v_pi = reshaped_policy_evaluation(reshaped, pi, tol).values
    correction = blended_correction(mdp, reshaped, pi, v_pi, tol)
    return float(d0 @ v_star - d0 @ v_pi) - correction


def decomposition_check(mdp, h, lambda_state, support, pi, tol=__exact_tol__):
    ''' Compute both sides of the decomposition with exact DP

    Returns:
      A DecompositionReport.
    '''
    pi_star = _optimal_policy(mdp, tol)
    d0 = mdp.initial_dist
    v_star = policy_evaluation(mdp, pi_star, tol).values
    v_pi = policy_evaluation(mdp, pi, tol).values
    total_gap = float(d0 @ v_star - d0 @ v_pi)

    bias = bias_term(mdp, h, lambda_state, support, pi_star, tol)
    regret = regret_term(mdp, h, lambda_state, support, pi, pi_star, tol)

    reshaped = reshape_mdp(mdp, h, lambda_state, support)
    v_tilde = reshaped_policy_evaluation(reshaped, pi, tol).values
    lemma_gap = float(d0 @ v_pi - d0 @ v_tilde)
    lemma = blended_correction(mdp, reshaped, pi, v_tilde, tol)

    return DecompositionReport(
        total_gap=total_gap,
        bias=bias,
        regret=regret,
        residual=total_gap - bias - regret,
        lemma_residual=lemma_gap - lemma)
