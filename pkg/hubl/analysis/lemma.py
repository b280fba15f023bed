#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Numerical checks of the supporting lemmas on a given instance

Each check first verifies its own hypotheses. A check whose hypotheses do
not hold is reported as such instead of being counted as a pass.
'''

from dataclasses import dataclass, asdict

import numpy as np

from ..mdp.bellman import discounted_kernel, policy_evaluation
from ..mdp.bellman import q_from_values
from ..mdp.bellman import state_visitation, value_iteration
from ..mdp.reshape import discount_only_mdp, reshape_mdp
from ..mdp.reshape import reshaped_policy_evaluation
from ..mdp.reshape import reshaped_visitation, support_mask, support_states
from .decomposition import __exact_tol__

__lemma_atol__ = 1e-8
__occupancy_atol__ = 1e-9


@dataclass(frozen=True)
class LemmaResult:
    ''' The outcome of a single lemma check

    Attributes:
      name (str): The name of the check.
      hypothesis_ok (bool): Whether the hypotheses hold on the instance.
      max_violation (float): The largest violation (<= 0 means none).
      note (str): Why the hypotheses fail, if they do.
    '''
    name: str
    hypothesis_ok: bool
    max_violation: float
    note: str = ''
    tolerance: float = __lemma_atol__

    @property
    def passed(self):
        return self.hypothesis_ok and self.max_violation <= self.tolerance


@dataclass(frozen=True)
class LemmaReport:
    results: tuple

    def __iter__(self):
        return iter(self.results)

    def __getitem__(self, name):
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)

    @property
    def max_violation(self):
        return max((r.max_violation for r in self.results if r.hypothesis_ok),
                   default=float('nan'))

    @property
    def hypothesis_failures(self):
        return [r.name for r in self.results if not r.hypothesis_ok]

    @property
    def passed(self):
        return all(r.passed for r in self.results if r.hypothesis_ok)

    def to_dict(self):
        return {r.name: asdict(r) for r in self.results}


def _closed_under(mdp, policy, states):
    ''' True if `policy` never leaves `states` once inside '''
    step = np.einsum('sa,sat->st', policy.probs, mdp.transition) > 0
    return not np.any(step[states][:, ~states])


def value_identity(mdp, mu, h, lambda_const, support, tol=__exact_tol__):
    ''' V~^mu = V^mu on the support when h = V^mu there '''
    states = support_states(support)
    v_mu = policy_evaluation(mdp, mu, tol).values
    h = np.asarray(getattr(h, 'values', h), dtype=float)
    gap = np.abs(h[states] - v_mu[states])
    notes = []
    if gap.size and not gap.max() <= __lemma_atol__:
        notes.append('h differs from V^mu on the support')
    if not _closed_under(mdp, mu, states):
        notes.append('mu leaves the support')
    if notes:
        return LemmaResult('value_identity', False, float('nan'),
                           '; '.join(notes))
    lambda_state = np.full(mdp.n_states, float(lambda_const))
    reshaped = reshape_mdp(mdp, np.where(states, h, 0.0),
                           lambda_state, support)
    v_tilde = reshaped_policy_evaluation(reshaped, mu, tol).values
    violation = np.abs(v_tilde - v_mu)[states].max(initial=0.0)
    return LemmaResult('value_identity', True, float(violation))


def pessimism(mdp, h, lambda_const, support, tol=__exact_tol__):
    ''' h <= V* everywhere implies V~^{pi*} <= V* '''
    states = support_states(support)
    _, pi_star, v_star = value_iteration(mdp, tol)
    h = np.asarray(getattr(h, 'values', h), dtype=float)
    extended = np.where(states, h, 0.0)
    excess = extended - v_star.values
    if np.any(excess > __lemma_atol__):
        return LemmaResult('pessimism', False, float('nan'),
                           'h exceeds V* on some state')
    lambda_state = np.full(mdp.n_states, float(lambda_const))
    reshaped = reshape_mdp(mdp, extended, lambda_state, support)
    v_tilde = reshaped_policy_evaluation(reshaped, pi_star, tol).values
    return LemmaResult(
        'pessimism', True, float(np.max(v_tilde - v_star.values)))


def occupancy_bound(mdp, policy, h, lambda_const, support):
    ''' d~^pi <= (1-gamma)/(1-gamma(1-lambda)) d^pi on the support

    Both measures are scaled as occupancies of their own discount, i.e.
    d = Σ_t gamma^t P_t / (1 - gamma) and
    d~ = Σ_t (gamma(1-lambda))^t P_t / (1 - gamma(1-lambda)).
    '''
    states = support_states(support)
    mask = support_mask(support)
    notes = []
    if np.any((mdp.initial_dist > 0) & ~states):
        notes.append('d0 is not contained in the support')
    if np.any((policy.probs > 0) & ~mask & states[:, None]):
        notes.append('the policy plays unsupported actions')
    if not _closed_under(mdp, policy, states):
        notes.append('the policy leaves the support')
    if notes:
        return LemmaResult('occupancy_bound', False, float('nan'),
                           '; '.join(notes))
    gamma = mdp.discount
    lam = float(lambda_const)
    lambda_state = np.full(mdp.n_states, lam)
    reshaped = reshape_mdp(mdp, h, lambda_state, support)
    shrunk = 1.0 - gamma * (1.0 - lam)
    visits = state_visitation(
        discounted_kernel(mdp), policy, mdp.initial_dist)
    d = visits / (1.0 - gamma)
    d_tilde = reshaped_visitation(reshaped, policy) / shrunk
    rhs = (1.0 - gamma) / shrunk * d
    violation = (d_tilde - rhs)[mask].max(initial=0.0)
    return LemmaResult('occupancy_bound', True, float(violation),
                       tolerance=__occupancy_atol__)


def ablation_pessimism(mdp, policy, h, lambda_const, support,
                       tol=__exact_tol__):
    ''' Shrinking only the discount cannot raise Q^pi when rewards are >= 0 '''
    if np.any(mdp.reward < 0):
        return LemmaResult('ablation_pessimism', False, float('nan'),
                           'negative rewards')
    lambda_state = np.full(mdp.n_states, float(lambda_const))
    shrunk = discount_only_mdp(mdp, h, lambda_state, support)
    v_tilde = reshaped_policy_evaluation(shrunk, policy, tol).values
    q_tilde = shrunk.reshaped_reward + shrunk.kernel @ v_tilde
    q_pi = q_from_values(mdp, policy_evaluation(mdp, policy, tol)).values
    return LemmaResult(
        'ablation_pessimism', True, float(np.max(q_tilde - q_pi)))


def lemma_suite(mdp, mu, h, lambda_const, support, tol=__exact_tol__):
    ''' Run every lemma check on one instance

    Arguments:
      mdp (TabularMdp): The MDP (rewards in [0, 1]).
      mu (Policy): The behaviour policy.
      h (ndarray or ValueTable): The heuristic.
      lambda_const (float): The constant blending factor.
      support: The state-action support of mu.

    Returns:
      A LemmaReport instance.
    '''
    h_values = np.asarray(getattr(h, 'values', h), dtype=float)
    states = support_states(support)
    h_values = np.where(states, h_values, 0.0)
    return LemmaReport((
        value_identity(mdp, mu, h_values, lambda_const, support, tol),
        pessimism(mdp, h_values, lambda_const, support, tol),
        occupancy_bound(mdp, mu, h_values, lambda_const, support),
        ablation_pessimism(mdp, mu, h_values, lambda_const, support, tol),
    ))
