#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Offline value iteration with lower confidence bounds and heuristic
blending
'''

from dataclasses import dataclass, asdict
from typing import Optional
import logging
import math

from jax import jit
import jax.numpy as jnp
import numpy as np
import pandas as pd

from ..mdp.reshape import extend_heuristic, support_states
from ..mdp.tabular import Policy, QTable, ValueTable
from ..relabel.relabel import RelabeledTable
from .split import horizon_T, split_dataset

logger = logging.getLogger(__name__)

__l_coeff__ = 2000.0


@dataclass(frozen=True)
class VilcbConfig:
    ''' Configuration of the solver

    Attributes:
      gamma (float): The discount factor.
      v_max (float): Upper bound of the value function.
      lambda_const (float): The constant blending factor alpha on the
          support.
      seed (int): The seed of the split and of the random model rows.
      t_override (int, optional): Replaces the default number of iterations.
      l_coeff (float): The leading constant of the log factor L.
    '''
    gamma: float
    v_max: float
    lambda_const: float = 0.0
    seed: int = 0
    t_override: Optional[int] = None
    l_coeff: float = __l_coeff__

    def __post_init__(self):
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError(f'gamma: should be in [0, 1) (got {self.gamma})')
        if not self.v_max > 0:
            raise ValueError(f'v_max: should be positive (got {self.v_max})')
        if not 0.0 <= self.lambda_const <= 1.0:
            raise ValueError(
                f'lambda_const: should be in [0, 1] ({self.lambda_const})')
        if self.seed < 0:
            raise ValueError(f'seed: should be non-negative ({self.seed})')
        if self.t_override is not None and self.t_override < 1:
            raise ValueError('t_override: should be a positive integer')
        if not self.l_coeff > 0:
            raise ValueError('l_coeff: should be positive')

    @classmethod
    def for_mdp(cls, mdp, **options):
        ''' Default configuration with V_max = 1/(1-gamma) '''
        options.setdefault('v_max', mdp.v_max)
        return cls(gamma=mdp.discount, **options)


@dataclass(frozen=True)
class VilcbResult:
    ''' The output of one solve

    Attributes:
      policy (Policy): The returned policy pi_T.
      q (QTable): The last Q_T.
      values (ValueTable): The last V_T.
      trace (ndarray): V_0 ... V_T with the shape of (T+1, S).
      horizon (int): T.
      big_l (float): L.
      config (VilcbConfig): The configuration.
    '''
    policy: Policy
    q: QTable
    values: ValueTable
    trace: np.ndarray
    horizon: int
    big_l: float
    config: VilcbConfig

    def manifest(self):
        return {
            'seed': self.config.seed,
            'T': self.horizon,
            'L': self.big_l,
            'alpha': self.config.lambda_const,
            'v_max': self.config.v_max,
        }


def log_factor(T, n_states, n_actions, n_tuples, coeff=__l_coeff__):
    ''' L = coeff * ln(2 (T+1) |S| |A| N) '''
    return coeff * math.log(2 * (T + 1) * n_states * n_actions * n_tuples)


def penalty(m, big_l, v_max):
    ''' Count-based penalty b = V_max sqrt(L / max(m, 1)) '''
    m = np.maximum(np.asarray(m, dtype=float), 1.0)
    return v_max * np.sqrt(big_l / m)


def _backup(reward, kernel, bonus, values):
    ''' Q(s,a) = reward(s,a) - bonus(s,a) + Σ_s' kernel(s,a,s') V(s') '''
    return reward - bonus + kernel @ values


backup = jit(_backup)


def blend_transitions(transitions, gamma, blending, heuristic):
    ''' Write the blended update per tuple

    Every raw tuple (s, a, r, s', done) becomes
    r~ = r + gamma lambda(s, s') h(s') and gamma~ = gamma (1 - lambda(s, s'))
    (gamma~ = 0 for done tuples), so that averaging over the tuples of a
    split reproduces the blended backup of the empirical model.

    Arguments:
      transitions (TransitionTable): Raw tuples.
      gamma (float): The discount factor.
      blending (ndarray): lambda(s, s') with the shape of (S, S).
      heuristic (ndarray): h(s) over all states.

    Returns:
      A RelabeledTable.
    '''
    s = transitions.column('s')
    s_next = transitions.column('s_next')
    done = transitions.column('done')
    lam = blending[s, s_next]
    table = pd.DataFrame({
        's': s,
        'a': transitions.column('a'),
        's_next': s_next,
        'r_tilde': transitions.column('r') + gamma * lam * heuristic[s_next],
        'gamma_tilde': np.where(done, 0.0, gamma * (1.0 - lam)),
        'done': done,
    })
    return RelabeledTable(table)


def _dirichlet_generator(seed):
    return np.random.default_rng([seed, 1])


def _iterate(tuples, n_states, n_actions, cfg, blending, heuristic):
    ''' Run the iterations of the solver on tuples with r~ and gamma~ '''
    n_tuples = len(tuples)
    if n_tuples < 1:
        raise ValueError('tuples: at least one tuple is required')
    T = cfg.t_override or horizon_T(n_tuples, cfg.gamma)
    big_l = log_factor(T, n_states, n_actions, n_tuples, cfg.l_coeff)
    data = split_dataset(tuples, T, cfg.seed, n_states, n_actions)
    gen = _dirichlet_generator(cfg.seed)

    gamma = cfg.gamma
    keep = 1.0 - blending
    values = np.zeros(n_states)
    actions = np.argmax(data.counts[0], axis=1)
    q = np.zeros((n_states, n_actions))
    trace = [values]
    for t in range(1, T + 1):
        rows = gen.dirichlet(np.ones(n_states), size=(n_states, n_actions))
        visited = data.counts[t] >= 1
        reward = np.where(
            visited, data.rewards[t],
            gamma * np.einsum('sat,st,t->sa', rows, blending, heuristic))
        kernel = np.where(
            visited[..., None], data.discounted[t],
            gamma * rows * keep[:, None, :])
        bonus = penalty(data.counts[t], big_l, cfg.v_max)
        q = np.asarray(backup(reward, kernel, bonus, values))
        mid_values = q.max(axis=1)
        mid_actions = np.argmax(q, axis=1)
        improved = mid_values > values
        values = np.where(improved, mid_values, values)
        actions = np.where(improved, mid_actions, actions)
        assert np.all(values >= trace[-1]), 'V_t should be non-decreasing.'
        trace.append(values)

    logger.debug('solved with T=%d, L=%.3f, alpha=%.3f',
                 T, big_l, cfg.lambda_const)
    return VilcbResult(
        policy=Policy.deterministic(actions, n_actions),
        q=QTable(q),
        values=ValueTable(values),
        trace=np.stack(trace),
        horizon=T,
        big_l=big_l,
        config=cfg)


def vi_lcb_hubl(tuples, dims, cfg, h=None, support=None):
    ''' Value iteration with lower confidence bounds and heuristic blending

    Raw tuples (a TransitionTable) are blended with
    Lambda[s, s'] = alpha if s and s' are both supported and the heuristic
    h. Relabeled tuples (a RelabeledTable) already carry r~ and gamma~ and
    are used as they are.

    Arguments:
      tuples (TransitionTable or RelabeledTable): The offline tuples.
      dims (tuple): (n_states, n_actions).
      cfg (VilcbConfig): The configuration.
      h (ValueTable or ndarray): The heuristic on the supported states.
      support (DataStats or ndarray): The state-action support Omega.

    Returns:
      A VilcbResult. The learned policy is `result.policy`.
    '''
    n_states, n_actions = dims
    if tuples.has('r_tilde'):
        blending = np.zeros((n_states, n_states))
        heuristic = np.zeros(n_states)
        return _iterate(tuples, n_states, n_actions, cfg, blending, heuristic)

    if support is not None:
        states = support_states(support)
    elif cfg.lambda_const == 0.0:
        states = np.zeros(n_states, dtype=bool)
    else:
        raise ValueError('support: required to blend raw tuples')
    if h is None:
        if cfg.lambda_const > 0.0:
            raise ValueError('h: required to blend raw tuples')
        h = np.zeros(n_states)
    heuristic = extend_heuristic(h, states)
    blending = cfg.lambda_const * np.outer(states, states).astype(float)
    blended = blend_transitions(tuples, cfg.gamma, blending, heuristic)
    return _iterate(blended, n_states, n_actions, cfg, blending, heuristic)


def vi_lcb(tuples, dims, cfg, support=None):
    ''' Plain VI-LCB, i.e. the blended solver with alpha = 0 '''
    cfg = VilcbConfig(**{**asdict(cfg), 'lambda_const': 0.0})
    return vi_lcb_hubl(tuples, dims, cfg, None, support)
