#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Random splitting of tuples for offline value iteration '''

from dataclasses import dataclass
from typing import List
import math

import numpy as np

from ..data.stats import count_pairs


def horizon_T(n_tuples, gamma):
    ''' The number of iterations, max(1, ceil(ln(N) / (1 - gamma))) '''
    if n_tuples < 1:
        raise ValueError(f'n_tuples: should be positive (got {n_tuples})')
    return max(1, math.ceil(math.log(n_tuples) / (1.0 - gamma)))


@dataclass(frozen=True)
class SplitDataset:
    ''' Tuples split into D_0 ... D_T with per-split empirical models

    Attributes:
      splits (list of ndarray): Tuple indices of D_0 ... D_T.
      counts (ndarray): m_t[s, a] with the shape of (T+1, S, A).
      rewards (ndarray): Mean r~ per (t, s, a); zero where m_t = 0.
      transitions (ndarray): Empirical P^t[s, a, s'] (zero rows where
          m_t = 0).
      discounted (ndarray): Mean of gamma~ 1[s'_i = s'] per (t, s, a, s'),
          i.e. the empirical discounted kernel.
    '''
    splits: List[np.ndarray]
    counts: np.ndarray
    rewards: np.ndarray
    transitions: np.ndarray
    discounted: np.ndarray

    @property
    def horizon(self):
        return len(self.splits) - 1

    def sizes(self):
        return [idx.size for idx in self.splits]


def _empirical(s, a, s_next, r_tilde, gamma_tilde, n_states, n_actions):
    m = count_pairs(s, a, n_states, n_actions)
    flat = s * n_actions + a
    size = n_states * n_actions
    r_sum = np.bincount(flat, weights=r_tilde, minlength=size)
    cell = flat * n_states + s_next
    p_sum = np.bincount(cell, minlength=size * n_states)
    g_sum = np.bincount(cell, weights=gamma_tilde, minlength=size * n_states)
    denom = np.maximum(m, 1)
    shape = (n_states, n_actions, n_states)
    return (m,
            r_sum.reshape(m.shape) / denom,
            p_sum.reshape(shape) / denom[..., None],
            g_sum.reshape(shape) / denom[..., None])


def split_dataset(tuples, T, seed, n_states=None, n_actions=None):
    ''' Randomly split tuples into T+1 sets

    The tuples are shuffled with a PCG64 generator seeded by `seed`; the
    first ceil(N/2) go to D_0 and the rest are dealt round-robin to
    D_1 ... D_T.

    Arguments:
      tuples (RelabeledTable): Tuples with r~ and gamma~ columns.
      T (int): The number of iterations (at least 1).
      seed (int): The seed of the shuffle.
      n_states (int, optional): Inferred from the tuples if omitted.
      n_actions (int, optional): Inferred from the tuples if omitted.

    Returns:
      A SplitDataset instance.
    '''
    if T < 1:
        raise ValueError(f'T: should be at least 1 (got {T})')
    s = tuples.column('s')
    a = tuples.column('a')
    s_next = tuples.column('s_next')
    r_tilde = tuples.column('r_tilde')
    gamma_tilde = tuples.column('gamma_tilde')
    if n_states is None:
        n_states = int(max(s.max(), s_next.max())) + 1
    if n_actions is None:
        n_actions = int(a.max()) + 1

    n = s.size
    order = np.random.default_rng(seed).permutation(n)
    head = (n + 1) // 2
    rest = order[head:]
    splits = [order[:head]] + [rest[k::T] for k in range(T)]

    stats = [
        _empirical(s[idx], a[idx], s_next[idx], r_tilde[idx],
                   gamma_tilde[idx], n_states, n_actions)
        for idx in splits]
    counts, rewards, transitions, discounted = map(np.stack, zip(*stats))
    return SplitDataset(splits, counts, rewards, transitions, discounted)
