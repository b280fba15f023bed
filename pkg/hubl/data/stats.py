#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Empirical statistics of offline datasets '''

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class DataStats:
    ''' Counts and support of the state-action pairs in a dataset

    Attributes:
      counts (ndarray): m[s, a], the number of tuples at (s, a).
      support (ndarray): Boolean mask of the pairs with m > 0.
      empirical_mu (ndarray): Normalized counts.
    '''
    counts: np.ndarray
    support: np.ndarray
    empirical_mu: np.ndarray

    @classmethod
    def from_counts(cls, counts):
        counts = np.asarray(counts, dtype=int)
        assert np.all(counts >= 0), 'counts should be non-negative.'
        total = counts.sum()
        assert total > 0, 'counts should contain at least one tuple.'
        return cls(counts, counts > 0, counts / total)

    @property
    def n_transitions(self):
        return int(self.counts.sum())


def count_pairs(s, a, n_states, n_actions):
    ''' Histogram of (s, a) pairs with the shape of (S, A) '''
    flat = np.asarray(s) * n_actions + np.asarray(a)
    counts = np.bincount(flat, minlength=n_states * n_actions)
    return counts.reshape((n_states, n_actions))


def stats(dataset, n_states=None, n_actions=None):
    ''' Count every transition tuple of a dataset

    Arguments:
      dataset (Dataset): The offline dataset.
      n_states (int, optional): The number of states.
      n_actions (int, optional): The number of actions.
          Both are inferred from the largest indices if omitted.

    Returns:
      A DataStats instance.
    '''
    table = dataset.transitions()
    if n_states is None:
        n_states = int(max(table.column('s').max(),
                           table.column('s_next').max())) + 1
    if n_actions is None:
        n_actions = int(table.column('a').max()) + 1
    counts = count_pairs(
        table.column('s'), table.column('a'), n_states, n_actions)
    return DataStats.from_counts(counts)


def exact_support(mdp, mu, init_dist=None):
    ''' The population support of a behaviour policy

    States reachable from the initial distribution under `mu`, paired with
    the actions `mu` plays there with positive probability.
    '''
    if init_dist is None:
        init_dist = mdp.initial_dist
    step = np.einsum('sa,sat->st', mu.probs, mdp.transition) > 0
    reached = np.asarray(init_dist) > 0
    while True:
        grown = reached | (reached @ step)
        if np.array_equal(grown, reached):
            break
        reached = grown
    return reached[:, None] & (mu.probs > 0)
