#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Definition of tabular MDPs, policies and value tables '''

from dataclasses import dataclass, field
from typing import Optional
import json

import numpy as np

from ..util import check_distribution, check_unit_interval


@dataclass(frozen=True)
class TabularMdp:
    ''' A finite discounted Markov decision process

    Attributes:
      transition (ndarray):
          Transition tensor P[s, a, s'] with the shape of (S, A, S).
      reward (ndarray):
          Reward matrix r[s, a] with entries in [0, 1].
      discount (float):
          Discount factor gamma in [0, 1).
      initial_dist (ndarray):
          Initial state distribution d0.
    '''
    transition: np.ndarray
    reward: np.ndarray
    discount: float
    initial_dist: np.ndarray

    def __post_init__(self):
        transition = check_distribution(self.transition, 'transition')
        if transition.ndim != 3 or transition.shape[0] != transition.shape[2]:
            raise ValueError(
                'transition: the shape should be (n_states, n_actions, '
                f'n_states), got {transition.shape}')
        reward = check_unit_interval(self.reward, 'reward')
        if reward.shape != transition.shape[:2]:
            raise ValueError(
                f'reward: the shape should be {transition.shape[:2]}, '
                f'got {reward.shape}')
        if not 0.0 <= self.discount < 1.0:
            raise ValueError(
                f'gamma: should be in [0, 1) (got {self.discount})')
        initial_dist = check_distribution(self.initial_dist, 'initial_dist')
        if initial_dist.shape != (transition.shape[0], ):
            raise ValueError(
                f'initial_dist: expected {transition.shape[0]} entries')
        object.__setattr__(self, 'transition', transition)
        object.__setattr__(self, 'reward', reward)
        object.__setattr__(self, 'discount', float(self.discount))
        object.__setattr__(self, 'initial_dist', initial_dist)

    @property
    def n_states(self):
        return self.transition.shape[0]

    @property
    def n_actions(self):
        return self.transition.shape[1]

    @property
    def v_max(self):
        ''' Upper bound of the value function, 1/(1-gamma) '''
        return 1.0 / (1.0 - self.discount)

    def replace(self, **changes):
        ''' Return a copy with some attributes replaced '''
        params = dict(
            transition=self.transition, reward=self.reward,
            discount=self.discount, initial_dist=self.initial_dist)
        params.update(changes)
        return TabularMdp(**params)

    def to_dict(self):
        return {
            'n_states': self.n_states,
            'n_actions': self.n_actions,
            'gamma': self.discount,
            'transition': self.transition.tolist(),
            'reward': self.reward.tolist(),
            'initial_dist': self.initial_dist.tolist(),
        }

    @classmethod
    def from_dict(cls, document):
        ''' Build an MDP from a JSON-compatible dictionary

        Arguments:
          document (dict):
              A dictionary with the keys `n_states`, `n_actions`, `gamma`,
              `transition`, `reward`, and `initial_dist`.

        Returns:
          A TabularMdp instance.
        '''
        for key in ('n_states', 'n_actions', 'gamma',
                    'transition', 'reward', 'initial_dist'):
            if key not in document:
                raise ValueError(f'{key}: missing in the MDP document')
        if not isinstance(document['gamma'], (int, float)):
            raise ValueError('gamma: should be a number')
        mdp = cls(
            transition=np.array(document['transition'], dtype=float),
            reward=np.array(document['reward'], dtype=float),
            discount=document['gamma'],
            initial_dist=np.array(document['initial_dist'], dtype=float))
        if mdp.n_states != document['n_states']:
            raise ValueError('n_states: inconsistent with transition')
        if mdp.n_actions != document['n_actions']:
            raise ValueError('n_actions: inconsistent with transition')
        return mdp

    @classmethod
    def from_json(cls, filename):
        ''' Load an MDP from a JSON file '''
        with open(filename, 'r') as f:
            return cls.from_dict(json.load(f))

    def writeto(self, filename):
        ''' Dump the MDP into a JSON file '''
        with open(filename, 'w') as f:
            json.dump(self.to_dict(), f)


@dataclass(frozen=True)
class Policy:
    ''' A stationary Markov policy

    Attributes:
      probs (ndarray):
          Action distribution per state with the shape of (S, A).
      actions (ndarray, optional):
          Action index per state. Defined only for deterministic policies.
    '''
    probs: np.ndarray
    actions: Optional[np.ndarray] = None

    def __post_init__(self):
        probs = check_distribution(self.probs, 'policy')
        assert probs.ndim == 2, 'policy table should be two-dimensional.'
        object.__setattr__(self, 'probs', probs)
        if self.actions is not None:
            object.__setattr__(
                self, 'actions', np.asarray(self.actions, dtype=int))

    @classmethod
    def deterministic(cls, actions, n_actions):
        ''' Build a deterministic policy from per-state action indices '''
        actions = np.asarray(actions, dtype=int)
        if np.any(actions < 0) or np.any(actions >= n_actions):
            raise ValueError('policy: action index out of range')
        probs = np.zeros((actions.size, n_actions))
        probs[np.arange(actions.size), actions] = 1.0
        return cls(probs=probs, actions=actions)

    @classmethod
    def stochastic(cls, probs):
        return cls(probs=np.asarray(probs, dtype=float))

    @classmethod
    def uniform(cls, n_states, n_actions):
        return cls(probs=np.full((n_states, n_actions), 1.0 / n_actions))

    @property
    def is_deterministic(self):
        return self.actions is not None

    @property
    def n_states(self):
        return self.probs.shape[0]

    @property
    def n_actions(self):
        return self.probs.shape[1]

    def to_dict(self):
        assert self.is_deterministic, \
            'only deterministic policies are serialized as action lists.'
        return {'actions': self.actions.tolist()}


@dataclass(frozen=True)
class ValueTable:
    ''' Per-state values, possibly defined only on some states

    Attributes:
      values (ndarray):
          Values per state. Entries of absent states are NaN.
      defined (ndarray):
          A boolean mask of states that carry a value.
    '''
    values: np.ndarray
    defined: np.ndarray = field(default=None)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        defined = self.defined
        if defined is None:
            defined = np.ones(values.shape, dtype=bool)
        defined = np.asarray(defined, dtype=bool)
        assert defined.shape == values.shape, \
            'mask and values should have the same shape.'
        values = np.where(defined, values, np.nan)
        if not np.all(np.isfinite(values[defined])):
            raise ValueError('values: non-finite entries')
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'defined', defined)

    def __len__(self):
        return self.values.size

    def __getitem__(self, state):
        return self.values[state]

    @property
    def is_partial(self):
        return not bool(np.all(self.defined))

    def get(self, state):
        ''' Return the value of a state, or None if it is absent '''
        if not self.defined[state]:
            return None
        return float(self.values[state])

    def filled(self, default=0.0):
        ''' Return the values with absent entries replaced by `default` '''
        return np.where(self.defined, self.values, default)

    def restrict(self, states):
        ''' Keep only the values on the states flagged in `states` '''
        return ValueTable(self.values, self.defined & np.asarray(states))


@dataclass(frozen=True)
class QTable:
    ''' Per-state-action values with the shape of (S, A) '''
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        assert values.ndim == 2, 'Q-table should be two-dimensional.'
        if not np.all(np.isfinite(values)):
            raise ValueError('values: non-finite entries')
        object.__setattr__(self, 'values', values)

    def __getitem__(self, key):
        return self.values[key]
