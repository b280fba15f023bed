#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Definition of trajectories and offline datasets '''

from dataclasses import dataclass
from typing import Tuple
import json

import numpy as np
import pandas as pd

from .container import TableContainer

TERMINAL = 'terminal'
TIMEOUT = 'timeout'
__end_kinds__ = (TERMINAL, TIMEOUT)


@dataclass(frozen=True)
class Trajectory:
    ''' A behaviour-policy rollout

    Attributes:
      states (ndarray): Visited states s_1 ... s_T.
      actions (ndarray): Actions a_1 ... a_T.
      rewards (ndarray): Rewards r_1 ... r_T in [0, 1].
      final_state (int): The state reached after the last step.
      end (str): 'terminal' or 'timeout'.
    '''
    states: np.ndarray
    actions: np.ndarray
    rewards: np.ndarray
    final_state: int
    end: str

    def __post_init__(self):
        states = np.asarray(self.states, dtype=int)
        actions = np.asarray(self.actions, dtype=int)
        rewards = np.asarray(self.rewards, dtype=float)
        if not (states.ndim == actions.ndim == rewards.ndim == 1):
            raise ValueError('trajectory: steps should be one-dimensional')
        if not (states.size == actions.size == rewards.size):
            raise ValueError(
                'trajectory: states, actions and rewards should have the '
                f'same length ({states.size}, {actions.size}, {rewards.size})')
        if states.size == 0:
            raise ValueError('trajectory: should have at least one step')
        if np.any(rewards < 0.0) or np.any(rewards > 1.0):
            raise ValueError('rewards: values should lie in [0, 1]')
        if self.end not in __end_kinds__:
            raise ValueError(f'end: unsupported kind "{self.end}"')
        object.__setattr__(self, 'states', states)
        object.__setattr__(self, 'actions', actions)
        object.__setattr__(self, 'rewards', rewards)
        object.__setattr__(self, 'final_state', int(self.final_state))

    def __len__(self):
        return self.states.size

    @property
    def is_terminal(self):
        return self.end == TERMINAL

    @property
    def next_states(self):
        ''' s_2 ... s_T followed by the final state '''
        return np.append(self.states[1:], self.final_state)

    def to_dict(self):
        return {
            'states': self.states.tolist(),
            'actions': self.actions.tolist(),
            'rewards': self.rewards.tolist(),
            'final_state': self.final_state,
            'end': self.end,
        }

    @classmethod
    def from_dict(cls, document):
        for key in ('states', 'actions', 'rewards', 'final_state', 'end'):
            if key not in document:
                raise ValueError(f'{key}: missing')
        return cls(
            states=document['states'],
            actions=document['actions'],
            rewards=document['rewards'],
            final_state=document['final_state'],
            end=document['end'])


@dataclass(frozen=True)
class TransitionTable(TableContainer):
    ''' Flattened transition tuples (s, a, r, s', done) '''
    __columns__ = {
        's': 'int64',
        'a': 'int64',
        'r': 'float64',
        's_next': 'int64',
        'done': 'bool',
    }


@dataclass(frozen=True)
class Dataset:
    ''' An offline dataset of trajectories

    Attributes:
      trajectories (tuple of Trajectory): The rollouts.
      gamma (float): The discount factor used at collection time.
      rng_seed (int): The seed recorded for provenance.
    '''
    trajectories: Tuple[Trajectory, ...]
    gamma: float
    rng_seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'trajectories', tuple(self.trajectories))
        if len(self.trajectories) == 0:
            raise ValueError('dataset: should contain a trajectory')
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError(f'gamma: should be in [0, 1) (got {self.gamma})')

    def __len__(self):
        return len(self.trajectories)

    def __iter__(self):
        return iter(self.trajectories)

    def __getitem__(self, index):
        return self.trajectories[index]

    @property
    def n_transitions(self):
        return sum(len(traj) for traj in self.trajectories)

    def concat(self, other):
        ''' Join two datasets collected with the same discount '''
        if self.gamma != other.gamma:
            raise ValueError('gamma: datasets should share the discount')
        return Dataset(
            self.trajectories + other.trajectories, self.gamma, self.rng_seed)

    def transitions(self):
        ''' Flatten into tuples ordered by trajectory, then by step

        The last tuple of a terminal trajectory is flagged as done.
        '''
        done = []
        for traj in self.trajectories:
            flags = np.zeros(len(traj), dtype=bool)
            flags[-1] = traj.is_terminal
            done.append(flags)
        table = {
            's': np.concatenate([t.states for t in self.trajectories]),
            'a': np.concatenate([t.actions for t in self.trajectories]),
            'r': np.concatenate([t.rewards for t in self.trajectories]),
            's_next': np.concatenate(
                [t.next_states for t in self.trajectories]),
            'done': np.concatenate(done),
        }
        return TransitionTable(pd.DataFrame(table))

    @classmethod
    def from_jsonl(cls, filename, gamma, rng_seed=0):
        ''' Load trajectories from a JSON Lines file

        Arguments:
          filename (str):
              The path to the trajectory file.
          gamma (float):
              The discount factor of the collection MDP.

        Returns:
          A Dataset instance.

        Raises:
          ValueError: A line is malformed. The message carries the line
              number (starting from 1).
        '''
        trajectories = []
        with open(filename, 'r') as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                try:
                    trajectories.append(Trajectory.from_dict(json.loads(line)))
                except (ValueError, TypeError) as e:
                    raise ValueError(f'{filename}:{lineno}: {e}') from e
        return cls(tuple(trajectories), gamma, rng_seed)

    def writeto(self, filename):
        ''' Dump trajectories into a JSON Lines file '''
        with open(filename, 'w') as f:
            for traj in self.trajectories:
                f.write(json.dumps(traj.to_dict()) + '\n')
