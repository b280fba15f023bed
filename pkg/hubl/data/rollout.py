#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Behaviour-policy rollout generation '''

from concurrent.futures import ThreadPoolExecutor
import logging

import numpy as np

from .trajectory import Dataset, Trajectory, TERMINAL, TIMEOUT

logger = logging.getLogger(__name__)


def trajectory_generator(seed, index):
    ''' The random stream of one trajectory

    Each trajectory draws from its own PCG64 stream seeded with
    `seed + index`, so that trajectories can be generated in any order.
    '''
    return np.random.Generator(np.random.PCG64(seed + index))


def _sample(gen, cumulative):
    ''' Draw an index from a cumulative distribution '''
    index = np.searchsorted(cumulative, gen.random(), side='right')
    return min(int(index), cumulative.size - 1)


class _Sampler:
    ''' Cumulative tables of an MDP and a behaviour policy '''

    def __init__(self, mdp, behavior, terminal_states):
        self.initial = np.cumsum(mdp.initial_dist)
        self.policy = np.cumsum(behavior.probs, axis=1)
        self.transition = np.cumsum(mdp.transition, axis=2)
        self.reward = mdp.reward
        self.terminal = np.zeros(mdp.n_states, dtype=bool)
        self.terminal[list(terminal_states)] = True

    def trajectory(self, gen, max_len):
        states, actions, rewards = [], [], []
        s = _sample(gen, self.initial)
        end = TIMEOUT
        for _ in range(max_len):
            a = _sample(gen, self.policy[s])
            nxt = _sample(gen, self.transition[s, a])
            states.append(s)
            actions.append(a)
            rewards.append(self.reward[s, a])
            s = nxt
            if self.terminal[s]:
                end = TERMINAL
                break
        return Trajectory(states, actions, rewards, s, end)


def _check_arguments(mdp, behavior, max_len, terminal_states):
    if max_len < 1:
        raise ValueError(f'max_len: should be positive (got {max_len})')
    if behavior.probs.shape != mdp.reward.shape:
        raise ValueError('behavior: shape does not match the MDP')
    for s in terminal_states:
        if not 0 <= s < mdp.n_states:
            raise ValueError(f'terminal_states: state {s} out of range')


def rollout(mdp, behavior, max_len, n_traj, terminal_states=(), seed=0,
            workers=1):
    ''' Collect trajectories with a behaviour policy

    Arguments:
      mdp (TabularMdp): The environment.
      behavior (Policy): The data-collection policy.
      max_len (int): Trajectories are cut (timeout) after this many steps.
      n_traj (int): The number of trajectories.
      terminal_states (iterable): Entering one of them ends a trajectory.
      seed (int): The base seed.
      workers (int): The number of worker threads.

    Returns:
      A Dataset. The result does not depend on `workers`.
    '''
    _check_arguments(mdp, behavior, max_len, terminal_states)
    if n_traj < 1:
        raise ValueError(f'n_traj: should be positive (got {n_traj})')
    sampler = _Sampler(mdp, behavior, terminal_states)

    def generate(index):
        return sampler.trajectory(trajectory_generator(seed, index), max_len)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            trajectories = list(pool.map(generate, range(n_traj)))
    else:
        trajectories = [generate(n) for n in range(n_traj)]
    dataset = Dataset(tuple(trajectories), mdp.discount, seed)
    logger.debug('generated %d trajectories (%d steps)',
                 n_traj, dataset.n_transitions)
    return dataset


def rollout_transitions(mdp, behavior, max_len, n_transitions,
                        terminal_states=(), seed=0):
    ''' Collect trajectories until exactly `n_transitions` steps are stored

    The last trajectory is cut short (as a timeout) when needed.
    '''
    _check_arguments(mdp, behavior, max_len, terminal_states)
    if n_transitions < 1:
        raise ValueError(
            f'n_transitions: should be positive (got {n_transitions})')
    sampler = _Sampler(mdp, behavior, terminal_states)
    trajectories, total, index = [], 0, 0
    while total < n_transitions:
        traj = sampler.trajectory(trajectory_generator(seed, index), max_len)
        room = n_transitions - total
        if len(traj) > room:
            traj = Trajectory(
                traj.states[:room], traj.actions[:room], traj.rewards[:room],
                traj.states[room], TIMEOUT)
        trajectories.append(traj)
        total += len(traj)
        index += 1
    return Dataset(tuple(trajectories), mdp.discount, seed)
