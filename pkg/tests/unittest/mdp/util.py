#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import fixture
import numpy as np

from hubl.mdp.tabular import TabularMdp


@fixture
def random():
    return np.random.default_rng(seed=42)


@fixture
def self_loop():
    return TabularMdp(
        np.ones((1, 1, 1)), np.ones((1, 1)), 0.5, np.ones(1))


@fixture
def two_state():
    ''' Action 0 stays (r=0); action 1 moves to an absorbing state (r=1) '''
    transition = np.zeros((2, 2, 2))
    transition[0, 0, 0] = 1.0
    transition[0, 1, 1] = 1.0
    transition[1, :, 1] = 1.0
    reward = np.array([[0.0, 1.0], [1.0, 1.0]])
    return TabularMdp(transition, reward, 0.5, np.array([1.0, 0.0]))


@fixture
def cycle():
    ''' Two states visited alternately, d0 = (1, 0) '''
    transition = np.zeros((2, 1, 2))
    transition[0, 0, 1] = 1.0
    transition[1, 0, 0] = 1.0
    return TabularMdp(
        transition, np.zeros((2, 1)), 0.5, np.array([1.0, 0.0]))


def truncated_occupancy(mdp, policy, num=2000):
    ''' (1 - gamma) Σ_{t < num} gamma^t P_t(s, a) by power iteration '''
    p_pi = np.einsum('sa,sat->st', policy.probs, mdp.transition)
    states = mdp.initial_dist.copy()
    total = np.zeros(mdp.n_states)
    weight = 1.0
    for _ in range(num):
        total += weight * states
        states = states @ p_pi
        weight *= mdp.discount
    return (1.0 - mdp.discount) * total[:, None] * policy.probs
