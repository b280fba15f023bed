#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import approx, raises
from itertools import product
import numpy as np

from .util import *
from hubl.mdp.bellman import *
from hubl.mdp.benchmark import random_mdp
from hubl.mdp.tabular import Policy


def test_self_loop(self_loop):
    policy = Policy.deterministic([0], 1)
    assert policy_evaluation(self_loop, policy).values[0] == approx(2.0)


def test_zero_reward(random):
    mdp = random_mdp(random, 4, 3)
    mdp = mdp.replace(reward=np.zeros((4, 3)))
    values = policy_evaluation(mdp, Policy.uniform(4, 3)).values
    assert values == approx(np.zeros(4))


def test_linear_solve(random):
    mdp = random_mdp(random, 5, 2, gamma=0.9)
    policy = Policy.uniform(5, 2)
    r_pi = np.einsum('sa,sa->s', policy.probs, mdp.reward)
    p_pi = np.einsum('sa,sat->st', policy.probs, mdp.transition)
    exact = np.linalg.solve(np.eye(5) - 0.9 * p_pi, r_pi)
    values = policy_evaluation(mdp, policy).values
    assert np.max(np.abs(values - exact)) < 1e-8


def test_reject_tolerance(two_state):
    with raises(ValueError, match='tol'):
        policy_evaluation(two_state, Policy.uniform(2, 2), tol=0.0)
    with raises(ValueError, match='tol'):
        value_iteration(two_state, tol=-1.0)


def test_dominant_action(two_state):
    q, policy, values = value_iteration(two_state)
    assert policy.actions[0] == 1
    assert values.values[1] == approx(2.0)
    assert values.values[0] == approx(2.0)


def test_brute_force(random):
    mdp = random_mdp(random, 4, 2)
    _, policy, values = value_iteration(mdp)
    best = max(
        product(range(2), repeat=4),
        key=lambda actions: mdp.initial_dist @ policy_evaluation(
            mdp, Policy.deterministic(actions, 2)).values)
    assert tuple(policy.actions) == best


def test_tie_break(random):
    mdp = random_mdp(random, 3, 3)
    reward = np.repeat(random.uniform(size=(3, 1)), 3, axis=1)
    transition = np.repeat(mdp.transition[:, :1], 3, axis=1)
    mdp = mdp.replace(reward=reward, transition=transition)
    _, policy, _ = value_iteration(mdp)
    assert policy.actions.tolist() == [0, 0, 0]


def test_greedy_policy():
    q = np.array([[1.0, 2.0, 2.0], [0.0, 0.0, -1.0]])
    assert greedy_policy(q).actions.tolist() == [1, 0]


def test_bellman_residual(random):
    mdp = random_mdp(random, 5, 3)
    policy = Policy.uniform(5, 3)
    values = policy_evaluation(mdp, policy, tol=1e-10)
    assert bellman_residual(mdp, values, policy) <= 1e-10
    _, _, optimal = value_iteration(mdp, tol=1e-10)
    assert bellman_residual(mdp, optimal) <= 1e-10


def test_q_from_values(two_state):
    q = q_from_values(two_state, np.array([0.0, 2.0]))
    assert q.values.tolist() == [[0.0, 2.0], [2.0, 2.0]]


def test_occupancy_self_loop(self_loop):
    occupancy = discounted_occupancy(self_loop, Policy.deterministic([0], 1))
    assert occupancy == approx(np.ones((1, 1)))


def test_occupancy_cycle(cycle):
    occupancy = discounted_occupancy(cycle, Policy.deterministic([0, 0], 1))
    assert occupancy[:, 0] == approx([2.0 / 3.0, 1.0 / 3.0])


def test_occupancy_truncated(random):
    mdp = random_mdp(random, 6, 3, gamma=0.8)
    policy = Policy.uniform(6, 3)
    occupancy = discounted_occupancy(mdp, policy)
    assert occupancy.sum() == approx(1.0)
    assert np.max(np.abs(occupancy - truncated_occupancy(mdp, policy))) < 1e-9


def test_occupancy_flow(random):
    mdp = random_mdp(random, 5, 2, gamma=0.9)
    policy = Policy.uniform(5, 2)
    d = discounted_occupancy(mdp, policy)
    inflow = np.einsum('sa,sat->t', d, mdp.transition)
    states = (1.0 - mdp.discount) * mdp.initial_dist + mdp.discount * inflow
    assert np.max(np.abs(d.sum(axis=1) - states)) < 1e-9


def test_contraction_profile(random):
    mdp = random_mdp(random, 5, 2, gamma=0.9)
    distances = contraction_profile(mdp, Policy.uniform(5, 2), num=30)
    assert np.all(distances[1:] <= 0.9 * distances[:-1] + 1e-12)


def test_average_occupancy(cycle):
    policy = Policy.deterministic([0, 0], 1)
    occupancy = average_occupancy(cycle, policy, 4)
    assert occupancy[:, 0] == approx([0.5, 0.5])
