#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np

from .util import *
from hubl.analysis.instance import random_policy
from hubl.data.rollout import rollout
from hubl.mdp.benchmark import random_mdp
from hubl.relabel.blending import BlendingStrategy
from hubl.relabel.heuristic import compute_heuristics
from hubl.relabel.relabel import relabel


@settings(deadline=None, max_examples=5)
@given(generators(), floats(0.0, 0.99))
def test_heuristic_recursion(gen, gamma):
    mdp = random_mdp(gen, 6, 3, gamma=gamma)
    mu = random_policy(gen, 6, 3)
    terminal = (int(gen.integers(6)),)
    dataset = rollout(mdp, mu, 30, 1000, terminal, seed=int(gen.integers(99)))
    for traj in dataset:
        annotated = compute_heuristics(traj, gamma)
        h = annotated.heuristics
        r = traj.rewards
        assert np.max(np.abs(h[:-1] - r[:-1] - gamma * h[1:]),
                      initial=0.0) <= 1e-12
        assert abs(h[-1] - r[-1]) <= 1e-12


@settings(deadline=None, max_examples=20)
@given(generators(), integers(1, 50))
def test_zero_alpha_identity(gen, n_traj):
    mdp = random_mdp(gen, 5, 2)
    mu = random_policy(gen, 5, 2)
    dataset = rollout(mdp, mu, 10, n_traj, (4,), seed=int(gen.integers(99)))
    raw = dataset.transitions()
    for kind in ('constant', 'sigmoid', 'rank'):
        tuples = relabel(dataset, BlendingStrategy(kind, 0.0))
        done = raw.column('done')
        assert np.array_equal(tuples.column('r_tilde'), raw.column('r'))
        assert np.all(tuples.column('gamma_tilde')[~done] == mdp.discount)
        assert np.all(tuples.column('gamma_tilde')[done] == 0.0)


@settings(deadline=None, max_examples=20)
@given(generators(), floats(0.0, 1.0))
def test_factor_range(gen, alpha):
    mdp = random_mdp(gen, 5, 2)
    mu = random_policy(gen, 5, 2)
    dataset = rollout(mdp, mu, 10, 20, seed=int(gen.integers(99)))
    for kind in ('constant', 'sigmoid', 'rank'):
        tuples = relabel(dataset, BlendingStrategy(kind, alpha))
        gamma_tilde = tuples.column('gamma_tilde')
        assert np.all(gamma_tilde >= mdp.discount * (1.0 - alpha) - 1e-15)
        assert np.all(gamma_tilde <= mdp.discount)
