#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import approx
import numpy as np

from .util import *
from hubl.analysis.instance import random_instance, random_policy


def test_random_instance(random):
    for _ in range(20):
        instance = random_instance(random)
        mdp = instance.mdp
        assert 2 <= mdp.n_states <= 10
        assert 1 <= mdp.n_actions <= 4
        assert 0.5 <= mdp.discount <= 0.9
        assert np.all(instance.h.defined == instance.states)
        assert np.all((instance.lambda_state >= 0)
                      & (instance.lambda_state <= 1))
        assert np.all(instance.support <= (instance.mu.probs > 0))
        assert np.all(instance.states[mdp.initial_dist > 0])


def test_random_policy(random):
    policy = random_policy(random, 6, 3, density=0.2)
    assert policy.probs.sum(axis=1) == approx(np.ones(6))
    assert np.all((policy.probs > 0).sum(axis=1) >= 1)
