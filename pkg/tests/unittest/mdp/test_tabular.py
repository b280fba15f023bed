#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import approx, raises
import json
import numpy as np

from .util import *
from hubl.mdp.tabular import *


def test_invalid_gamma(two_state):
    with raises(ValueError, match='gamma'):
        two_state.replace(discount=1.0)
    with raises(ValueError, match='gamma'):
        two_state.replace(discount=-0.1)


def test_invalid_transition(two_state):
    transition = two_state.transition.copy()
    transition[0, 0, 0] = 0.5
    with raises(ValueError, match='transition'):
        two_state.replace(transition=transition)


def test_invalid_reward(two_state):
    with raises(ValueError, match='reward'):
        two_state.replace(reward=two_state.reward + 1.0)


def test_invalid_initial_dist(two_state):
    with raises(ValueError, match='initial_dist'):
        two_state.replace(initial_dist=np.array([0.5, 0.4]))


def test_properties(two_state):
    assert two_state.n_states == 2
    assert two_state.n_actions == 2
    assert two_state.v_max == approx(2.0)


def test_json_roundtrip(tmp_path, random):
    transition = random.dirichlet(np.ones(3), size=(3, 2))
    transition = np.round(transition, 6)
    transition[..., -1] = 1.0 - transition[..., :-1].sum(axis=-1)
    document = {
        'n_states': 3, 'n_actions': 2, 'gamma': 0.9,
        'transition': transition.tolist(),
        'reward': [[0.1, 0.2], [0.3, 0.4], [0.5, 0.123456789012345]],
        'initial_dist': [0.2, 0.3, 0.5],
    }
    filename = tmp_path / 'mdp.json'
    with open(filename, 'w') as f:
        json.dump(document, f)
    mdp = TabularMdp.from_json(filename)
    mdp.writeto(tmp_path / 'copy.json')
    with open(tmp_path / 'copy.json') as f:
        assert json.load(f) == document


def test_from_dict_missing_key():
    with raises(ValueError, match='gamma'):
        TabularMdp.from_dict({
            'n_states': 1, 'n_actions': 1, 'transition': [[[1.0]]],
            'reward': [[0.0]], 'initial_dist': [1.0]})


def test_policy():
    policy = Policy.deterministic([1, 0], 2)
    assert policy.is_deterministic
    assert policy.probs.tolist() == [[0.0, 1.0], [1.0, 0.0]]
    assert policy.to_dict() == {'actions': [1, 0]}
    with raises(ValueError):
        Policy.deterministic([2], 2)
    with raises(ValueError):
        Policy.stochastic([[0.5, 0.4]])
    assert not Policy.uniform(3, 4).is_deterministic


def test_value_table():
    table = ValueTable(np.array([1.0, 2.0, 3.0]),
                       np.array([True, False, True]))
    assert table.is_partial
    assert table.get(0) == 1.0
    assert table.get(1) is None
    assert table.filled(-1.0).tolist() == [1.0, -1.0, 3.0]
    assert table.restrict([True, True, False]).get(2) is None
    with raises(ValueError):
        ValueTable(np.array([np.inf]))


def test_q_table():
    with raises(ValueError):
        QTable(np.array([[np.nan]]))
