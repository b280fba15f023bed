#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import fixture
import json

from hubl.cli.config import RunConfig


def write_config(directory, document):
    filename = str(directory / 'config.json')
    with open(filename, 'w') as f:
        json.dump(document, f)
    return filename


@fixture
def small_sweep():
    ''' Two sizes, two factors, one design, three seeds '''
    return RunConfig.from_dict({
        'mdp_spec': 'chain',
        'max_len': 10,
        'sweep': {
            'n_tuples': [100, 200],
            'alphas': [0.0, 0.1],
            'strategies': ['constant'],
            'seeds': [0, 1, 2],
        },
    })


def one_state_mdp(gamma):
    return {
        'n_states': 1, 'n_actions': 1, 'gamma': gamma,
        'transition': [[[1.0]]], 'reward': [[0.5]], 'initial_dist': [1.0],
    }
