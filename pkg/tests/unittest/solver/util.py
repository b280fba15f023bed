#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import fixture
import numpy as np
import pandas as pd

from hubl.data.rollout import rollout
from hubl.data.stats import stats
from hubl.mdp.benchmark import chain_mdp, noisy_expert_policy
from hubl.mdp.tabular import Policy
from hubl.relabel.relabel import RelabeledTable


@fixture
def chain():
    return chain_mdp()


@fixture
def chain_data(chain):
    behavior = noisy_expert_policy(chain, 0.4)
    return rollout(chain, behavior, 20, 50, seed=5)


def relabeled(s, a, s_next, r_tilde, gamma_tilde):
    ''' A RelabeledTable built from columns '''
    done = np.zeros(len(s), dtype=bool)
    return RelabeledTable(pd.DataFrame({
        's': s, 'a': a, 's_next': s_next, 'r_tilde': r_tilde,
        'gamma_tilde': gamma_tilde, 'done': done}))


@fixture
def covered_data(chain):
    ''' Uniform rollouts long enough to visit every pair in every split '''
    behavior = Policy(np.full((5, 2), 0.5))
    return rollout(chain, behavior, 30, 400, seed=11)
