#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import raises
import numpy as np

from .util import *
from hubl.analysis.lemma import *


def test_suite_full_support(small):
    mdp, _, mu = small
    report = lemma_suite(
        mdp, mu, behavior_values(mdp, mu), 0.4, full_support(mdp))
    assert report.hypothesis_failures == []
    assert report.passed
    assert set(report.to_dict()) == {
        'value_identity', 'pessimism', 'occupancy_bound',
        'ablation_pessimism'}


def test_value_identity_hypothesis(small):
    mdp, _, mu = small
    result = value_identity(mdp, mu, np.zeros(4), 0.4, full_support(mdp))
    assert not result.hypothesis_ok
    assert not result.passed
    assert 'V^mu' in result.note


def test_pessimism_hypothesis(small):
    mdp, _, _ = small
    high = np.full(4, 2.0 * mdp.v_max)
    assert not pessimism(mdp, high, 0.4, full_support(mdp)).hypothesis_ok
    assert pessimism(mdp, np.zeros(4), 0.4, full_support(mdp)).passed


def test_occupancy_hypothesis(small):
    mdp, _, mu = small
    support = full_support(mdp)
    support[:, 1] = False
    result = occupancy_bound(mdp, mu, np.zeros(4), 0.4, support)
    assert not result.hypothesis_ok
    assert 'unsupported actions' in result.note


def test_ablation(small):
    mdp, pi_star, _ = small
    result = ablation_pessimism(
        mdp, pi_star, np.ones(4), 0.6, full_support(mdp))
    assert result.passed


def test_report_lookup(small):
    mdp, _, mu = small
    report = lemma_suite(mdp, mu, np.zeros(4), 0.4, full_support(mdp))
    assert report['value_identity'].name == 'value_identity'
    assert 'value_identity' in report.hypothesis_failures
    with raises(KeyError):
        report['missing']
