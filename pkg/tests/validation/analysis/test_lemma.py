#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np

from .util import *
from hubl.analysis.instance import random_instance
from hubl.analysis.lemma import ablation_pessimism, lemma_suite
from hubl.mdp.bellman import policy_evaluation


@settings(deadline=None, max_examples=100)
@given(generators(), floats(0.0, 1.0))
def test_lemma_suite(gen, lambda_const):
    inst = random_instance(gen)
    v_mu = policy_evaluation(inst.mdp, inst.mu, 1e-12).values
    report = lemma_suite(inst.mdp, inst.mu, v_mu, lambda_const, inst.support)
    assert report.hypothesis_failures == []
    assert report.passed


@settings(deadline=None, max_examples=50)
@given(generators(), floats(0.0, 1.0))
def test_ablation_pessimism(gen, lambda_const):
    inst = random_instance(gen)
    result = ablation_pessimism(
        inst.mdp, inst.pi, inst.h.filled(0.0), lambda_const, inst.support)
    assert result.hypothesis_ok
    assert result.max_violation <= 1e-8
