#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import approx
import numpy as np

from .util import *
from hubl.data.stats import DataStats, count_pairs, exact_support, stats
from hubl.mdp.tabular import Policy


def test_counts(dataset):
    result = stats(dataset, 4, 2)
    assert result.counts.tolist() == [[1, 1], [1, 0], [2, 0], [0, 0]]
    assert result.n_transitions == 5
    assert result.states.tolist() == [True, True, True, False]
    assert (0, 1) in result
    assert (3, 0) not in result
    assert result.empirical_mu.sum() == approx(1.0)


def test_inferred_shape(dataset):
    result = stats(dataset)
    assert result.counts.shape == (4, 2)


def test_concat_adds_counts(dataset):
    one = stats(dataset, 4, 2)
    two = stats(dataset.concat(dataset), 4, 2)
    assert np.array_equal(two.counts, 2 * one.counts)
    assert np.array_equal(two.support, one.support)


def test_count_pairs():
    counts = count_pairs([0, 0, 1], [1, 1, 0], 2, 2)
    assert counts.tolist() == [[0, 2], [1, 0]]
    assert DataStats.from_counts(counts).support.tolist() == \
        [[False, True], [True, False]]


def test_exact_support(ring):
    mdp = ring.replace(initial_dist=np.array([1.0, 0.0, 0.0, 0.0]))
    stay = Policy.deterministic(np.zeros(4, dtype=int), 2)
    support = exact_support(mdp, stay)
    assert support.tolist() == [
        [True, False], [False, False], [False, False], [False, False]]
    advance = Policy.deterministic(np.ones(4, dtype=int), 2)
    assert exact_support(mdp, advance)[:, 1].all()
