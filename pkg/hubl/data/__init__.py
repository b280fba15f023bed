#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Offline datasets '''

from .trajectory import Trajectory, Dataset, TransitionTable
from .trajectory import TERMINAL, TIMEOUT
from .rollout import rollout, rollout_transitions
from .stats import DataStats, stats, exact_support, count_pairs
from .montecarlo import mc_state_values, discounted_returns
