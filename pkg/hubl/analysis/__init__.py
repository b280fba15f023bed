#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Exact analysis of heuristic blending on tabular MDPs '''

from .decomposition import DecompositionReport, decomposition_check
from .decomposition import bias_term, regret_term
from .bound import BoundReport, evaluate_bounds, bias_bound, regret_bound
from .bound import classical_regret_bound, concentrability, mu_min
from .lemma import LemmaReport, LemmaResult, lemma_suite
from .instance import RandomInstance, random_instance, random_policy
from .scaling import ScalingFit, evaluate_run, regret_scaling, RUN_COLUMNS
