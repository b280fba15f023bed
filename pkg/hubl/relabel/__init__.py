#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Heuristic blending by data relabeling '''

from .heuristic import AnnotatedTrajectory, compute_heuristics
from .blending import BlendingStrategy, blending_factor, blending_factors
from .relabel import RelabeledTuple, RelabeledTable
from .relabel import annotate, relabel, relabel_discount_only
