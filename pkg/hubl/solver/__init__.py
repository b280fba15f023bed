#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Offline value iteration with lower confidence bounds '''

from .split import SplitDataset, horizon_T, split_dataset
from .vilcb import VilcbConfig, VilcbResult, penalty, log_factor
from .vilcb import vi_lcb, vi_lcb_hubl, blend_transitions
