#!/usr/bin/env python
# -*- coding: utf-8 -*-
from hypothesis import given, settings
from hypothesis.strategies import integers, floats, composite
import numpy as np


def seeds():
    return integers(0, 2**32 - 1)


@composite
def generators(draw):
    return np.random.default_rng(seed=draw(seeds()))
