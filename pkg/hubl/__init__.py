#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' hubl: heuristic blending laboratory for tabular offline RL '''

import jax
jax.config.update('jax_enable_x64', True)

from . import mdp
from . import data
from . import relabel
from . import solver
from . import analysis
from .version import version as __version__
