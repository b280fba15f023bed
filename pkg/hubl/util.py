#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' miscellaneous tools
'''

import hashlib
import json
import sys

import numpy as np

__prob_atol__ = 1e-12


def eprint(message):
    print(message, file=sys.stderr)


def check_distribution(array, name, axis=-1, atol=__prob_atol__):
    ''' Validate an array of probability vectors

    Arguments:
      array (ndarray):
          Probabilities. Every slice along `axis` should sum to one.
      name (str):
          The field name reported in the error message.

    Returns:
      The validated array as a float64 ndarray.
    '''
    array = np.asarray(array, dtype=float)
    if not np.all(np.isfinite(array)):
        raise ValueError(f'{name}: non-finite entries')
    if np.any(array < 0):
        raise ValueError(f'{name}: negative probabilities')
    mass = array.sum(axis=axis)
    if not np.allclose(mass, 1.0, rtol=0.0, atol=atol):
        worst = float(np.max(np.abs(mass - 1.0)))
        raise ValueError(f'{name}: rows should sum to 1 (off by {worst:.3e})')
    return array


def check_unit_interval(value, name):
    ''' Raise ValueError unless every entry lies in [0, 1] '''
    value = np.asarray(value, dtype=float)
    if not np.all(np.isfinite(value)) \
       or np.any(value < 0.0) or np.any(value > 1.0):
        raise ValueError(f'{name}: values should lie in [0, 1]')
    return value


def check_tolerance(tol):
    if not tol > 0:
        raise ValueError(f'tol: should be positive (got {tol})')
    return float(tol)


def canonical_hash(document):
    ''' SHA-256 of a JSON document with sorted keys '''
    text = json.dumps(document, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(text.encode('utf-8')).hexdigest()
