#!/usr/bin/env python
# -*- coding: utf-8 -*-
from pytest import raises
import pandas as pd

from .util import *
from hubl.analysis.scaling import RUN_COLUMNS
from hubl.cli.sweep import completed_keys, run_sweep


def test_sweep_rows(small_sweep, tmp_path):
    filename = str(tmp_path / 'sweep.csv')
    table = run_sweep(small_sweep, filename, workers=2)
    assert len(table) == 12
    assert tuple(table.columns) == RUN_COLUMNS
    assert table['N'].tolist()[:6] == [100] * 6
    assert pd.read_csv(filename).shape == (12, len(RUN_COLUMNS))
    assert (table['residual'].abs() <= 1e-8).all()


def test_resume(small_sweep, tmp_path):
    filename = str(tmp_path / 'sweep.csv')
    full = run_sweep(small_sweep, filename)
    full.iloc[:5].to_csv(filename, index=False)
    resumed = run_sweep(small_sweep, filename, workers=3)
    keys = ['seed', 'N', 'alpha', 'strategy']
    assert len(resumed) == 12
    assert not resumed.duplicated(subset=keys).any()
    assert resumed['total_gap'].tolist() == full['total_gap'].tolist()
    again = run_sweep(small_sweep, filename)
    assert len(again) == 12


def test_completed_keys(tmp_path):
    filename = str(tmp_path / 'sweep.csv')
    keys, table = completed_keys(filename)
    assert keys == set()
    assert table.empty
    pd.DataFrame({'seed': [0]}).to_csv(filename, index=False)
    with raises(ValueError, match='missing columns'):
        completed_keys(filename)
