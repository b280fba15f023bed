#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
import os

from .util import *
from hubl.cli.main import main


def _read(filename):
    with open(filename) as f:
        return json.load(f)


def test_pipeline(tmp_path, capsys):
    out = str(tmp_path)
    assert main(['-o', out, 'generate', '-n', '20', '-l', '10',
                 '-b', 'noisy', '--epsilon', '0.3']) == 0
    dataset = os.path.join(out, 'dataset.jsonl')
    manifest = _read(dataset + '.manifest.json')
    assert manifest['n_traj'] == 20
    assert manifest['N'] == 200
    assert len(manifest['config_hash']) == 64

    assert main(['-o', out, 'relabel', dataset, '-a', '0.2']) == 0
    assert 'missing bootstrap values: 0' in capsys.readouterr().out
    tuples = os.path.join(out, 'tuples.jsonl')
    assert _read(tuples + '.manifest.json')['N'] == 200

    assert main(['-o', out, 'solve', tuples, '-a', '0.2']) == 0
    policy = _read(os.path.join(out, 'policy.json'))
    assert len(policy['actions']) == 5
    assert policy['evaluation']['gap'] >= -1e-9
    manifest = _read(os.path.join(out, 'policy.json.manifest.json'))
    assert manifest['T'] >= 1
    assert manifest['seed'] == 0
    assert manifest['alpha'] == 0.2


def test_solve_raw_trajectories(tmp_path):
    out = str(tmp_path)
    assert main(['-o', out, 'generate', '-n', '10', '-l', '10']) == 0
    dataset = os.path.join(out, 'dataset.jsonl')
    assert main(['-o', out, 'solve', dataset, '--baseline']) == 0
    assert main(['-o', out, 'solve', dataset, '-a', '0.1']) == 0


def test_relabel_csv(tmp_path):
    out = str(tmp_path)
    assert main(['-o', out, 'generate', '-n', '5', '-l', '4']) == 0
    dataset = os.path.join(out, 'dataset.jsonl')
    assert main(['-o', out, 'relabel', dataset, '--format', 'csv',
                 '--ablation', '--bootstrap', 'mc']) == 0
    assert os.path.exists(os.path.join(out, 'tuples.csv'))


def test_relabel_without_bootstrap(tmp_path, capsys):
    out = str(tmp_path)
    assert main(['-o', out, 'generate', '-n', '5', '-l', '4']) == 0
    dataset = os.path.join(out, 'dataset.jsonl')
    assert main(['-o', out, 'relabel', dataset, '--bootstrap', 'none']) == 0
    assert 'missing bootstrap values: 5' in capsys.readouterr().out
    tuples = os.path.join(out, 'tuples.jsonl')
    assert _read(tuples + '.manifest.json')['missing_bootstrap'] == 5


def test_baseline_on_relabeled(tmp_path, capsys):
    out = str(tmp_path)
    assert main(['-o', out, 'generate', '-n', '5', '-l', '4']) == 0
    dataset = os.path.join(out, 'dataset.jsonl')
    assert main(['-o', out, 'relabel', dataset]) == 0
    tuples = os.path.join(out, 'tuples.jsonl')
    assert main(['-o', out, 'solve', tuples, '--baseline']) == 2
    assert 'baseline' in capsys.readouterr().err


def test_analyze(tmp_path):
    out = str(tmp_path)
    assert main(['-o', out, 'analyze', '-n', '5']) == 0
    summary = _read(os.path.join(out, 'analysis.json'))
    assert summary['instances'] == 5
    assert summary['failures'] == 0
    assert summary['max_residual'] <= 1e-8


def test_sweep(tmp_path, capsys):
    config = write_config(tmp_path, {
        'mdp_spec': 'chain',
        'max_len': 10,
        'sweep': {'n_tuples': [100, 200], 'alphas': [0.1], 'seeds': [0]},
    })
    out = str(tmp_path / 'out')
    assert main(['-c', config, '-o', out, 'sweep']) == 0
    assert 'log-log slope' in capsys.readouterr().out
    assert os.path.exists(os.path.join(out, 'sweep.csv.manifest.json'))


def test_output_env(tmp_path, monkeypatch):
    monkeypatch.setenv('HUBL_OUT', str(tmp_path / 'env'))
    assert main(['generate', '-n', '2', '-l', '2']) == 0
    assert os.path.exists(str(tmp_path / 'env' / 'dataset.jsonl'))


def test_config_error(tmp_path, capsys):
    config = write_config(tmp_path, {'mdp_spec': one_state_mdp(1.5)})
    assert main(['-c', config, '-o', str(tmp_path), 'generate']) == 2
    assert 'gamma' in capsys.readouterr().err


def test_unknown_key(tmp_path, capsys):
    config = write_config(tmp_path, {'solver': {'foo': 1}})
    assert main(['-c', config, 'analyze']) == 2
    assert 'solver.foo' in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(['-c', str(tmp_path / 'missing.json'), 'analyze']) == 3
