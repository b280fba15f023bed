#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Resumable parameter sweeps '''

from concurrent.futures import ThreadPoolExecutor
import logging
import os

import pandas as pd
from tqdm import tqdm

from ..analysis.scaling import RUN_COLUMNS, evaluate_run

logger = logging.getLogger(__name__)

__keys__ = ('seed', 'N', 'alpha', 'strategy')


def _key(seed, n_tuples, alpha, strategy):
    return (int(seed), int(n_tuples), float(alpha), str(strategy))


def completed_keys(filename):
    ''' Keys (seed, N, alpha, strategy) of the rows already in a CSV '''
    if not os.path.exists(filename):
        return set(), pd.DataFrame(columns=list(RUN_COLUMNS))
    table = pd.read_csv(filename, float_precision='round_trip')
    missing = [c for c in RUN_COLUMNS if c not in table.columns]
    if missing:
        raise ValueError(f'{filename}: missing columns {missing}')
    keys = {_key(*row) for row in table[list(__keys__)].itertuples(
        index=False)}
    return keys, table[list(RUN_COLUMNS)]


def run_sweep(config, filename, workers=None, progress=False):
    ''' Run every grid point of `config.sweep` not yet in `filename`

    Rows are evaluated by a bounded thread pool. The CSV is rewritten in
    grid order after every run, so an interrupted sweep can be resumed.

    Arguments:
      config (RunConfig): The configuration.
      filename (str): The CSV file of the sweep.
      workers (int, optional): Overrides `config.sweep.workers`.
      progress (bool): Show a progress bar.

    Returns:
      The sweep table as a DataFrame.
    '''
    mdp = config.build_mdp()
    behavior = config.behavior.build(mdp)
    options = {'l_coeff': config.solver.l_coeff}
    if config.solver.v_max is not None:
        options['v_max'] = config.solver.v_max
    grid = config.sweep.grid()
    order = {_key(seed, n, alpha, s): i
             for i, (n, alpha, s, seed) in enumerate(grid)}

    done, table = completed_keys(filename)
    pending = [p for p in grid if _key(p[3], p[0], p[1], p[2]) not in done]
    logger.info('%d of %d runs pending', len(pending), len(grid))

    def run(point):
        n_tuples, alpha, strategy, seed = point
        return evaluate_run(
            mdp, behavior, n_tuples, alpha, strategy, seed,
            config.max_len, **options)

    def ordered(rows):
        frame = pd.DataFrame(rows, columns=list(RUN_COLUMNS))
        rank = [order.get(_key(*k), len(order))
                for k in frame[list(__keys__)].itertuples(index=False)]
        return frame.assign(_rank=rank).sort_values(
            '_rank', kind='stable').drop(columns='_rank')

    rows = table.to_dict('records')
    workers = workers or config.sweep.workers
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = pool.map(run, pending)
        for row in tqdm(results, total=len(pending), disable=not progress):
            rows.append(row)
            ordered(rows).to_csv(filename, index=False)
    return ordered(rows).reset_index(drop=True)
