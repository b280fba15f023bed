#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Define TableContainer '''

from dataclasses import dataclass
import json

import numpy as np
import pandas as pd


@dataclass(frozen=True)
class TableContainer:
    ''' pandas DataFrame with I/O functions

    Child classes define `__columns__`, a mapping from the column names to
    their dtypes. Rows are kept in the order given.

    Attributes:
      table (DataFrame):
          Table of records.
    '''
    table: pd.DataFrame

    __columns__ = {}

    def __post_init__(self):
        missing = [c for c in self.__columns__ if c not in self.table.columns]
        if missing:
            raise ValueError(f'missing columns: {missing}')
        table = self.table[list(self.__columns__)].astype(self.__columns__)
        object.__setattr__(self, 'table', table.reset_index(drop=True))

    def __len__(self):
        return len(self.table)

    def __getitem__(self, key):
        return self.table[key]

    def has(self, *items):
        names = self.table.columns
        return all([name in names for name in items])

    def column(self, name):
        ''' Return a column as a numpy array '''
        return self.table[name].to_numpy()

    @classmethod
    def from_records(cls, records):
        return cls(pd.DataFrame.from_records(
            list(records), columns=list(cls.__columns__)))

    @classmethod
    def concat(cls, *containers):
        return cls(pd.concat([c.table for c in containers], ignore_index=True))

    @classmethod
    def from_csv(cls, filename):
        ''' Load a table from a CSV file

        Arguments:
          filename (str):
              The path to the CSV file.

        Returns:
          A table instance.
        '''
        table = pd.read_csv(filename, float_precision='round_trip')
        return cls(table)

    @classmethod
    def from_jsonl(cls, filename):
        ''' Load a table from a JSON Lines file '''
        table = pd.read_json(
            filename, lines=True, precise_float=True,
            dtype=cls.__columns__)
        if table.empty:
            table = pd.DataFrame(columns=list(cls.__columns__))
        return cls(table)

    @classmethod
    def from_file(cls, filename):
        ''' Load a table, choosing the format from the file extension '''
        if str(filename).endswith('.csv'):
            return cls.from_csv(filename)
        return cls.from_jsonl(filename)

    def writeto(self, filename):
        ''' Dump the table into a file

        The format is CSV if the name ends with `.csv`, and JSON Lines
        otherwise. Floats are written with the shortest round-trip repr.

        Arguments:
          filename (str):
              The path to the output file.
        '''
        if str(filename).endswith('.csv'):
            self.table.to_csv(filename, index=False)
            return
        with open(filename, 'w') as f:
            for record in self.table.to_dict(orient='records'):
                record = {k: _python_scalar(v) for k, v in record.items()}
                f.write(json.dumps(record) + '\n')


def _python_scalar(value):
    if isinstance(value, np.generic):
        return value.item()
    return value
