#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Run configuration of the command-line pipeline

A run is described by one JSON document. Command-line flags override the
document, which overrides the defaults defined here.
'''

from dataclasses import dataclass, field, fields, asdict, replace
from typing import Optional, Tuple, Union
import json
import os

from ..mdp.benchmark import benchmark_mdp, behavior_policy, chain_mdp
from ..mdp.tabular import TabularMdp
from ..util import canonical_hash

__output_env__ = 'HUBL_OUT'
__default_output__ = 'hubl_out'


def _from_dict(cls, document, prefix):
    ''' Build a flat dataclass, rejecting unknown keys '''
    if not isinstance(document, dict):
        raise ValueError(f'{prefix}: should be an object')
    names = {f.name for f in fields(cls)}
    for key in document:
        if key not in names:
            raise ValueError(f'{prefix}.{key}: unknown key')
    return cls(**document)


def _as_tuple(values, name):
    if isinstance(values, (int, float, str)):
        values = [values]
    values = tuple(values)
    if len(values) == 0:
        raise ValueError(f'{name}: should not be empty')
    return values


@dataclass(frozen=True)
class BehaviorConfig:
    ''' The data-collection policy: expert, noisy (epsilon), or uniform '''
    kind: str = 'expert'
    epsilon: float = 0.0

    def __post_init__(self):
        if self.kind not in ('expert', 'noisy', 'uniform'):
            raise ValueError(f'behavior.kind: unsupported "{self.kind}"')
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError('behavior.epsilon: should be in [0, 1]')

    def build(self, mdp):
        return behavior_policy(mdp, self.kind, self.epsilon)


@dataclass(frozen=True)
class RelabelConfig:
    strategy: str = 'constant'
    alpha: float = 0.1
    ablation: bool = False
    bootstrap: str = 'mc'

    def __post_init__(self):
        if self.strategy not in ('constant', 'sigmoid', 'rank'):
            raise ValueError(
                f'relabel.strategy: unsupported "{self.strategy}"')
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError('relabel.alpha: should be in [0, 1]')
        if self.bootstrap not in ('none', 'mc'):
            raise ValueError(
                f'relabel.bootstrap: unsupported "{self.bootstrap}"')


@dataclass(frozen=True)
class SolverConfig:
    ''' Options of VI-LCB; `v_max` defaults to 1/(1-gamma) '''
    alpha: float = 0.1
    seed: int = 0
    v_max: Optional[float] = None
    l_coeff: float = 2000.0
    baseline: bool = False

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError('solver.alpha: should be in [0, 1]')
        if self.seed < 0:
            raise ValueError('solver.seed: should be non-negative')
        if self.v_max is not None and not self.v_max > 0:
            raise ValueError('solver.v_max: should be positive')
        if not self.l_coeff > 0:
            raise ValueError('solver.l_coeff: should be positive')

    def options(self):
        ''' Keyword arguments of VilcbConfig.for_mdp '''
        options = dict(seed=self.seed, l_coeff=self.l_coeff,
                       lambda_const=0.0 if self.baseline else self.alpha)
        if self.v_max is not None:
            options['v_max'] = self.v_max
        return options


@dataclass(frozen=True)
class SweepConfig:
    ''' The grid of a sweep: the cross product of every list '''
    n_tuples: Tuple[int, ...] = (1000, 4000, 16000, 64000)
    alphas: Tuple[float, ...] = (0.0, 0.1)
    strategies: Tuple[str, ...] = ('constant',)
    seeds: Tuple[int, ...] = tuple(range(20))
    workers: int = 1

    def __post_init__(self):
        for name in ('n_tuples', 'alphas', 'strategies', 'seeds'):
            object.__setattr__(
                self, name, _as_tuple(getattr(self, name), f'sweep.{name}'))
        if any(n < 1 for n in self.n_tuples):
            raise ValueError('sweep.n_tuples: should be positive')
        if any(not 0.0 <= a <= 1.0 for a in self.alphas):
            raise ValueError('sweep.alphas: should be in [0, 1]')
        if self.workers < 1:
            raise ValueError('sweep.workers: should be positive')

    def grid(self):
        ''' Grid points (N, alpha, strategy, seed) in grid order '''
        return [
            (n, alpha, strategy, seed)
            for n in self.n_tuples
            for alpha in self.alphas
            for strategy in self.strategies
            for seed in self.seeds]


@dataclass(frozen=True)
class AnalysisConfig:
    instances: int = 100
    seed: int = 0

    def __post_init__(self):
        if self.instances < 1:
            raise ValueError('analysis.instances: should be positive')


@dataclass(frozen=True)
class RunConfig:
    ''' A complete pipeline configuration

    Attributes:
      mdp_spec (str or dict): "benchmark", "chain", a path to an MDP JSON
          file, or an inline MDP document.
      behavior (BehaviorConfig): The behaviour policy.
      n_traj (int): The number of trajectories of `generate`.
      max_len (int): The rollout horizon.
      seed (int): The seed of the rollouts.
      terminal_states (tuple): States that end a trajectory.
      relabel (RelabelConfig): Options of `relabel`.
      solver (SolverConfig): Options of `solve`.
      sweep (SweepConfig): The grid of `sweep`.
      analysis (AnalysisConfig): Options of `analyze`.
      output (str): The output directory.
    '''
    mdp_spec: Union[str, dict] = 'benchmark'
    behavior: BehaviorConfig = field(default_factory=BehaviorConfig)
    n_traj: int = 100
    max_len: int = 20
    seed: int = 0
    terminal_states: Tuple[int, ...] = ()
    relabel: RelabelConfig = field(default_factory=RelabelConfig)
    solver: SolverConfig = field(default_factory=SolverConfig)
    sweep: SweepConfig = field(default_factory=SweepConfig)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)
    output: str = __default_output__

    def __post_init__(self):
        if self.n_traj < 1:
            raise ValueError('n_traj: should be positive')
        if self.max_len < 1:
            raise ValueError('max_len: should be positive')
        if self.seed < 0:
            raise ValueError('seed: should be non-negative')
        object.__setattr__(
            self, 'terminal_states', tuple(self.terminal_states))
        if isinstance(self.mdp_spec, str) \
           and self.mdp_spec not in ('benchmark', 'chain') \
           and not os.path.isfile(self.mdp_spec):
            raise FileNotFoundError(f'mdp_spec: no such file {self.mdp_spec}')

    @classmethod
    def from_dict(cls, document):
        if not isinstance(document, dict):
            raise ValueError('config: should be a JSON object')
        nested = {
            'behavior': BehaviorConfig,
            'relabel': RelabelConfig,
            'solver': SolverConfig,
            'sweep': SweepConfig,
            'analysis': AnalysisConfig,
        }
        names = {f.name for f in fields(cls)}
        params = {}
        for key, value in document.items():
            if key not in names:
                raise ValueError(f'{key}: unknown key')
            if key in nested:
                value = _from_dict(nested[key], value, key)
            params[key] = value
        return cls(**params)

    @classmethod
    def from_json(cls, filename):
        ''' Load a configuration file; a missing file raises OSError '''
        with open(filename, 'r') as f:
            try:
                document = json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f'{filename}:{e.lineno}: {e.msg}') from e
        return cls.from_dict(document)

    def to_dict(self):
        return asdict(self)

    def digest(self):
        ''' SHA-256 of the canonical JSON form of the configuration '''
        return canonical_hash(self.to_dict())

    def override(self, section=None, **flags):
        ''' Replace the fields given by command-line flags

        Flags set to None are left untouched. With `section`, the flags
        apply to that nested configuration.
        '''
        flags = {k: v for k, v in flags.items() if v is not None}
        if not flags:
            return self
        if section is None:
            return replace(self, **flags)
        return replace(
            self, **{section: replace(getattr(self, section), **flags)})

    def build_mdp(self):
        ''' Instantiate the MDP described by `mdp_spec` '''
        spec = self.mdp_spec
        if isinstance(spec, dict):
            return TabularMdp.from_dict(spec)
        if spec == 'benchmark':
            return benchmark_mdp()
        if spec == 'chain':
            return chain_mdp()
        return TabularMdp.from_json(spec)

    def output_dir(self):
        ''' The output directory; HUBL_OUT overrides the configuration '''
        return os.environ.get(__output_env__) or self.output


def load_config(filename=None):
    ''' Load a configuration file, or the defaults without one '''
    if filename is None:
        return RunConfig()
    return RunConfig.from_json(filename)


def write_manifest(filename, config, seed, **counts):
    ''' Write `<filename>.manifest.json` next to an artifact

    Returns:
      The path of the manifest.
    '''
    manifest = {
        'artifact': os.path.basename(filename),
        'config_hash': config.digest(),
        'seed': seed,
    }
    manifest.update(counts)
    path = f'{filename}.manifest.json'
    with open(path, 'w') as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write('\n')
    return path
