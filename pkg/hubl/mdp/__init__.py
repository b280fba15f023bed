#!/usr/bin/env python
# -*- coding: utf-8 -*-
''' Tabular MDPs and exact dynamic-programming oracles '''

from .tabular import TabularMdp, Policy, ValueTable, QTable
from .bellman import policy_evaluation, value_iteration
from .bellman import discounted_occupancy, state_visitation
from .bellman import average_occupancy
from .bellman import greedy_policy, q_from_values, bellman_residual
from .reshape import ReshapedMdp, reshape_mdp, discount_only_mdp
from .reshape import reshaped_policy_evaluation, reshaped_value_iteration
from .reshape import reshaped_visitation, support_states
from .benchmark import benchmark_mdp, chain_mdp, random_mdp
from .benchmark import behavior_policy, expert_policy, noisy_expert_policy
