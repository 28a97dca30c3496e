# -*- coding: utf-8 -*-
from .engine import Answer, Solver, solve, builtin_compare, DEFAULT_DEPTH_BOUND, COMPARISONS
from .model import Model, least_model, universe, drs_holds

__all__ = [
    'Answer', 'Solver', 'solve', 'builtin_compare', 'DEFAULT_DEPTH_BOUND', 'COMPARISONS',
    'Model', 'least_model', 'universe', 'drs_holds'
]
