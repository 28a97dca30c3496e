# -*- coding: utf-8 -*-
from .terms import Var, Const, Num, Skolem, Term, Literal, NafConjunction, Goal, Clause, MultiHeadClause, term_vars
from .substitution import (
    Bindings, walk, resolve_term, apply_goal, apply_clause, unify_terms, unify_literals, match_terms, match_goals,
    rename, rename_apart, standardize, is_variant, is_ground, constants_of, map_clause_terms, skolem_indices,
    reindex_skolems
)
from .translator import Counters, Translation, Query, translate_assertion, translate_query

__all__ = [
    'Var', 'Const', 'Num', 'Skolem', 'Term', 'Literal', 'NafConjunction', 'Goal', 'Clause', 'MultiHeadClause',
    'term_vars', 'Bindings', 'walk', 'resolve_term', 'apply_goal', 'apply_clause', 'unify_terms', 'unify_literals',
    'match_terms', 'match_goals', 'rename', 'rename_apart', 'standardize', 'is_variant', 'is_ground', 'constants_of',
    'map_clause_terms', 'skolem_indices', 'reindex_skolems', 'Counters',
    'Translation', 'Query', 'translate_assertion', 'translate_query'
]
