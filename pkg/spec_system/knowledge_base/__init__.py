# -*- coding: utf-8 -*-
from .knowledge_base import KnowledgeBase, StoredClause, AssimilationReport, save_kb, load_kb, SESSION_SOURCE
from .clause_reader import read_clause, read_goals, ClauseSyntaxError

__all__ = [
    'KnowledgeBase', 'StoredClause', 'AssimilationReport', 'save_kb', 'load_kb', 'SESSION_SOURCE',
    'read_clause', 'read_goals', 'ClauseSyntaxError'
]
