# -*- coding: utf-8 -*-
from .lex_entry import LexEntry, CATEGORIES, OPEN_CATEGORIES, VERB_KINDS, make_pred
from .lexicon import Lexicon
from .lexicon_file import load_lexicon, save_lexicon, parse_entry_line, format_entry_line
from .closed_class import CLOSED_CLASS
from . import inflection

__all__ = [
    'LexEntry', 'CATEGORIES', 'OPEN_CATEGORIES', 'VERB_KINDS', 'make_pred', 'Lexicon',
    'load_lexicon', 'save_lexicon', 'parse_entry_line', 'format_entry_line', 'CLOSED_CLASS', 'inflection'
]
