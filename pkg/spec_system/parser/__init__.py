# -*- coding: utf-8 -*-
from .tokens import Token, tokenize, sentence_text
from .syntax import SyntaxNode, ParseResult, Placeholder, Indefinite, VerbEvent, reading_paraphrase
from .grammar import Grammar
from .drs_builder import DrsBuilder, build_increment
from .parser import parse_sentence, check_known_words

__all__ = [
    'Token', 'tokenize', 'sentence_text', 'SyntaxNode', 'ParseResult', 'Placeholder', 'Indefinite', 'VerbEvent',
    'reading_paraphrase', 'Grammar', 'DrsBuilder', 'build_increment', 'parse_sentence', 'check_known_words'
]
