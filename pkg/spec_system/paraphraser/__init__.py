# -*- coding: utf-8 -*-
from .schema import ParaphraseSchema, PatternLiteral, Slot, parse_schemata, load_schemata, parse_pattern_literal
from .paraphraser import Paraphrase, paraphrase_kb, fill_template, resolve_articles, grapheme
from .feedback import feedback_sentence, answer_sentence, describe_term, INDIVIDUAL

__all__ = [
    'ParaphraseSchema', 'PatternLiteral', 'Slot', 'parse_schemata', 'load_schemata', 'parse_pattern_literal',
    'Paraphrase', 'paraphrase_kb', 'fill_template', 'resolve_articles', 'grapheme',
    'feedback_sentence', 'answer_sentence', 'describe_term', 'INDIVIDUAL'
]
